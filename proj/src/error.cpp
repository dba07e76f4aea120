#include "lfgt/error.hpp"

namespace lfgt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
  case ErrorKind::NoBound: return "NoBound";
  case ErrorKind::NotALattice: return "NotALattice";
  case ErrorKind::UnknownElement: return "UnknownElement";
  case ErrorKind::UnknownValue: return "UnknownValue";
  case ErrorKind::UnknownCatalogKey: return "UnknownCatalogKey";
  case ErrorKind::BadParam: return "BadParam";
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::NoIdentity: return "NoIdentity";
  case ErrorKind::NoInverse: return "NoInverse";
  case ErrorKind::MalformedTable: return "MalformedTable";
  case ErrorKind::BadCycle: return "BadCycle";
  case ErrorKind::OrderCap: return "OrderCap";
  case ErrorKind::NotASubgroup: return "NotASubgroup";
  case ErrorKind::NotContained: return "NotContained";
  case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
  case ErrorKind::MixedCarriers: return "MixedCarriers";
  case ErrorKind::CarrierMismatch: return "CarrierMismatch";
  case ErrorKind::EmptyFamily: return "EmptyFamily";
  case ErrorKind::PointNotInMu: return "PointNotInMu";
  case ErrorKind::NotAnLSubgroup: return "NotAnLSubgroup";
  case ErrorKind::NotAnLSubgroupOf: return "NotAnLSubgroupOf";
  case ErrorKind::DegenerateTipTail: return "DegenerateTipTail";
  case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorKind::BadSpec: return "BadSpec";
  case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::UnknownReference: return "UnknownReference";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string &message,
                           std::optional<int> line) {
  std::string out(to_string(kind));
  if (line)
    out += " (line " + std::to_string(*line) + ")";
  if (!message.empty())
    out += ": " + message;
  return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string &message, std::optional<int> line)
    : std::runtime_error(format_message(kind, message, line)), kind_(kind),
      line_(line), message_(message) {}

bool Error::is_input_error() const noexcept {
  switch (kind_) {
  case ErrorKind::SearchBudgetExceeded:
  case ErrorKind::OracleCapExceeded:
  case ErrorKind::OrderCap:
    return false;
  default:
    return true;
  }
}

} // namespace lfgt
