#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lfgt {

enum class ErrorKind {
  // lattice
  NotAPartialOrder,
  NoBound,
  NotALattice,
  UnknownElement,
  UnknownValue,
  UnknownCatalogKey,
  BadParam,
  // group
  NotAssociative,
  NoIdentity,
  NoInverse,
  MalformedTable,
  BadCycle,
  OrderCap,
  NotASubgroup,
  NotContained,
  NotAHomomorphism,
  // lsubset / lsubgroup
  DuplicateAssignment,
  MixedCarriers,
  CarrierMismatch,
  EmptyFamily,
  PointNotInMu,
  NotAnLSubgroup,
  NotAnLSubgroupOf,
  DegenerateTipTail,
  SearchBudgetExceeded,
  // verify
  BadSpec,
  OracleCapExceeded,
  // cli
  SyntaxError,
  UnknownReference,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `line` is set by the file parsers.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message,
        std::optional<int> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> line() const noexcept { return line_; }
  /// The message without the kind and line prefix.
  const std::string &message() const noexcept { return message_; }

  /// True for errors that mean "the input was bad" rather than "we gave up".
  bool is_input_error() const noexcept;

private:
  ErrorKind kind_;
  std::optional<int> line_;
  std::string message_;
};

} // namespace lfgt
