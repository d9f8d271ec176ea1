#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

enum class ErrorKind {
  CapExceeded,
  InvalidGenerator,
  InvalidInput,
  DegreeMismatch,
  NotSubgroup,
  NotElement,
  NotMaterialized,
  NotTransitive,
  NotNormal,
  NotGeneratingCoset,
  NotHall,
  NoComplementFound,
  BadPartition,
  NotPrime,
  TooLarge,
  UnsupportedFamily,
  Singular,
  FamilyMismatch,
  UnknownCorpus,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this type; `kind()` is
/// what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace drg
