#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pclat {

enum class ErrorKind {
  InvalidInput,
  NotAPoset,
  NotALattice,
  NoBoundedStructure,
  NotClosed,
  NotModular,
  InvalidWitness,
  ClassificationFailed,
  OutOfRange,
  UnknownFixture,
  OrderTooLarge,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this type. When the
/// failure is about a specific pair of elements (an unclosed pair, a pair
/// without a meet or join) the pair is attached.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& what,
               std::optional<std::pair<int, int>> pair = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::pair<int, int>>& pair() const noexcept { return pair_; }

 private:
  ErrorKind kind_;
  std::optional<std::pair<int, int>> pair_;
};

}  // namespace pclat
