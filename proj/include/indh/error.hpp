#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indh {

enum class ErrorKind {
  // group-core
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotSubgroup,
  NotNormal,
  InfiniteSupport,
  // rep-core
  MissingElement,
  IndexOutOfRange,
  DimensionMismatch,
  DomainMismatch,
  NotIrreducible,
  IncompleteDual,
  DuplicateIrrep,
  // transform / inversion
  GroupMismatch,
  EmptyFamily,
  InvalidP,
  RankDeficient,
  // shared
  Unsupported,
  UnknownName,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Library error. `witness` carries the integers that reproduce the failure
/// (a violating triple, an element index, an index tuple, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

}  // namespace indh
