#include "indh/error.hpp"

namespace indh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InfiniteSupport: return "InfiniteSupport";
    case ErrorKind::MissingElement: return "MissingElement";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::IncompleteDual: return "IncompleteDual";
    case ErrorKind::DuplicateIrrep: return "DuplicateIrrep";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::InvalidP: return "InvalidP";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace indh
