#pragma once

// Curated catalog of dual objects for builtin families, subgroup naming, and
// the suite of (G, K) pairs used by the test and acceptance programs.
//
// Dual objects of a subgroup K given as a subset are obtained by finding an
// explicit isomorphism from a catalog group H onto K and pulling H's irreps
// back. No general character-table algorithm is attempted.

#include <optional>
#include <string>
#include <vector>

#include "indh/builtins.hpp"
#include "indh/group.hpp"
#include "indh/rep.hpp"

namespace indh {

/// Irreps of a builtin finite group (whole-group domain), in catalog order.
/// Accepts cyclic, dihedral, Q8, S1..S4 and direct products of those.
/// Throws UnknownName for groups outside the catalog.
std::vector<UnitaryRep> builtin_irreps(const FiniteGroupPtr& group);

/// Isomorphism H → K (K given by members of a larger group) as a vector
/// mapping H indices to parent indices, if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& h,
                                                         const CompactSubgroup& k);

/// Σ for K: the catalog dual of the matching builtin, pulled back to K.
/// Throws UnknownName if K matches no catalog group.
DualObject dual_object(const CompactSubgroup& k);

/// Validated dual from caller-supplied candidate irreps.
DualObject dual_object(const CompactSubgroup& k, std::vector<UnitaryRep> candidates);

/// Resolves "trivial", "whole", "center", "factor<i>", catalog names such
/// as "A3", "V4", "Z2", "S3" (a normal subgroup of that isomorphism type;
/// the lexicographically smallest if several), or "0,2,..." index lists.
CompactSubgroup named_subgroup(const GroupPtr& group, const std::string& name);

/// Every subgroup generated by at most `max_generators` elements, sorted.
std::vector<std::vector<std::size_t>> small_subgroups(const FiniteGroup& g,
                                                      std::size_t max_generators);

/// Center of a finite group.
std::vector<std::size_t> center(const FiniteGroup& g);

struct BuiltinPair {
  std::string group;
  std::string subgroup;
};

/// Finite (G, K) pairs with K ≠ G and G = K cases, used as the builtin suite.
std::vector<BuiltinPair> builtin_pairs();
/// Groups whose dual objects are exercised exhaustively (G = K).
std::vector<std::string> builtin_dual_groups();
/// Z × F pairs.
std::vector<BuiltinPair> builtin_zcross_pairs();

}  // namespace indh
