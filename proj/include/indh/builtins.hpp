#pragma once

// Builtin finite groups with fixed element numbering:
//   Zn : a ↦ a mod n
//   Dn : r^a s^b ↦ a + n b   (order 2n, s r s = r⁻¹)
//   Sn : permutations in lexicographic order, (p q)(x) = p(q(x))
//   Q8 : 1, -1, i, -i, j, -j, k, -k
//   A x B : (a, b) ↦ a + |A| b

#include <string>
#include <vector>

#include "indh/group.hpp"

namespace indh {

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Permutations of {0..n-1} in lexicographic order (the numbering of Sn).
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Quaternion unit of a Q8 element as a 2x2 unitary matrix.
CMatrix quaternion_matrix(std::size_t index);

/// Parses "Z4", "C4", "D3", "S3", "Q8", products "S3xZ2", and "ZxS3" for
/// the Z × F model. Throws UnknownName.
LCGroup builtin_group(const std::string& name);

/// Finite builtin by name (no leading Z factor).
FiniteGroup builtin_finite_group(const std::string& name);

}  // namespace indh
