#pragma once

// Independent brute-force checks used by the unit and acceptance tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "nil7/liealg.hpp"

namespace nil7::oracle {

/// Isotropy of X^2 - aY^2 - bZ^2 over Q for small squarefree a, b: an integer
/// point with |Y|, |Z| <= box, or else a confirmed local obstruction (sign,
/// primitive solutions mod 16, mod p^2 for odd p | ab). nullopt when neither
/// is found.
std::optional<bool> isotropic_by_search(long a, long b, long box = 200);

/// Primitive solubility of X^2 - aY^2 - bZ^2 = 0 modulo m = p^k.
bool primitive_solution_mod(long a, long b, long p, long m);

/// Jacobi identity by triple brackets on basis vectors.
bool jacobi(const StructureConstants& sc);

/// Betti numbers of the Chevalley-Eilenberg complex by explicit matrices of
/// d on every Lambda^k, built from the brackets (not from the presentation).
std::vector<std::size_t> betti_from_brackets(const StructureConstants& sc);

}  // namespace nil7::oracle
