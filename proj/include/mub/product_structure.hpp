#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mub/matrix_core.hpp"

namespace mub {

enum class ProductVerdict { kDirect, kIndirect, kNotProduct };

/// Result of factorizing a basis over a dim_a x dim_b cut. For product
/// columns the local factors are recovered; `direct` additionally means the
/// whole matrix is A (x) B for fixed local bases (up to per-column phase),
/// i.e. distinguishable by local measurements alone. `indirect` bases need
/// the first-factor outcome fed forward to pick the second measurement.
struct ProductClassification {
  ProductVerdict verdict = ProductVerdict::kNotProduct;
  std::vector<Vector> first_factors;   // per column; empty unless product
  std::vector<Vector> second_factors;  // per column; empty unless product
};

ProductClassification classify_product_basis(const Basis& b, int dim_a,
                                             int dim_b);

/// min(p_a, p_b) + 1 product bases in dimension p_a * p_b: tensor products
/// of the local complete-set members with aligned indices m, standard last.
/// Pairwise unbiased because the factors are.
MubSet product_mub_set(std::int64_t p_a, std::int64_t p_b);

/// Whether tensor(a, b) and tensor(a2, b2) are unbiased, checked directly on
/// the product bases. Equals (a unbiased to a2) && (b unbiased to b2).
bool unbiased_product_pair_check(const Basis& a, const Basis& a2,
                                 const Basis& b, const Basis& b2,
                                 double tol = 1e-9);

/// The standard basis of dimension p^r together with the chained indirect
/// basis {|(j_1)_0>|(j_2)_{j_1}>...|(j_r)_{j_{r-1}}>} built from the local
/// complete set. The two are mutually unbiased and the second is never a
/// plain tensor product.
std::pair<Basis, Basis> blocking_pair(std::int64_t p, int r);

struct BlockedVerdict {
  bool blocked = true;
  std::optional<std::size_t> witness;  // catalog index of an extending basis
};

/// Catalog-relative blockedness: true iff no catalog basis is unbiased to
/// every member of `set`. The space of all bases is a continuum, so this is
/// deliberately not a universal claim; the default catalog below covers all
/// tensor products of the canonical local families.
BlockedVerdict is_blocked(std::span<const Basis> set,
                          std::span<const Basis> catalog, double tol = 1e-9);

/// All (p_a + 1)(p_b + 1) tensor products of canonical local complete-set
/// members, the default catalog for is_blocked.
std::vector<Basis> canonical_product_catalog(std::int64_t p_a, std::int64_t p_b);

}  // namespace mub
