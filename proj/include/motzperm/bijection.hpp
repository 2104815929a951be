#pragma once

#include "motzperm/motzkin.hpp"
#include "motzperm/permutation.hpp"

namespace motzperm {

/// Weight-preserving bijection S_n -> W_n.
///
/// Position i becomes U, D, H1, H2 or H3 according to whether i is an
/// excedance and/or an excedance target:
///
///   U   σ(i) > i and σ⁻¹(i) > i        D   σ(i) < i and σ⁻¹(i) < i
///   H1  σ(i) > i and σ⁻¹(i) < i        H2  σ(i) < i and σ⁻¹(i) > i
///   H3  σ(i) = i
///
/// Sweeping left to right, the open excedance arcs (a, σ(a)) with a < i ≤ σ(a)
/// and the open values v < i with σ⁻¹(v) ≥ i both number the current height.
/// The choice index records
///   U, H1:  how many other open arcs end beyond σ(i) (nestings over the new arc)
///   D, H2:  how many open values lie below σ(i)
/// and the q-exponent of the path weight then equals inv(σ).
WeightedMotzkinPath psi(const Permutation& sigma);

/// Inverse of psi. Throws InvalidPathError on an invalid path.
Permutation psi_inverse(const WeightedMotzkinPath& path);

/// Exponents (inv, fix, exc, depth) carried by the weight of a path.
PermutationStats weight_statistics(const Monomial& weight);

}  // namespace motzperm
