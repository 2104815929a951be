#pragma once

#include <optional>
#include <vector>

#include "motzperm/algebra.hpp"
#include "motzperm/motzkin.hpp"
#include "motzperm/permutation.hpp"

namespace motzperm {

constexpr int kMaxEulerIndex = 50;
constexpr int kMaxImbalanceSize = 10;

/// E₀..E_N, from the Seidel (boustrophedon) triangle. N ≤ 50.
std::vector<BigInt> euler_numbers(int max_index);

/// Parity-reversing involution on weighted Motzkin paths.
///
/// Letters: U, D, A (an H2 or H3 step, no s factor) and B (an H1 step).
/// A site is an adjacent pair of letters in
///
///     AA  UD  BB  DU  UB  AU  BD  DA
///
/// The leftmost site is rewritten letter-wise, the first letter by A<->U,
/// B<->D and the second by A<->D, B<->U, keeping both choice indices. An A
/// step with choice e at height h is H2(h,e) when e < h and H3(h,0) when
/// e = h. Each rewrite changes the q-, s- and t-exponents by the same ±1,
/// and it never changes whether any other adjacent pair is a site, so the
/// map is an involution. Paths without a site are fixed.
WeightedMotzkinPath involution_on_path(const WeightedMotzkinPath& path);

/// Position (0-based) of the rewritten pair, or nullopt for a fixed path.
std::optional<std::size_t> leftmost_toggle_site(const WeightedMotzkinPath& path);

/// The path-side involution conjugated by psi.
Permutation parity_involution(const Permutation& sigma);

struct InvolutionImage {
    Permutation image;
    /// depth(σ) − depth(σ'), which equals the exc and inv differences.
    int delta = 0;
};
InvolutionImage apply_parity_involution(const Permutation& sigma);

/// Σ over S_n of (−1)^depth and (−1)^exc. n ≤ 10.
BigInt sign_imbalance_depth(int n);
BigInt sign_imbalance_exc(int n);

enum class ParityStatistic { depth, exc };

/// The same sums computed only over the fixed points of the involution.
BigInt sign_imbalance_from_fixed_points(int n, ParityStatistic stat);

}  // namespace motzperm
