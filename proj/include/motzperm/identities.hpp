#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "motzperm/algebra.hpp"
#include "motzperm/jfraction.hpp"

namespace motzperm {

constexpr int kMaxSignedGfSize = 9;
constexpr int kMaxDerangementSize = 10;
constexpr int kMaxDerangementSeriesOrder = 30;

/// Σ over S_n of (−1)^inv s^exc t^depth, for 1 ≤ n ≤ 9.
MultiPoly signed_gf_permutations(int n);

/// F_n(s,t): Σ over derangements of (−1)^inv s^exc t^depth, 1 ≤ n ≤ 10.
MultiPoly derangement_signed_gf(int n);

/// Coefficients of z⁰..z^N of
///   Σ_{k≥1} (−1)^k Σ_{i=0}^{k−1} C(k−1,i) s^(1+i) (1+s)^(k−1−i) z^(k+1+i) t^k.
SeriesTable derangement_series_rhs(int order);

/// One row of the table of F_n split by powers of t.
struct DerangementTableRow {
    int n = 0;
    std::map<std::uint32_t, MultiPoly> cells;  // t-power -> s-polynomial
};

/// Rows n = 2..9 decomposed from enumerated F_n.
std::vector<DerangementTableRow> derangement_table();

/// The published cells for n = 2..9, each c·s^a·(1+s)^b.
std::vector<DerangementTableRow> reference_derangement_table();

}  // namespace motzperm
