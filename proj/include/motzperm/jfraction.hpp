#pragma once

#include <functional>
#include <string>
#include <vector>

#include "motzperm/algebra.hpp"

namespace motzperm {

/// Level coefficients of a Jacobi continued fraction
///
///   1 / (1 − γ₀z − λ₁z² / (1 − γ₁z − λ₂z² / (1 − ...)))
///
/// supplied as generators evaluated on demand.
struct JFractionSpec {
    std::string name;
    std::function<MultiPoly(unsigned)> gamma;   // h ≥ 0
    std::function<MultiPoly(unsigned)> lambda;  // h ≥ 1
};

/// Entry n is the coefficient of zⁿ.
struct SeriesTable {
    std::vector<MultiPoly> coeffs;
    bool operator==(const SeriesTable&) const = default;
};

constexpr int kMaxExpansionOrder = 30;
constexpr int kMaxBruteForceSize = 9;

/// Coefficients of z⁰..z^order, as the weighted count of Motzkin paths with
/// γ_h per level step at height h and λ_h per down step from height h.
SeriesTable expand(const JFractionSpec& spec, int order);

/// λ_h = h² t^(2h−1), γ_h = (2h+1) t^h.
JFractionSpec preset_depth();

/// λ_h = s [h]_q² (qt)^(2h−1), γ_h = ((1+s)[h]_q + p q^h) (qt)^h.
JFractionSpec preset_refined();

/// Σ over S_n of q^inv p^fix s^exc t^depth, by enumeration. n ≤ 9.
MultiPoly brute_force_gf(int n);

}  // namespace motzperm
