#pragma once

// Test-only reference computations. Each one takes a different route from the
// library code it is compared against.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "motzperm/algebra.hpp"
#include "motzperm/jfraction.hpp"
#include "motzperm/permutation.hpp"

namespace oracle {

using motzperm::BigInt;
using motzperm::MultiPoly;
using motzperm::Permutation;

// Inversions counted over pairs of values instead of pairs of positions.
inline std::uint64_t inv(const Permutation& sigma) {
    const auto inverse = sigma.inverse();
    std::uint64_t count = 0;
    for (int v = 1; v <= sigma.size(); ++v)
        for (int w = v + 1; w <= sigma.size(); ++w)
            if (inverse(w) < inverse(v)) ++count;
    return count;
}

// Half the total displacement.
inline std::uint64_t depth(const Permutation& sigma) {
    std::uint64_t twice = 0;
    for (int i = 1; i <= sigma.size(); ++i) twice += static_cast<std::uint64_t>(std::abs(sigma(i) - i));
    return twice / 2;
}

// Excedances of σ are the deficiencies of σ⁻¹.
inline std::uint64_t exc(const Permutation& sigma) {
    const auto inverse = sigma.inverse();
    std::uint64_t count = 0;
    for (int j = 1; j <= sigma.size(); ++j)
        if (inverse(j) < j) ++count;
    return count;
}

inline std::uint64_t fix(const Permutation& sigma) {
    std::uint64_t count = 0;
    for (int i = 1; i <= sigma.size(); ++i) count += sigma(i) == i ? 1 : 0;
    return count;
}

// n!·[zⁿ](tan z + sec z) via 2E_{n+1} = Σ_k C(n,k) E_k E_{n−k} for n ≥ 1.
inline std::vector<BigInt> euler_numbers(int max_index) {
    std::vector<BigInt> e{1, 1};
    for (int n = 1; n < max_index; ++n) {
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += motzperm::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                   e[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
        e.push_back(sum / 2);
    }
    e.resize(static_cast<std::size_t>(max_index) + 1);
    return e;
}

// Coefficient of zⁿ of a J-fraction by listing all 3ⁿ step words and keeping
// the Motzkin paths. λ_h is charged on the down step from height h.
inline MultiPoly jfraction_by_words(const motzperm::JFractionSpec& spec, int n) {
    MultiPoly total;
    std::uint64_t words = 1;
    for (int i = 0; i < n; ++i) words *= 3;
    for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t code = w;
        int level = 0;
        bool ok = true;
        MultiPoly weight = 1;
        for (int i = 0; i < n && ok; ++i) {
            const auto step = code % 3;
            code /= 3;
            if (step == 0) {
                weight *= spec.gamma(static_cast<unsigned>(level));
            } else if (step == 1) {
                ++level;
            } else {
                if (level == 0) ok = false;
                else weight *= spec.lambda(static_cast<unsigned>(level--));
            }
        }
        if (ok && level == 0) total += weight;
    }
    return total;
}

// Coefficient of zⁿ of the derangement series, summing the double series over
// a box of (k, i) and keeping the terms that land on zⁿ.
inline MultiPoly derangement_rhs_by_box(int n) {
    const auto s = MultiPoly::var(motzperm::Var::s);
    MultiPoly total;
    for (int k = 1; k <= n + 2; ++k) {
        for (int i = 0; i <= k - 1; ++i) {
            if (k + 1 + i != n) continue;
            MultiPoly term = MultiPoly(motzperm::binomial(static_cast<unsigned>(k - 1), static_cast<unsigned>(i)));
            for (int a = 0; a < 1 + i; ++a) term *= s;
            for (int b = 0; b < k - 1 - i; ++b) term *= 1 + s;
            for (int c = 0; c < k; ++c) term *= MultiPoly::var(motzperm::Var::t);
            total += k % 2 == 0 ? term : -term;
        }
    }
    return total;
}

}  // namespace oracle
