#include "motzperm/jfraction.hpp"

#include "motzperm/error.hpp"
#include "motzperm/permutation.hpp"

namespace motzperm {

SeriesTable expand(const JFractionSpec& spec, int order) {
    require_size("expand", order, kMaxExpansionOrder);
    const auto n = static_cast<std::size_t>(order);
    const std::size_t max_height = n / 2;

    std::vector<MultiPoly> gamma(max_height + 1);
    std::vector<MultiPoly> lambda(max_height + 1);
    for (std::size_t h = 0; h <= max_height; ++h) {
        gamma[h] = spec.gamma(static_cast<unsigned>(h));
        if (h >= 1) lambda[h] = spec.lambda(static_cast<unsigned>(h));
    }

    // row[h]: weighted count of path prefixes of the current length ending at height h.
    std::vector<MultiPoly> row(max_height + 1);
    row[0] = 1;
    SeriesTable table;
    table.coeffs.reserve(n + 1);
    table.coeffs.push_back(row[0]);
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<MultiPoly> next(max_height + 1);
        // Prefixes that can no longer return to 0 in time are dropped.
        const std::size_t reachable = std::min(max_height, n - len);
        for (std::size_t h = 0; h <= reachable; ++h) {
            MultiPoly acc = row[h] * gamma[h];
            if (h >= 1) acc += row[h - 1];
            if (h + 1 <= max_height) acc += row[h + 1] * lambda[h + 1];
            next[h] = std::move(acc);
        }
        row = std::move(next);
        table.coeffs.push_back(row[0]);
    }
    return table;
}

JFractionSpec preset_depth() {
    return {"depth",
            [](unsigned h) { return MultiPoly(2LL * h + 1) * MultiPoly::var(Var::t, h); },
            [](unsigned h) {
                return MultiPoly(static_cast<long long>(h) * h) * MultiPoly::var(Var::t, 2 * h - 1);
            }};
}

JFractionSpec preset_refined() {
    return {"refined",
            [](unsigned h) {
                const auto s = MultiPoly::var(Var::s);
                const auto p = MultiPoly::var(Var::p);
                const auto qt = MultiPoly(Monomial{h, 0, 0, h});
                return ((1 + s) * q_integer(h) + p * MultiPoly::var(Var::q, h)) * qt;
            },
            [](unsigned h) {
                const auto s = MultiPoly::var(Var::s);
                const auto qh = q_integer(h);
                return s * qh * qh * MultiPoly(Monomial{2 * h - 1, 0, 0, 2 * h - 1});
            }};
}

MultiPoly brute_force_gf(int n) {
    require_size("brute_force_gf", n, kMaxBruteForceSize);
    MultiPoly total;
    for_each_permutation(n, [&](const Permutation& sigma) {
        const auto st = statistics(sigma);
        total.add_term(Monomial{static_cast<std::uint32_t>(st.inv), static_cast<std::uint32_t>(st.fix),
                                static_cast<std::uint32_t>(st.exc), static_cast<std::uint32_t>(st.depth)},
                       1);
    });
    return total;
}

}  // namespace motzperm
