#include "motzperm/identities.hpp"

#include "motzperm/error.hpp"
#include "motzperm/permutation.hpp"

namespace motzperm {

namespace {

Monomial signed_monomial(const PermutationStats& st) {
    return {0, 0, static_cast<std::uint32_t>(st.exc), static_cast<std::uint32_t>(st.depth)};
}

void require_positive(const char* op, int n) {
    if (n < 1) throw InvalidArgument(std::string(op) + ": n must be at least 1");
}

}  // namespace

MultiPoly signed_gf_permutations(int n) {
    require_positive("signed_gf_permutations", n);
    require_size("signed_gf_permutations", n, kMaxSignedGfSize);
    MultiPoly total;
    for_each_permutation(n, [&](const Permutation& sigma) {
        const auto st = statistics(sigma);
        total.add_term(signed_monomial(st), st.inv % 2 == 0 ? 1 : -1);
    });
    return total;
}

MultiPoly derangement_signed_gf(int n) {
    require_positive("derangement_signed_gf", n);
    require_size("derangement_signed_gf", n, kMaxDerangementSize);
    MultiPoly total;
    for_each_derangement(n, [&](const Permutation& sigma) {
        const auto st = statistics(sigma);
        total.add_term(signed_monomial(st), st.inv % 2 == 0 ? 1 : -1);
    });
    return total;
}

SeriesTable derangement_series_rhs(int order) {
    require_size("derangement_series_rhs", order, kMaxDerangementSeriesOrder);
    const auto s = MultiPoly::var(Var::s);
    const auto one_plus_s = 1 + s;
    SeriesTable table;
    table.coeffs.resize(static_cast<std::size_t>(order) + 1);
    // z^n collects exactly the pairs with k + 1 + i = n and 0 ≤ i ≤ k − 1.
    for (int n = 2; n <= order; ++n) {
        MultiPoly coeff;
        for (int k = 1; k <= n - 1; ++k) {
            const int i = n - 1 - k;
            if (i < 0 || i > k - 1) continue;
            const MultiPoly term =
                MultiPoly(binomial(static_cast<unsigned>(k - 1), static_cast<unsigned>(i))) *
                MultiPoly::var(Var::s, static_cast<std::uint32_t>(1 + i)) *
                pow(one_plus_s, static_cast<unsigned>(k - 1 - i)) *
                MultiPoly::var(Var::t, static_cast<std::uint32_t>(k));
            if (k % 2 == 0)
                coeff += term;
            else
                coeff -= term;
        }
        table.coeffs[static_cast<std::size_t>(n)] = std::move(coeff);
    }
    return table;
}

std::vector<DerangementTableRow> derangement_table() {
    std::vector<DerangementTableRow> rows;
    for (int n = 2; n <= 9; ++n) rows.push_back({n, collect_by(derangement_signed_gf(n), Var::t)});
    return rows;
}

std::vector<DerangementTableRow> reference_derangement_table() {
    struct Cell {
        int n;
        std::uint32_t t_power;
        long long coeff;
        std::uint32_t s_power;
        unsigned one_plus_s_power;
    };
    static constexpr Cell kCells[] = {
        {2, 1, -1, 1, 0},
        {3, 2, 1, 1, 1},
        {4, 2, 1, 2, 0},  {4, 3, -1, 1, 2},
        {5, 3, -2, 2, 1}, {5, 4, 1, 1, 3},
        {6, 3, -1, 3, 0}, {6, 4, 3, 2, 2},  {6, 5, -1, 1, 4},
        {7, 4, 3, 3, 1},  {7, 5, -4, 2, 3}, {7, 6, 1, 1, 5},
        {8, 4, 1, 4, 0},  {8, 5, -6, 3, 2}, {8, 6, 5, 2, 4},  {8, 7, -1, 1, 6},
        {9, 5, -4, 4, 1}, {9, 6, 10, 3, 3}, {9, 7, -6, 2, 5}, {9, 8, 1, 1, 7},
    };
    const auto one_plus_s = 1 + MultiPoly::var(Var::s);
    std::vector<DerangementTableRow> rows;
    for (int n = 2; n <= 9; ++n) rows.push_back({n, {}});
    for (const auto& c : kCells) {
        rows[static_cast<std::size_t>(c.n - 2)].cells[c.t_power] =
            MultiPoly(c.coeff) * MultiPoly::var(Var::s, c.s_power) * pow(one_plus_s, c.one_plus_s_power);
    }
    return rows;
}

}  // namespace motzperm
