#include "motzperm/involution.hpp"

#include "motzperm/bijection.hpp"
#include "motzperm/error.hpp"

namespace motzperm {

std::vector<BigInt> euler_numbers(int max_index) {
    require_size("euler_numbers", max_index, kMaxEulerIndex);
    std::vector<BigInt> out{1};
    std::vector<BigInt> row{1};
    for (int k = 1; k <= max_index; ++k) {
        // Each row is built from the previous one read in the opposite direction.
        std::vector<BigInt> next(row.size() + 1);
        next[0] = 0;
        for (std::size_t j = 0; j < row.size(); ++j) next[j + 1] = next[j] + row[row.size() - 1 - j];
        out.push_back(next.back());
        row = std::move(next);
    }
    return out;
}

namespace {

enum class Letter { U, D, A, B };

Letter letter_of(const WeightedStep& st) {
    switch (st.kind) {
        case StepKind::U: return Letter::U;
        case StepKind::D: return Letter::D;
        case StepKind::H1: return Letter::B;
        case StepKind::H2:
        case StepKind::H3: break;
    }
    return Letter::A;
}

// Choice offset within the letter's weight list; H3 sits after the H2 choices.
int letter_choice(const WeightedStep& st) {
    return st.kind == StepKind::H3 ? st.height : st.choice;
}

bool is_site(Letter first, Letter second) {
    switch (first) {
        case Letter::A: return second == Letter::A || second == Letter::U;
        case Letter::U: return second == Letter::D || second == Letter::B;
        case Letter::B: return second == Letter::B || second == Letter::D;
        case Letter::D: return second == Letter::U || second == Letter::A;
    }
    return false;
}

Letter swap_first(Letter l) {
    switch (l) {
        case Letter::A: return Letter::U;
        case Letter::U: return Letter::A;
        case Letter::B: return Letter::D;
        case Letter::D: return Letter::B;
    }
    return l;
}

Letter swap_second(Letter l) {
    switch (l) {
        case Letter::A: return Letter::D;
        case Letter::D: return Letter::A;
        case Letter::B: return Letter::U;
        case Letter::U: return Letter::B;
    }
    return l;
}

// Builds the step for `l` starting at `level`; returns the level after it.
int make_step(Letter l, int level, int choice, WeightedStep& out) {
    switch (l) {
        case Letter::U: out = {StepKind::U, level + 1, choice}; return level + 1;
        case Letter::D: out = {StepKind::D, level, choice}; return level - 1;
        case Letter::B: out = {StepKind::H1, level, choice}; return level;
        case Letter::A:
            out = choice == level ? WeightedStep{StepKind::H3, level, 0}
                                  : WeightedStep{StepKind::H2, level, choice};
            return level;
    }
    return level;
}

int level_before(const WeightedStep& st) {
    return st.kind == StepKind::U ? st.height - 1 : st.height;
}

}  // namespace

std::optional<std::size_t> leftmost_toggle_site(const WeightedMotzkinPath& path) {
    for (std::size_t k = 0; k + 1 < path.steps.size(); ++k)
        if (is_site(letter_of(path.steps[k]), letter_of(path.steps[k + 1]))) return k;
    return std::nullopt;
}

WeightedMotzkinPath involution_on_path(const WeightedMotzkinPath& path) {
    require_valid(path);
    const auto site = leftmost_toggle_site(path);
    if (!site) return path;
    const std::size_t k = *site;
    WeightedMotzkinPath out = path;
    const auto& first = path.steps[k];
    const auto& second = path.steps[k + 1];
    const int mid = make_step(swap_first(letter_of(first)), level_before(first), letter_choice(first),
                              out.steps[k]);
    make_step(swap_second(letter_of(second)), mid, letter_choice(second), out.steps[k + 1]);
    return out;
}

Permutation parity_involution(const Permutation& sigma) {
    return psi_inverse(involution_on_path(psi(sigma)));
}

InvolutionImage apply_parity_involution(const Permutation& sigma) {
    Permutation image = parity_involution(sigma);
    const auto before = static_cast<long long>(depth(sigma));
    const auto after = static_cast<long long>(depth(image));
    return {std::move(image), static_cast<int>(before - after)};
}

namespace {

BigInt signed_count(int n, ParityStatistic stat, bool fixed_only) {
    require_size("sign_imbalance", n, kMaxImbalanceSize);
    long long total = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (fixed_only && !(parity_involution(sigma) == sigma)) return;
        const auto value = stat == ParityStatistic::depth ? depth(sigma) : exc_count(sigma);
        total += value % 2 == 0 ? 1 : -1;
    });
    return total;
}

}  // namespace

BigInt sign_imbalance_depth(int n) { return signed_count(n, ParityStatistic::depth, false); }
BigInt sign_imbalance_exc(int n) { return signed_count(n, ParityStatistic::exc, false); }

BigInt sign_imbalance_from_fixed_points(int n, ParityStatistic stat) {
    return signed_count(n, stat, true);
}

}  // namespace motzperm
