#include "motzperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>

#include "motzperm/algebra.hpp"
#include "motzperm/error.hpp"

namespace motzperm {

Permutation Permutation::from_images(std::vector<int> images) {
    const auto n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size() + 1, false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int v = images[i];
        if (v < 1 || v > n)
            throw InvalidArgument("value " + std::to_string(v) + " at position " +
                                  std::to_string(i + 1) + " is outside [1, " + std::to_string(n) +
                                  "]");
        if (seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("value " + std::to_string(v) + " at position " +
                                  std::to_string(i + 1) + " is repeated");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> images;
    std::vector<std::size_t> offsets;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
               text[i] != '\r')
            ++i;
        const std::string_view token = text.substr(start, i - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError("malformed entry '" + std::string(token) + "'", start);
        images.push_back(value);
        offsets.push_back(start);
    }
    const auto n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size() + 1, false);
    for (std::size_t k = 0; k < images.size(); ++k) {
        const int v = images[k];
        if (v < 1 || v > n)
            throw ParseError("value " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]",
                             offsets[k]);
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError("value " + std::to_string(v) + " repeated", offsets[k]);
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(images_[i]);
    }
    return out;
}

std::uint64_t inv_count(const Permutation& sigma) {
    const auto img = sigma.images();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++count;
    return count;
}

std::uint64_t exc_count(const Permutation& sigma) {
    std::uint64_t count = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma(i) > i) ++count;
    return count;
}

std::uint64_t fix_count(const Permutation& sigma) {
    std::uint64_t count = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma(i) == i) ++count;
    return count;
}

std::uint64_t depth(const Permutation& sigma) {
    std::uint64_t total = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma(i) > i) total += static_cast<std::uint64_t>(sigma(i) - i);
    return total;
}

PermutationStats statistics(const Permutation& sigma) {
    return {inv_count(sigma), fix_count(sigma), exc_count(sigma), depth(sigma)};
}

bool is_alternating(const Permutation& sigma) {
    for (int i = 1; i < sigma.size(); ++i) {
        const bool descent = sigma(i) > sigma(i + 1);
        if (descent != (i % 2 == 1)) return false;
    }
    return true;
}

std::uint64_t lex_rank(const Permutation& sigma) {
    const auto img = sigma.images();
    const std::size_t n = img.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller_later = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (img[j] < img[i]) ++smaller_later;
        rank = rank * (n - i) + smaller_later;
    }
    return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[static_cast<std::size_t>(i)] = rank % base;
        rank /= base;
    }
    if (rank != 0) throw InvalidArgument("rank out of range for S_" + std::to_string(n));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (auto d : digits) {
        images.push_back(pool[d]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation::from_images(std::move(images));
}

namespace {

// Dijkstra over S_n from the identity; an edge right-multiplies by the
// transposition (i j) and costs j − i. Stops early once `target` is settled.
std::vector<std::uint64_t> factorization_search(int n, const std::uint64_t* target) {
    require_size("depth_via_factorization", n, kMaxFactorizationSize);
    const auto total = static_cast<std::size_t>(factorial(static_cast<unsigned>(n)));
    constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(total, kUnset);
    std::vector<bool> done(total, false);
    using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (distance, rank)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    const auto start = lex_rank(Permutation::identity(n));
    dist[start] = 0;
    frontier.emplace(0, start);
    while (!frontier.empty()) {
        auto [d, r] = frontier.top();
        frontier.pop();
        if (done[r]) continue;
        done[r] = true;
        if (target && r == *target) break;
        const Permutation cur = lex_unrank(n, r);
        std::vector<int> img(cur.images().begin(), cur.images().end());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
                const auto next = lex_rank(Permutation::from_images(img));
                const auto nd = d + static_cast<std::uint64_t>(j - i);
                if (nd < dist[next]) {
                    dist[next] = nd;
                    frontier.emplace(nd, next);
                }
                std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
            }
        }
    }
    return dist;
}

}  // namespace

std::uint64_t depth_via_factorization(const Permutation& sigma) {
    const auto target = lex_rank(sigma);
    return factorization_search(sigma.size(), &target)[target];
}

std::vector<std::uint64_t> factorization_depth_table(int n) {
    return factorization_search(n, nullptr);
}

void for_each_permutation(int n, const PermutationVisitor& visit) {
    require_size("for_each_permutation", n, kMaxEnumerationSize);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        visit(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

void for_each_derangement(int n, const PermutationVisitor& visit) {
    require_size("for_each_derangement", n, kMaxEnumerationSize);
    if (n == 0) {
        visit(Permutation{});
        return;
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    // Depth-first placement in increasing value order gives lexicographic output.
    std::function<void(int)> place = [&](int pos) {
        if (pos > n) {
            visit(Permutation::from_images(img));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (v == pos || used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            img[static_cast<std::size_t>(pos - 1)] = v;
            place(pos + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    place(1);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> all_derangements(int n) {
    std::vector<Permutation> out;
    for_each_derangement(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace motzperm
