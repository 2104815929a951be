#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motzperm {

/// A permutation of [n] in one-line notation, 1-based: images()[i-1] = σ(i).
/// n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `images` is a bijection on [n].
    static Permutation from_images(std::vector<int> images);
    static Permutation identity(int n);

    /// Space-separated images, e.g. "3 2 1"; the empty string is n = 0.
    /// Throws ParseError naming the offending position.
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    /// σ(i) for 1 ≤ i ≤ n.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const;
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

struct PermutationStats {
    std::uint64_t inv = 0;
    std::uint64_t fix = 0;
    std::uint64_t exc = 0;
    std::uint64_t depth = 0;
    bool operator==(const PermutationStats&) const = default;
};

std::uint64_t inv_count(const Permutation& sigma);
std::uint64_t exc_count(const Permutation& sigma);
std::uint64_t fix_count(const Permutation& sigma);
/// Σ over excedances of σ(i) − i.
std::uint64_t depth(const Permutation& sigma);
PermutationStats statistics(const Permutation& sigma);

/// σ(1) > σ(2) < σ(3) > ...
bool is_alternating(const Permutation& sigma);

constexpr int kMaxFactorizationSize = 7;
constexpr int kMaxEnumerationSize = 12;

/// Minimum of Σ (j_r − i_r) over all factorizations of σ into transpositions
/// (i_r j_r), by uniform-cost search from the identity. n ≤ 7.
std::uint64_t depth_via_factorization(const Permutation& sigma);

/// The same minimum for every element of S_n at once, indexed by
/// lexicographic rank. n ≤ 7.
std::vector<std::uint64_t> factorization_depth_table(int n);

/// Lexicographic rank in S_n, 0-based.
std::uint64_t lex_rank(const Permutation& sigma);
Permutation lex_unrank(int n, std::uint64_t rank);

using PermutationVisitor = std::function<void(const Permutation&)>;

/// Visit S_n / D_n in lexicographic order. n ≤ 12.
void for_each_permutation(int n, const PermutationVisitor& visit);
void for_each_derangement(int n, const PermutationVisitor& visit);
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_derangements(int n);

}  // namespace motzperm
