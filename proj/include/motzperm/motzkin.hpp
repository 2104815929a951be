#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motzperm/algebra.hpp"

namespace motzperm {

/// Up, down, and the three horizontal colors.
enum class StepKind : std::uint8_t { U, D, H1, H2, H3 };

const char* step_kind_name(StepKind kind) noexcept;
std::optional<StepKind> parse_step_kind(std::string_view name) noexcept;

/// One step of a weighted 3-colored Motzkin path.
///
/// `height` is the maximum y-coordinate the step reaches: an up step from
/// h−1 to h and a down step from h to h−1 both have height h. `choice` is a
/// 0-based offset into the step's list of allowed weights:
///
///   U(h,d)  -> s t^(2h−1) q^d          0 ≤ d ≤ h−1
///   D(h,d)  -> q^(2h−1+d)              0 ≤ d ≤ h−1
///   H1(h,d) -> s t^h q^(h+d)           0 ≤ d ≤ h−1, h ≥ 1
///   H2(h,d) -> t^h q^(h+d)             0 ≤ d ≤ h−1, h ≥ 1
///   H3(h,0) -> p t^h q^(2h)            h ≥ 0
struct WeightedStep {
    StepKind kind = StepKind::H3;
    int height = 0;
    int choice = 0;
    auto operator<=>(const WeightedStep&) const = default;
};

struct WeightedMotzkinPath {
    std::vector<WeightedStep> steps;

    std::size_t size() const noexcept { return steps.size(); }
    auto operator<=>(const WeightedMotzkinPath&) const = default;
};

struct PathValidation {
    bool valid = true;
    std::optional<std::size_t> step_index;  // first offending step, 0-based
    std::string diagnostic;
};

PathValidation validate(const WeightedMotzkinPath& path);
void require_valid(const WeightedMotzkinPath& path);

/// Number of weights available to a step of this kind at this height.
int choice_count(StepKind kind, int height) noexcept;

Monomial step_weight(const WeightedStep& step);
Monomial path_weight(const WeightedMotzkinPath& path);

/// Area between the underlying plain path and the x-axis.
std::uint64_t area(const WeightedMotzkinPath& path);

constexpr int kMaxWeightedEnumerationSize = 10;

using PathVisitor = std::function<void(const WeightedMotzkinPath&)>;

/// Every element of W_n exactly once. n ≤ 10.
void for_each_weighted_path(int n, const PathVisitor& visit);
std::vector<WeightedMotzkinPath> enumerate_weighted(int n);

/// `U(1,0) H3(1,0) D(1,0)`; the empty path is the empty string.
std::string to_string(const WeightedMotzkinPath& path);
WeightedMotzkinPath parse_path(std::string_view text);

std::string to_json(const WeightedMotzkinPath& path);
WeightedMotzkinPath path_from_json(std::string_view json);

}  // namespace motzperm
