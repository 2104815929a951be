#include "motzperm/motzkin.hpp"

#include <charconv>

#include "json.hpp"

#include "motzperm/error.hpp"

namespace motzperm {

const char* step_kind_name(StepKind kind) noexcept {
    switch (kind) {
        case StepKind::U: return "U";
        case StepKind::D: return "D";
        case StepKind::H1: return "H1";
        case StepKind::H2: return "H2";
        case StepKind::H3: return "H3";
    }
    return "?";
}

std::optional<StepKind> parse_step_kind(std::string_view name) noexcept {
    if (name == "U") return StepKind::U;
    if (name == "D") return StepKind::D;
    if (name == "H1") return StepKind::H1;
    if (name == "H2") return StepKind::H2;
    if (name == "H3") return StepKind::H3;
    return std::nullopt;
}

int choice_count(StepKind kind, int height) noexcept {
    if (kind == StepKind::H3) return height >= 0 ? 1 : 0;
    return height >= 1 ? height : 0;
}

PathValidation validate(const WeightedMotzkinPath& path) {
    auto fail = [](std::size_t i, std::string msg) {
        return PathValidation{false, i, "step " + std::to_string(i + 1) + ": " + std::move(msg)};
    };
    int level = 0;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& st = path.steps[i];
        int expected = level;
        if (st.kind == StepKind::U) {
            expected = level + 1;
        } else if (st.kind == StepKind::D && level == 0) {
            return fail(i, "down step would go below the x-axis");
        }
        if (st.height != expected)
            return fail(i, std::string(step_kind_name(st.kind)) + " recorded at height " +
                               std::to_string(st.height) + " but reaches height " +
                               std::to_string(expected));
        if ((st.kind == StepKind::H1 || st.kind == StepKind::H2) && st.height == 0)
            return fail(i, std::string(step_kind_name(st.kind)) + " cannot occur at height 0");
        const int options = choice_count(st.kind, st.height);
        if (st.choice < 0 || st.choice >= options)
            return fail(i, "choice " + std::to_string(st.choice) + " outside [0, " +
                               std::to_string(options - 1) + "] for " + step_kind_name(st.kind) +
                               " at height " + std::to_string(st.height));
        if (st.kind == StepKind::U) ++level;
        if (st.kind == StepKind::D) --level;
    }
    if (level != 0) {
        return PathValidation{false, path.steps.empty() ? 0 : path.steps.size() - 1,
                              "path ends at height " + std::to_string(level) + ", not 0"};
    }
    return {};
}

void require_valid(const WeightedMotzkinPath& path) {
    auto v = validate(path);
    if (!v.valid) throw InvalidPathError(v.diagnostic);
}

Monomial step_weight(const WeightedStep& step) {
    const int options = choice_count(step.kind, step.height);
    if (step.choice < 0 || step.choice >= options ||
        ((step.kind == StepKind::H1 || step.kind == StepKind::H2) && step.height < 1))
        throw InvalidPathError(std::string("invalid step ") + step_kind_name(step.kind) + "(" +
                               std::to_string(step.height) + "," + std::to_string(step.choice) +
                               ")");
    const auto h = static_cast<std::uint32_t>(step.height);
    const auto d = static_cast<std::uint32_t>(step.choice);
    switch (step.kind) {
        case StepKind::U: return {d, 0, 1, 2 * h - 1};
        case StepKind::D: return {2 * h - 1 + d, 0, 0, 0};
        case StepKind::H1: return {h + d, 0, 1, h};
        case StepKind::H2: return {h + d, 0, 0, h};
        case StepKind::H3: return {2 * h, 1, 0, h};
    }
    return {};
}

Monomial path_weight(const WeightedMotzkinPath& path) {
    require_valid(path);
    Monomial w;
    for (const auto& st : path.steps) w = w * step_weight(st);
    return w;
}

std::uint64_t area(const WeightedMotzkinPath& path) {
    // Twice the trapezoid sum; each U/D pair contributes an even amount.
    std::uint64_t twice = 0;
    std::int64_t level = 0;
    for (const auto& st : path.steps) {
        std::int64_t next = level;
        if (st.kind == StepKind::U) ++next;
        if (st.kind == StepKind::D) --next;
        if (next < 0) throw InvalidPathError("path goes below the x-axis");
        twice += static_cast<std::uint64_t>(level + next);
        level = next;
    }
    if (level != 0) throw InvalidPathError("path does not return to the x-axis");
    return twice / 2;
}

void for_each_weighted_path(int n, const PathVisitor& visit) {
    require_size("enumerate_weighted", n, kMaxWeightedEnumerationSize);
    WeightedMotzkinPath path;
    path.steps.reserve(static_cast<std::size_t>(n));
    std::function<void(int, int)> extend = [&](int remaining, int level) {
        if (remaining == 0) {
            if (level == 0) visit(path);
            return;
        }
        auto push = [&](StepKind kind, int height, int next_level) {
            for (int d = 0; d < choice_count(kind, height); ++d) {
                path.steps.push_back({kind, height, d});
                extend(remaining - 1, next_level);
                path.steps.pop_back();
            }
        };
        if (level + 1 <= remaining - 1) push(StepKind::U, level + 1, level + 1);
        if (level <= remaining - 1) {
            push(StepKind::H1, level, level);
            push(StepKind::H2, level, level);
            push(StepKind::H3, level, level);
        }
        if (level >= 1) push(StepKind::D, level, level - 1);
    };
    extend(n, 0);
}

std::vector<WeightedMotzkinPath> enumerate_weighted(int n) {
    std::vector<WeightedMotzkinPath> out;
    for_each_weighted_path(n, [&](const WeightedMotzkinPath& p) { out.push_back(p); });
    return out;
}

std::string to_string(const WeightedMotzkinPath& path) {
    std::string out;
    for (const auto& st : path.steps) {
        if (!out.empty()) out += ' ';
        out += step_kind_name(st.kind);
        out += '(' + std::to_string(st.height) + ',' + std::to_string(st.choice) + ')';
    }
    return out;
}

WeightedMotzkinPath parse_path(std::string_view text) {
    WeightedMotzkinPath path;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                                   text[i] == '\r'))
            ++i;
    };
    auto read_int = [&](const char* what) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc()) throw ParseError(std::string("expected ") + what, i);
        i = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    skip_space();
    while (i < text.size()) {
        const std::size_t start = i;
        while (i < text.size() && text[i] != '(' && text[i] != ' ') ++i;
        auto kind = parse_step_kind(text.substr(start, i - start));
        if (!kind)
            throw ParseError("unknown step kind '" + std::string(text.substr(start, i - start)) + "'",
                             start);
        expect('(');
        const int height = read_int("height");
        expect(',');
        const int choice = read_int("choice");
        expect(')');
        path.steps.push_back({*kind, height, choice});
        if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
            text[i] != '\r')
            throw ParseError("expected whitespace between steps", i);
        skip_space();
    }
    return path;
}

std::string to_json(const WeightedMotzkinPath& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& st : path.steps)
        arr.push_back({{"kind", step_kind_name(st.kind)}, {"height", st.height}, {"choice", st.choice}});
    return arr.dump();
}

WeightedMotzkinPath path_from_json(std::string_view json) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!arr.is_array()) throw ParseError("path JSON must be an array", 0);
    WeightedMotzkinPath path;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& rec = arr[k];
        if (!rec.is_object() || !rec.contains("kind") || !rec.contains("height") ||
            !rec.contains("choice") || !rec["kind"].is_string() ||
            !rec["height"].is_number_integer() || !rec["choice"].is_number_integer())
            throw ParseError("record needs string kind and integer height/choice", k);
        auto kind = parse_step_kind(rec["kind"].get<std::string>());
        if (!kind) throw ParseError("unknown step kind", k);
        path.steps.push_back({*kind, rec["height"].get<int>(), rec["choice"].get<int>()});
    }
    return path;
}

}  // namespace motzperm
