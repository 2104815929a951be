#include "motzperm/bijection.hpp"

#include <algorithm>
#include <set>

#include "motzperm/error.hpp"

namespace motzperm {

WeightedMotzkinPath psi(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation inv = sigma.inverse();
    WeightedMotzkinPath path;
    path.steps.reserve(static_cast<std::size_t>(n));

    std::multiset<int> open_targets;  // σ(a) for open arcs
    std::set<int> open_values;        // values not yet hit
    int level = 0;
    auto nested_over = [&](int target) {
        return static_cast<int>(std::distance(open_targets.upper_bound(target), open_targets.end()));
    };
    auto values_below = [&](int v) {
        return static_cast<int>(std::distance(open_values.begin(), open_values.lower_bound(v)));
    };

    for (int i = 1; i <= n; ++i) {
        const int image = sigma(i);
        const int preimage = inv(i);
        if (image == i) {
            path.steps.push_back({StepKind::H3, level, 0});
        } else if (image > i && preimage > i) {
            const int d = nested_over(image);
            ++level;
            path.steps.push_back({StepKind::U, level, d});
            open_targets.insert(image);
            open_values.insert(i);
        } else if (image < i && preimage < i) {
            open_targets.erase(open_targets.find(i));
            const int d = values_below(image);
            open_values.erase(image);
            path.steps.push_back({StepKind::D, level, d});
            --level;
        } else if (image > i) {  // preimage < i
            open_targets.erase(open_targets.find(i));
            path.steps.push_back({StepKind::H1, level, nested_over(image)});
            open_targets.insert(image);
        } else {  // image < i, preimage > i
            const int d = values_below(image);
            open_values.erase(image);
            open_values.insert(i);
            path.steps.push_back({StepKind::H2, level, d});
        }
    }
    return path;
}

Permutation psi_inverse(const WeightedMotzkinPath& path) {
    require_valid(path);
    const auto n = path.steps.size();
    std::vector<int> images(n, 0);
    // Open arc sources ordered by (not yet known) target, nearest target first.
    std::vector<int> arcs;
    std::vector<int> values;  // open values, ascending

    auto place_arc = [&](int source, int nested) {
        arcs.insert(arcs.end() - nested, source);
    };
    auto close_arc = [&](int target) {
        images[static_cast<std::size_t>(arcs.front() - 1)] = target;
        arcs.erase(arcs.begin());
    };
    auto take_value = [&](int below) {
        const int v = values[static_cast<std::size_t>(below)];
        values.erase(values.begin() + below);
        return v;
    };

    for (std::size_t k = 0; k < n; ++k) {
        const auto& st = path.steps[k];
        const int i = static_cast<int>(k + 1);
        switch (st.kind) {
            case StepKind::H3:
                images[k] = i;
                break;
            case StepKind::U:
                place_arc(i, st.choice);
                values.push_back(i);
                break;
            case StepKind::D:
                close_arc(i);
                images[k] = take_value(st.choice);
                break;
            case StepKind::H1:
                close_arc(i);
                place_arc(i, st.choice);
                break;
            case StepKind::H2:
                images[k] = take_value(st.choice);
                values.push_back(i);
                break;
        }
    }
    return Permutation::from_images(std::move(images));
}

PermutationStats weight_statistics(const Monomial& weight) {
    return {weight.eq, weight.ep, weight.es, weight.et};
}

}  // namespace motzperm
