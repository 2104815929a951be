#include "motzperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "motzperm/algebra.hpp"
#include "motzperm/bijection.hpp"
#include "motzperm/error.hpp"
#include "motzperm/identities.hpp"
#include "motzperm/involution.hpp"
#include "motzperm/jfraction.hpp"
#include "motzperm/motzkin.hpp"
#include "motzperm/permutation.hpp"

namespace motzperm {

namespace {

struct Outcome {
    std::string expected;
    std::string computed;
};

class Runner {
public:
    void run(const std::string& check, int n, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out = body();
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        const bool pass = out.expected == out.computed;
        records_.push_back({check, n, std::move(out.expected), std::move(out.computed), pass,
                            elapsed.count()});
    }

    std::vector<ReportRecord> take() {
        std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
            return std::tie(a.check, a.n) < std::tie(b.check, b.n);
        });
        return std::move(records_);
    }

private:
    std::vector<ReportRecord> records_;
};

std::string str(const BigInt& v) { return v.str(); }

Outcome check_bijection(int n) {
    const auto total = static_cast<std::uint64_t>(factorial(static_cast<unsigned>(n)));
    std::uint64_t perms = 0, weight_ok = 0, paths = 0, roundtrip_ok = 0, distinct = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        ++perms;
        const auto mu = psi(sigma);
        if (validate(mu).valid && weight_statistics(path_weight(mu)) == statistics(sigma) &&
            psi_inverse(mu) == sigma)
            ++weight_ok;
    });
    std::vector<bool> hit(total, false);
    for_each_weighted_path(n, [&](const WeightedMotzkinPath& mu) {
        ++paths;
        const auto sigma = psi_inverse(mu);
        if (psi(sigma) == mu) ++roundtrip_ok;
        const auto r = lex_rank(sigma);
        if (!hit[r]) {
            hit[r] = true;
            ++distinct;
        }
    });
    auto fmt = [](auto a, auto b, auto c, auto d, auto e) {
        std::ostringstream os;
        os << "permutations=" << a << " weight_preserved=" << b << " paths=" << c
           << " round_trips=" << d << " images=" << e;
        return os.str();
    };
    return {fmt(total, total, total, total, total), fmt(perms, weight_ok, paths, roundtrip_ok, distinct)};
}

Outcome check_involution(int n, const BigInt& euler) {
    bool involutive = true;
    bool delta_law = true;
    std::uint64_t fixed = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        const auto image = parity_involution(sigma);
        if (!(parity_involution(image) == sigma)) involutive = false;
        const auto a = statistics(sigma);
        const auto b = statistics(image);
        const auto dd = static_cast<long long>(a.depth) - static_cast<long long>(b.depth);
        const auto de = static_cast<long long>(a.exc) - static_cast<long long>(b.exc);
        const auto di = static_cast<long long>(a.inv) - static_cast<long long>(b.inv);
        if (dd != de || de != di || dd < -1 || dd > 1 || ((dd == 0) != (image == sigma)))
            delta_law = false;
        if (image == sigma) ++fixed;
    });
    auto fmt = [](bool inv, bool law, const std::string& fix) {
        return std::string("involutive=") + (inv ? "yes" : "no") + " delta_law=" + (law ? "yes" : "no") +
               " fixed_points=" + fix;
    };
    const BigInt want = n % 2 == 1 ? euler : BigInt(0);
    return {fmt(true, true, str(want)), fmt(involutive, delta_law, std::to_string(fixed))};
}

std::string table_row_text(const DerangementTableRow& row) {
    std::string out;
    for (const auto& [k, poly] : row.cells) {
        if (!out.empty()) out += "; ";
        out += "t^" + std::to_string(k) + ": " + poly.to_string();
    }
    return out;
}

MultiPoly step_sum(StepKind kind, int h) {
    MultiPoly sum;
    for (int d = 0; d < choice_count(kind, h); ++d) sum.add_term(step_weight({kind, h, d}), 1);
    return sum;
}

}  // namespace

std::vector<ReportRecord> verify_all(int max_n, CheckSelection selection) {
    require_size("verify", max_n, kMaxVerifySize);
    Runner runner;
    const bool all = selection == CheckSelection::all;
    const auto euler = euler_numbers(std::max(max_n, 1));

    if (all) {
        const auto refined = expand(preset_refined(), max_n);
        const auto depth_series = expand(preset_depth(), max_n);
        for (int n = 0; n <= max_n; ++n) {
            runner.run("bijection", n, [&] { return check_bijection(n); });
            runner.run("cardinality", n, [&] {
                std::uint64_t count = 0;
                for_each_weighted_path(n, [&](const WeightedMotzkinPath&) { ++count; });
                return Outcome{str(factorial(static_cast<unsigned>(n))), std::to_string(count)};
            });
            const auto gf = brute_force_gf(n);
            runner.run("cf_refined", n, [&] {
                return Outcome{refined.coeffs[static_cast<std::size_t>(n)].to_string(), gf.to_string()};
            });
            runner.run("cf_depth", n, [&] {
                const auto depth_only = poly_substitute(gf, {{Var::q, 1}, {Var::p, 1}, {Var::s, 1}});
                return Outcome{depth_series.coeffs[static_cast<std::size_t>(n)].to_string(),
                               depth_only.to_string()};
            });
            runner.run("cf_factorial", n, [&] {
                const auto v = poly_substitute(refined.coeffs[static_cast<std::size_t>(n)],
                                               {{Var::q, 1}, {Var::p, 1}, {Var::s, 1}, {Var::t, 1}});
                return Outcome{str(factorial(static_cast<unsigned>(n))), v.to_string()};
            });
            runner.run("euler_alternating", n, [&] {
                std::uint64_t count = 0;
                for_each_permutation(n, [&](const Permutation& s) { count += is_alternating(s) ? 1 : 0; });
                return Outcome{str(euler[static_cast<std::size_t>(n)]), std::to_string(count)};
            });
            if (n <= 6) {
                runner.run("depth_factorization", n, [&] {
                    const auto table = factorization_depth_table(n);
                    std::uint64_t agree = 0;
                    for_each_permutation(n, [&](const Permutation& s) {
                        agree += table[lex_rank(s)] == depth(s) ? 1 : 0;
                    });
                    return Outcome{str(factorial(static_cast<unsigned>(n))), std::to_string(agree)};
                });
            }
            if (n >= 1) {
                const BigInt e = euler[static_cast<std::size_t>(n)];
                runner.run("imbalance_depth", n, [&] {
                    return Outcome{str(n % 2 == 1 ? e : BigInt(0)), str(sign_imbalance_depth(n))};
                });
                runner.run("imbalance_exc", n, [&] {
                    const BigInt want = n % 2 == 1 ? ((n - 1) / 2 % 2 == 0 ? e : BigInt(-e)) : BigInt(0);
                    return Outcome{str(want), str(sign_imbalance_exc(n))};
                });
                runner.run("involution", n, [&] { return check_involution(n, e); });
            }
        }
        for (int h = 1; h <= 6; ++h) {
            runner.run("step_sums_lambda", h, [&] {
                return Outcome{preset_refined().lambda(static_cast<unsigned>(h)).to_string(),
                               (step_sum(StepKind::U, h) * step_sum(StepKind::D, h)).to_string()};
            });
            runner.run("step_sums_gamma", h, [&] {
                const auto sum = step_sum(StepKind::H1, h) + step_sum(StepKind::H2, h) +
                                 step_sum(StepKind::H3, h);
                return Outcome{preset_refined().gamma(static_cast<unsigned>(h)).to_string(),
                               sum.to_string()};
            });
        }
    }
    if (all || selection == CheckSelection::signed_permutation_gf) {
        const auto one_minus_st = 1 - MultiPoly(Monomial{0, 0, 1, 1});
        for (int n = 1; n <= max_n; ++n) {
            runner.run("signed_permutation_gf", n, [&] {
                return Outcome{pow(one_minus_st, static_cast<unsigned>(n - 1)).to_string(),
                               signed_gf_permutations(n).to_string()};
            });
        }
    }
    if (all || selection == CheckSelection::derangement_series) {
        const auto rhs = derangement_series_rhs(max_n);
        for (int n = 1; n <= max_n; ++n) {
            runner.run("derangement_series", n, [&] {
                return Outcome{rhs.coeffs[static_cast<std::size_t>(n)].to_string(),
                               derangement_signed_gf(n).to_string()};
            });
        }
    }
    if (all || selection == CheckSelection::table1) {
        const auto reference = reference_derangement_table();
        for (const auto& row : reference) {
            runner.run("table1", row.n, [&] {
                const DerangementTableRow computed{row.n, collect_by(derangement_signed_gf(row.n), Var::t)};
                return Outcome{table_row_text(row), table_row_text(computed)};
            });
        }
    }
    return runner.take();
}

bool all_passed(const std::vector<ReportRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

std::string report_to_json(const std::vector<ReportRecord>& records, int max_n, bool include_timing) {
    nlohmann::ordered_json doc;
    doc["max_n"] = max_n;
    doc["all_passed"] = all_passed(records);
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["check"] = r.check;
        rec["n"] = r.n;
        rec["expected"] = r.expected;
        rec["computed"] = r.computed;
        rec["status"] = r.pass ? "pass" : "fail";
        if (include_timing) rec["elapsed_ms"] = r.elapsed_ms;
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

}  // namespace

std::string report_to_csv(const std::vector<ReportRecord>& records, bool include_timing) {
    std::string out = "check,n,expected,computed,status";
    out += include_timing ? ",elapsed_ms\n" : "\n";
    for (const auto& r : records) {
        out += r.check + "," + std::to_string(r.n) + "," + csv_quote(r.expected) + "," +
               csv_quote(r.computed) + "," + (r.pass ? "pass" : "fail");
        if (include_timing) out += "," + format_ms(r.elapsed_ms);
        out += "\n";
    }
    return out;
}

std::string report_to_text(const std::vector<ReportRecord>& records, bool include_timing) {
    std::string out;
    for (const auto& r : records) {
        out += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.check + " n=" + std::to_string(r.n);
        if (include_timing) out += " (" + format_ms(r.elapsed_ms) + " ms)";
        out += "\n";
        if (!r.pass) out += "  expected: " + r.expected + "\n  computed: " + r.computed + "\n";
    }
    return out;
}

}  // namespace motzperm
