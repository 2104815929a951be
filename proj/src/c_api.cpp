#include "motzperm/motzperm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "motzperm/bijection.hpp"
#include "motzperm/error.hpp"
#include "motzperm/involution.hpp"
#include "motzperm/jfraction.hpp"
#include "motzperm/motzkin.hpp"
#include "motzperm/permutation.hpp"
#include "motzperm/verify.hpp"

struct motzperm_permutation {
    motzperm::Permutation value;
};

struct motzperm_path {
    motzperm::WeightedMotzkinPath value;
};

struct motzperm_series {
    motzperm::SeriesTable value;
};

struct motzperm_report {
    std::vector<motzperm::ReportRecord> records;
    int max_n = 0;
};

namespace {

thread_local std::string g_last_error;

motzperm_status fail(motzperm_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

motzperm_status status_of(motzperm::ErrorCode code) {
    switch (code) {
        case motzperm::ErrorCode::parse: return MOTZPERM_ERR_PARSE;
        case motzperm::ErrorCode::invalid_argument: return MOTZPERM_ERR_INVALID_ARGUMENT;
        case motzperm::ErrorCode::size_limit: return MOTZPERM_ERR_SIZE_LIMIT;
        case motzperm::ErrorCode::invalid_path: return MOTZPERM_ERR_INVALID_PATH;
    }
    return MOTZPERM_ERR_INTERNAL;
}

// Runs body and converts any exception into a status code.
template <class F>
motzperm_status guarded(F&& body) {
    try {
        body();
        return MOTZPERM_OK;
    } catch (const motzperm::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MOTZPERM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MOTZPERM_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define MOTZPERM_REQUIRE(ptr)                                                     \
    do {                                                                          \
        if ((ptr) == nullptr) return fail(MOTZPERM_ERR_NULL_POINTER, #ptr " is null"); \
    } while (0)

}  // namespace

extern "C" {

const char* motzperm_last_error(void) { return g_last_error.c_str(); }

const char* motzperm_status_string(motzperm_status status) {
    switch (status) {
        case MOTZPERM_OK: return "ok";
        case MOTZPERM_ERR_PARSE: return "parse error";
        case MOTZPERM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case MOTZPERM_ERR_SIZE_LIMIT: return "size limit exceeded";
        case MOTZPERM_ERR_INVALID_PATH: return "invalid path";
        case MOTZPERM_ERR_NULL_POINTER: return "null pointer";
        case MOTZPERM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void motzperm_string_free(char* text) { std::free(text); }

motzperm_status motzperm_permutation_parse(const char* text, motzperm_permutation** out) {
    MOTZPERM_REQUIRE(text);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = new motzperm_permutation{motzperm::Permutation::parse(text)}; });
}

motzperm_status motzperm_permutation_from_images(const int32_t* images, size_t n,
                                                 motzperm_permutation** out) {
    if (n > 0) MOTZPERM_REQUIRE(images);
    MOTZPERM_REQUIRE(out);
    return guarded([&] {
        std::vector<int> v(images, images + n);
        *out = new motzperm_permutation{motzperm::Permutation::from_images(std::move(v))};
    });
}

void motzperm_permutation_free(motzperm_permutation* perm) { delete perm; }

size_t motzperm_permutation_size(const motzperm_permutation* perm) {
    return perm ? static_cast<size_t>(perm->value.size()) : 0;
}

motzperm_status motzperm_permutation_images(const motzperm_permutation* perm, int32_t* buffer,
                                            size_t capacity) {
    MOTZPERM_REQUIRE(perm);
    const auto img = perm->value.images();
    if (capacity < img.size())
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "buffer holds " + std::to_string(capacity) +
                                                       " entries, need " + std::to_string(img.size()));
    if (!img.empty()) MOTZPERM_REQUIRE(buffer);
    std::copy(img.begin(), img.end(), buffer);
    return MOTZPERM_OK;
}

motzperm_status motzperm_permutation_to_string(const motzperm_permutation* perm, char** out) {
    MOTZPERM_REQUIRE(perm);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = dup_string(perm->value.to_string()); });
}

motzperm_status motzperm_permutation_stats(const motzperm_permutation* perm, motzperm_stats* out) {
    MOTZPERM_REQUIRE(perm);
    MOTZPERM_REQUIRE(out);
    const auto st = motzperm::statistics(perm->value);
    *out = {st.inv, st.fix, st.exc, st.depth};
    return MOTZPERM_OK;
}

motzperm_status motzperm_depth_via_factorization(const motzperm_permutation* perm, uint64_t* out) {
    MOTZPERM_REQUIRE(perm);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = motzperm::depth_via_factorization(perm->value); });
}

motzperm_status motzperm_path_parse(const char* text, motzperm_path** out) {
    MOTZPERM_REQUIRE(text);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = new motzperm_path{motzperm::parse_path(text)}; });
}

motzperm_status motzperm_path_from_json(const char* json, motzperm_path** out) {
    MOTZPERM_REQUIRE(json);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = new motzperm_path{motzperm::path_from_json(json)}; });
}

void motzperm_path_free(motzperm_path* path) { delete path; }

size_t motzperm_path_length(const motzperm_path* path) { return path ? path->value.size() : 0; }

motzperm_status motzperm_path_step(const motzperm_path* path, size_t index, motzperm_step* out) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(out);
    if (index >= path->value.size())
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "step index " + std::to_string(index) + " out of range");
    const auto& st = path->value.steps[index];
    *out = {static_cast<motzperm_step_kind>(st.kind), st.height, st.choice};
    return MOTZPERM_OK;
}

motzperm_status motzperm_path_validate(const motzperm_path* path, int* valid, char** diagnostic) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(valid);
    return guarded([&] {
        const auto v = motzperm::validate(path->value);
        *valid = v.valid ? 1 : 0;
        if (diagnostic) *diagnostic = dup_string(v.diagnostic);
    });
}

motzperm_status motzperm_path_weight(const motzperm_path* path, motzperm_monomial* out) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(out);
    return guarded([&] {
        const auto w = motzperm::path_weight(path->value);
        *out = {w.eq, w.ep, w.es, w.et};
    });
}

motzperm_status motzperm_path_to_string(const motzperm_path* path, char** out) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = dup_string(motzperm::to_string(path->value)); });
}

motzperm_status motzperm_path_to_json(const motzperm_path* path, char** out) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = dup_string(motzperm::to_json(path->value)); });
}

motzperm_status motzperm_encode(const motzperm_permutation* perm, motzperm_path** out) {
    MOTZPERM_REQUIRE(perm);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = new motzperm_path{motzperm::psi(perm->value)}; });
}

motzperm_status motzperm_decode(const motzperm_path* path, motzperm_permutation** out) {
    MOTZPERM_REQUIRE(path);
    MOTZPERM_REQUIRE(out);
    return guarded([&] { *out = new motzperm_permutation{motzperm::psi_inverse(path->value)}; });
}

motzperm_status motzperm_expand(motzperm_preset preset, int order, motzperm_series** out) {
    MOTZPERM_REQUIRE(out);
    if (preset != MOTZPERM_PRESET_DEPTH && preset != MOTZPERM_PRESET_REFINED)
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "unknown preset");
    return guarded([&] {
        const auto spec =
            preset == MOTZPERM_PRESET_DEPTH ? motzperm::preset_depth() : motzperm::preset_refined();
        *out = new motzperm_series{motzperm::expand(spec, order)};
    });
}

void motzperm_series_free(motzperm_series* series) { delete series; }

size_t motzperm_series_length(const motzperm_series* series) {
    return series ? series->value.coeffs.size() : 0;
}

motzperm_status motzperm_series_coefficient(const motzperm_series* series, size_t index, char** out) {
    MOTZPERM_REQUIRE(series);
    MOTZPERM_REQUIRE(out);
    if (index >= series->value.coeffs.size())
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "coefficient index " + std::to_string(index) + " out of range");
    return guarded([&] { *out = dup_string(series->value.coeffs[index].to_string()); });
}

motzperm_status motzperm_involution(const motzperm_permutation* perm, motzperm_permutation** image,
                                    int* delta) {
    MOTZPERM_REQUIRE(perm);
    MOTZPERM_REQUIRE(image);
    return guarded([&] {
        auto result = motzperm::apply_parity_involution(perm->value);
        if (delta) *delta = result.delta;
        *image = new motzperm_permutation{std::move(result.image)};
    });
}

motzperm_status motzperm_sign_imbalance(motzperm_statistic stat, int n, int64_t* out) {
    MOTZPERM_REQUIRE(out);
    if (stat != MOTZPERM_STAT_DEPTH && stat != MOTZPERM_STAT_EXC)
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "unknown statistic");
    return guarded([&] {
        const auto v = stat == MOTZPERM_STAT_DEPTH ? motzperm::sign_imbalance_depth(n)
                                                   : motzperm::sign_imbalance_exc(n);
        *out = v.convert_to<int64_t>();
    });
}

motzperm_status motzperm_euler_number(int n, char** out) {
    MOTZPERM_REQUIRE(out);
    return guarded([&] {
        const auto table = motzperm::euler_numbers(n);
        *out = dup_string(table.back().str());
    });
}

motzperm_status motzperm_verify(int max_n, motzperm_check_selection selection, motzperm_report** out) {
    MOTZPERM_REQUIRE(out);
    motzperm::CheckSelection sel{};
    switch (selection) {
        case MOTZPERM_CHECKS_ALL: sel = motzperm::CheckSelection::all; break;
        case MOTZPERM_CHECKS_SIGNED_PERMUTATION_GF: sel = motzperm::CheckSelection::signed_permutation_gf; break;
        case MOTZPERM_CHECKS_DERANGEMENT_SERIES: sel = motzperm::CheckSelection::derangement_series; break;
        case MOTZPERM_CHECKS_TABLE1: sel = motzperm::CheckSelection::table1; break;
        default: return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "unknown check selection");
    }
    return guarded([&] { *out = new motzperm_report{motzperm::verify_all(max_n, sel), max_n}; });
}

void motzperm_report_free(motzperm_report* report) { delete report; }

size_t motzperm_report_size(const motzperm_report* report) { return report ? report->records.size() : 0; }

int motzperm_report_all_passed(const motzperm_report* report) {
    return report && motzperm::all_passed(report->records) ? 1 : 0;
}

motzperm_status motzperm_report_record(const motzperm_report* report, size_t index, motzperm_record* out) {
    MOTZPERM_REQUIRE(report);
    MOTZPERM_REQUIRE(out);
    if (index >= report->records.size())
        return fail(MOTZPERM_ERR_INVALID_ARGUMENT, "record index " + std::to_string(index) + " out of range");
    const auto& r = report->records[index];
    *out = {r.check.c_str(), r.n, r.expected.c_str(), r.computed.c_str(), r.pass ? 1 : 0, r.elapsed_ms};
    return MOTZPERM_OK;
}

motzperm_status motzperm_report_render(const motzperm_report* report, motzperm_format format,
                                       int include_timing, char** out) {
    MOTZPERM_REQUIRE(report);
    MOTZPERM_REQUIRE(out);
    return guarded([&] {
        const bool timing = include_timing != 0;
        switch (format) {
            case MOTZPERM_FORMAT_JSON:
                *out = dup_string(motzperm::report_to_json(report->records, report->max_n, timing));
                return;
            case MOTZPERM_FORMAT_CSV:
                *out = dup_string(motzperm::report_to_csv(report->records, timing));
                return;
            case MOTZPERM_FORMAT_TEXT:
                *out = dup_string(motzperm::report_to_text(report->records, timing));
                return;
        }
        throw motzperm::InvalidArgument("unknown format");
    });
}

}  // extern "C"
