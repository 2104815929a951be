#pragma once

#include <string>
#include <vector>

namespace motzperm {

/// One check at one parameter value. `pass` holds iff expected == computed.
struct ReportRecord {
    std::string check;
    int n = 0;
    std::string expected;
    std::string computed;
    bool pass = false;
    double elapsed_ms = 0.0;
};

enum class CheckSelection { all, signed_permutation_gf, derangement_series, table1 };

constexpr int kMaxVerifySize = 9;

/// Runs the selected checks for every n up to max_n (≤ 9). Records are sorted
/// by check name, then n.
std::vector<ReportRecord> verify_all(int max_n, CheckSelection selection = CheckSelection::all);

bool all_passed(const std::vector<ReportRecord>& records);

/// Stable serializations; elapsed_ms is emitted only when include_timing is set
/// so that default output is byte-for-byte reproducible.
std::string report_to_json(const std::vector<ReportRecord>& records, int max_n, bool include_timing);
std::string report_to_csv(const std::vector<ReportRecord>& records, bool include_timing);
std::string report_to_text(const std::vector<ReportRecord>& records, bool include_timing);

}  // namespace motzperm
