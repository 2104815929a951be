// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "motzperm/motzperm.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct LibraryError {
    motzperm_status status;
    std::string message;
};

void check(motzperm_status status) {
    if (status != MOTZPERM_OK) throw LibraryError{status, motzperm_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { motzperm_string_free(s); }
};
struct PermDeleter {
    void operator()(motzperm_permutation* p) const { motzperm_permutation_free(p); }
};
struct PathDeleter {
    void operator()(motzperm_path* p) const { motzperm_path_free(p); }
};
struct SeriesDeleter {
    void operator()(motzperm_series* s) const { motzperm_series_free(s); }
};
struct ReportDeleter {
    void operator()(motzperm_report* r) const { motzperm_report_free(r); }
};
using PermPtr = std::unique_ptr<motzperm_permutation, PermDeleter>;
using PathPtr = std::unique_ptr<motzperm_path, PathDeleter>;

std::string take(char* raw) {
    std::unique_ptr<char, StringDeleter> owned(raw);
    return owned ? std::string(owned.get()) : std::string();
}

PermPtr parse_perm(const std::string& text) {
    motzperm_permutation* raw = nullptr;
    check(motzperm_permutation_parse(text.c_str(), &raw));
    return PermPtr(raw);
}

std::string perm_text(const motzperm_permutation* perm) {
    char* raw = nullptr;
    check(motzperm_permutation_to_string(perm, &raw));
    return take(raw);
}

PathPtr parse_path_any(const std::string& text) {
    motzperm_path* raw = nullptr;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        check(motzperm_path_from_json(text.c_str(), &raw));
    else
        check(motzperm_path_parse(text.c_str(), &raw));
    return PathPtr(raw);
}

std::string path_text(const motzperm_path* path) {
    char* raw = nullptr;
    check(motzperm_path_to_string(path, &raw));
    return take(raw);
}

json path_json(const motzperm_path* path) {
    char* raw = nullptr;
    check(motzperm_path_to_json(path, &raw));
    return json::parse(take(raw));
}

std::string monomial_text(const motzperm_monomial& m) {
    std::string out;
    auto put = [&](const char* name, uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    };
    put("q", m.q);
    put("p", m.p);
    put("s", m.s);
    put("t", m.t);
    return out.empty() ? "1" : out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_stats(const std::string& text, const std::string& format) {
    auto perm = parse_perm(text);
    motzperm_stats st{};
    check(motzperm_permutation_stats(perm.get(), &st));
    if (format == "json") {
        json doc;
        doc["permutation"] = perm_text(perm.get());
        doc["inv"] = st.inv;
        doc["fix"] = st.fix;
        doc["exc"] = st.exc;
        doc["depth"] = st.depth;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "inv,fix,exc,depth\n" << st.inv << ',' << st.fix << ',' << st.exc << ',' << st.depth << "\n";
    } else {
        std::cout << "inv=" << st.inv << " fix=" << st.fix << " exc=" << st.exc << " depth=" << st.depth << "\n";
    }
    return kExitOk;
}

int cmd_encode(const std::string& text, const std::string& format) {
    auto perm = parse_perm(text);
    motzperm_path* raw = nullptr;
    check(motzperm_encode(perm.get(), &raw));
    PathPtr path(raw);
    if (format == "json") {
        motzperm_monomial w{};
        check(motzperm_path_weight(path.get(), &w));
        json doc;
        doc["permutation"] = perm_text(perm.get());
        doc["path"] = path_text(path.get());
        doc["steps"] = path_json(path.get());
        doc["weight"] = monomial_text(w);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << path_text(path.get()) << "\n";
    }
    return kExitOk;
}

int cmd_decode(const std::string& text, const std::string& format) {
    auto path = parse_path_any(text);
    motzperm_permutation* raw = nullptr;
    check(motzperm_decode(path.get(), &raw));
    PermPtr perm(raw);
    if (format == "json") {
        json doc;
        doc["path"] = path_text(path.get());
        doc["permutation"] = perm_text(perm.get());
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << perm_text(perm.get()) << "\n";
    }
    return kExitOk;
}

int cmd_expand(const std::string& preset, int order, const std::string& format) {
    motzperm_series* raw = nullptr;
    check(motzperm_expand(preset == "refined" ? MOTZPERM_PRESET_REFINED : MOTZPERM_PRESET_DEPTH, order, &raw));
    std::unique_ptr<motzperm_series, SeriesDeleter> series(raw);
    const size_t len = motzperm_series_length(series.get());
    auto coeff = [&](size_t n) {
        char* c = nullptr;
        check(motzperm_series_coefficient(series.get(), n, &c));
        return take(c);
    };
    if (format == "json") {
        json doc;
        doc["preset"] = preset;
        doc["order"] = order;
        doc["coefficients"] = json::array();
        for (size_t n = 0; n < len; ++n) doc["coefficients"].push_back({{"n", n}, {"coefficient", coeff(n)}});
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,coefficient\n";
        for (size_t n = 0; n < len; ++n) std::cout << n << ',' << csv_quote(coeff(n)) << "\n";
    } else {
        for (size_t n = 0; n < len; ++n) std::cout << "z^" << n << ": " << coeff(n) << "\n";
    }
    return kExitOk;
}

int cmd_imbalance(const std::string& stat, int n, const std::string& format) {
    int64_t value = 0;
    check(motzperm_sign_imbalance(stat == "exc" ? MOTZPERM_STAT_EXC : MOTZPERM_STAT_DEPTH, n, &value));
    if (format == "json") {
        json doc;
        doc["stat"] = stat;
        doc["n"] = n;
        doc["value"] = value;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "stat,n,value\n" << stat << ',' << n << ',' << value << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int cmd_involution(const std::string& text, const std::string& format) {
    auto perm = parse_perm(text);
    motzperm_permutation* raw = nullptr;
    int delta = 0;
    check(motzperm_involution(perm.get(), &raw, &delta));
    PermPtr image(raw);
    if (format == "json") {
        json doc;
        doc["permutation"] = perm_text(perm.get());
        doc["image"] = perm_text(image.get());
        doc["delta"] = delta;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "permutation,image,delta\n"
                  << csv_quote(perm_text(perm.get())) << ',' << csv_quote(perm_text(image.get())) << ','
                  << delta << "\n";
    } else {
        std::cout << "image: " << perm_text(image.get()) << "\ndelta: " << delta << "\n";
    }
    return kExitOk;
}

int cmd_verify(int max_n, const std::string& theorem, const std::string& format, bool timing) {
    motzperm_check_selection sel = MOTZPERM_CHECKS_ALL;
    if (theorem == "1.3") sel = MOTZPERM_CHECKS_SIGNED_PERMUTATION_GF;
    if (theorem == "1.4") sel = MOTZPERM_CHECKS_DERANGEMENT_SERIES;
    if (theorem == "table1") sel = MOTZPERM_CHECKS_TABLE1;
    motzperm_report* raw = nullptr;
    check(motzperm_verify(max_n, sel, &raw));
    std::unique_ptr<motzperm_report, ReportDeleter> report(raw);
    const motzperm_format fmt = format == "csv"    ? MOTZPERM_FORMAT_CSV
                                : format == "text" ? MOTZPERM_FORMAT_TEXT
                                                   : MOTZPERM_FORMAT_JSON;
    char* rendered = nullptr;
    check(motzperm_report_render(report.get(), fmt, timing ? 1 : 0, &rendered));
    std::cout << take(rendered);
    if (!motzperm_report_all_passed(report.get())) {
        std::cerr << "verification failed\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation statistics, weighted Motzkin paths and continued fractions"};
    app.require_subcommand(1);

    std::string format = "text";
    const std::vector<std::string> formats{"text", "json", "csv"};

    std::string perm;
    auto* stats = app.add_subcommand("stats", "inv, fix, exc and depth of a permutation");
    stats->add_option("perm,--perm", perm, "one-line permutation, e.g. \"3 2 1\"")->required();
    stats->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* encode = app.add_subcommand("encode", "permutation -> weighted Motzkin path");
    encode->add_option("perm,--perm", perm, "one-line permutation")->required();
    encode->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

    std::string path;
    auto* decode = app.add_subcommand("decode", "weighted Motzkin path -> permutation");
    decode->add_option("path,--path", path, "path text `U(1,0) D(1,0)` or JSON array")->required();
    decode->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

    std::string preset = "depth";
    int order = 8;
    auto* expand = app.add_subcommand("expand", "expand a preset continued fraction");
    expand->add_option("--preset", preset)->check(CLI::IsMember(std::vector<std::string>{"depth", "refined"}));
    expand->add_option("--order", order, "highest power of z")->check(CLI::NonNegativeNumber);
    expand->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string stat = "depth";
    int n = 1;
    auto* imbalance = app.add_subcommand("imbalance", "signed sum of (-1)^stat over S_n");
    imbalance->add_option("--stat", stat)->check(CLI::IsMember(std::vector<std::string>{"depth", "exc"}));
    imbalance->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    imbalance->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* involution = app.add_subcommand("involution", "apply the parity-reversing involution");
    involution->add_option("perm,--perm", perm, "one-line permutation")->required();
    involution->add_option("--format", format)->check(CLI::IsMember(formats));

    int max_n = 8;
    std::string theorem = "all";
    bool timing = false;
    std::string verify_format = "json";
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
    verify->add_option("--theorem", theorem, "all, 1.3 (signed permutations), 1.4 (derangement series), table1")
        ->check(CLI::IsMember(std::vector<std::string>{"all", "1.3", "1.4", "table1"}));
    verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));
    verify->add_flag("--timing", timing, "include elapsed_ms per record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*stats) return cmd_stats(perm, format);
        if (*encode) return cmd_encode(perm, format);
        if (*decode) return cmd_decode(path, format);
        if (*expand) return cmd_expand(preset, order, format);
        if (*imbalance) return cmd_imbalance(stat, n, format);
        if (*involution) return cmd_involution(perm, format);
        if (*verify) return cmd_verify(max_n, theorem, verify_format, timing);
    } catch (const LibraryError& e) {
        std::cerr << "error: " << motzperm_status_string(e.status) << ": " << e.message << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
