// scomp: exact counting and enumeration of restricted integer compositions.
//
// Subcommands: count, enumerate, seq, lhrc solve, crosscheck, verify bijections.
// Data goes to stdout (plain value or JSON with counts as decimal strings);
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 crosscheck mismatch, 2 bad input, 3 unsupported
// engine/set combination, 4 enumeration ceiling exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scomp/closedforms.hpp"
#include "scomp/diophantine.hpp"
#include "scomp/engines.hpp"
#include "scomp/errors.hpp"
#include "scomp/interpreters.hpp"
#include "scomp/lhrc.hpp"
#include "scomp/oracle.hpp"
#include "scomp/partset.hpp"
#include "scomp/sequences.hpp"

using nlohmann::json;
using namespace scomp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitLimit = 4;

std::string default_format(const std::string& fallback) {
    const char* env = std::getenv("SCOMP_FORMAT");
    if (env && (std::string(env) == "json" || std::string(env) == "plain" ||
                std::string(env) == "lines"))
        return env;
    return fallback;
}

std::vector<long long> parse_csv_integers(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json count_report(const PartSet& s, int n, Engine requested) {
    auto start = std::chrono::steady_clock::now();
    Engine actual = requested == Engine::Auto ? resolve_auto(s, n) : requested;
    BigInt count = count_with_engine(s, n, actual);
    double ms = elapsed_ms(start);

    int t1 = static_cast<int>(materialize(s, n).size());
    json t2;
    if (s.kind() == SetKind::Residue && s.residue_m() >= 2) {
        t2 = "unbounded";
    } else {
        std::set<int> distinct;
        for (auto [offset, coeff] : second_interpreter_terms(s, std::max(n, 1))) {
            (void)coeff;
            distinct.insert(offset);
        }
        t2 = static_cast<int>(distinct.size());
    }

    return json{{"set_spec", s.to_spec()}, {"n", n},
                {"engine", engine_name(actual)}, {"count", to_string(count)},
                {"t1", t1},                      {"t2", t2},
                {"elapsed_ms", ms}};
}

int run_count(const std::string& set_spec, int n, const std::string& engine_text,
              const std::string& format) {
    std::optional<Engine> engine = parse_engine(engine_text);
    if (!engine) {
        std::cerr << "error: unknown engine '" << engine_text << "'\n";
        return kExitBadInput;
    }
    PartSet s = parse_set(set_spec);
    json report = count_report(s, n, *engine);
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report["count"].get<std::string>() << "\n";
    return kExitOk;
}

int run_enumerate(const std::string& set_spec, int n, std::optional<long long> limit,
                  const std::string& format) {
    PartSet s = parse_set(set_spec);
    std::vector<Composition> all = enumerate(s, n);
    bool truncated = limit && *limit >= 0 && all.size() > static_cast<std::size_t>(*limit);
    std::size_t shown = truncated ? static_cast<std::size_t>(*limit) : all.size();

    if (format == "json") {
        json items = json::array();
        for (std::size_t i = 0; i < shown; ++i) items.push_back(all[i]);
        json report{{"set_spec", s.to_spec()},
                    {"n", n},
                    {"total", std::to_string(all.size())},
                    {"compositions", items},
                    {"truncated", truncated}};
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < shown; ++i) {
        const Composition& c = all[i];
        if (c.empty()) {
            std::cout << "()\n";
            continue;
        }
        for (std::size_t j = 0; j < c.size(); ++j)
            std::cout << c[j] << (j + 1 < c.size() ? "," : "\n");
    }
    if (truncated) std::cout << "# truncated at limit=" << *limit << "\n";
    return kExitOk;
}

int run_seq(const std::string& name, int n, std::optional<int> m,
            const std::string& method_text, const std::string& format) {
    Method method;
    if (method_text == "closed")
        method = Method::Closed;
    else if (method_text == "recurrence")
        method = Method::Recurrence;
    else {
        std::cerr << "error: unknown method '" << method_text << "'\n";
        return kExitBadInput;
    }

    BigInt value;
    if (name == "mfib") {
        if (!m) {
            std::cerr << "error: seq mfib requires --m\n";
            return kExitBadInput;
        }
        value = m_fibonacci(*m, n, method);
    } else if (name == "lucas") {
        value = lucas(n, method);
    } else if (name == "padovan") {
        value = padovan(n, method);
    } else if (name == "perrin") {
        value = perrin(n, method);
    } else if (name == "pell") {
        value = pell(n, method);
    } else if (name == "pell-lucas") {
        value = pell_lucas(n, method);
    } else {
        std::cerr << "error: unknown sequence '" << name << "'\n";
        return kExitBadInput;
    }

    if (format == "json") {
        json report{{"sequence", name}, {"n", n}, {"method", method_text},
                    {"value", to_string(value)}};
        if (m) report["m"] = *m;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return kExitOk;
}

int run_lhrc(const std::string& offsets_text, const std::string& coeffs_text,
             const std::string& init_text, int n, const std::string& method,
             const std::string& format) {
    std::vector<long long> raw_offsets = parse_csv_integers(offsets_text, "--offsets");
    std::vector<long long> coeffs = parse_csv_integers(coeffs_text, "--coeffs");
    std::vector<long long> init = parse_csv_integers(init_text, "--init");

    Lhrc rec;
    for (long long a : raw_offsets) rec.offsets.push_back(static_cast<int>(a));
    rec.coeffs = coeffs;
    for (long long v : init) rec.initial.emplace_back(v);
    rec.validate();

    BigInt value;
    if (method == "dp")
        value = eval_dp(rec, n);
    else if (method == "closed")
        value = solve_closed(rec, n);
    else {
        std::cerr << "error: unknown method '" << method << "'\n";
        return kExitBadInput;
    }

    if (format == "json") {
        json report{{"offsets", rec.offsets}, {"coeffs", rec.coeffs},
                    {"n", n},                 {"method", method},
                    {"value", to_string(value)}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return kExitOk;
}

int run_crosscheck(const std::string& set_spec, int max_n,
                   const std::string& engines_text) {
    PartSet s = parse_set(set_spec);

    std::vector<Engine> candidates;
    if (engines_text.empty()) {
        candidates = {Engine::Brute, Engine::Dio, Engine::Dp1, Engine::Dp2, Engine::Closed};
    } else {
        std::stringstream stream(engines_text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            std::optional<Engine> e = parse_engine(item);
            if (!e || *e == Engine::Auto)
                throw std::invalid_argument("crosscheck: bad engine '" + item + "'");
            candidates.push_back(*e);
        }
    }

    std::vector<Engine> engines;
    for (Engine e : candidates) {
        bool applicable = e == Engine::Dp2
                              ? max_n >= 2 && second_interpreter_supported(s, max_n)
                              : engine_supports(e, s, 0);
        if (e == Engine::Brute || applicable) engines.push_back(e);
    }

    json mismatches = json::array();
    for (int n = 0; n <= max_n; ++n) {
        BigInt reference = count_brute(s, n);
        for (Engine e : engines) {
            if (e == Engine::Brute || !engine_supports(e, s, n)) continue;
            BigInt value = count_with_engine(s, n, e);
            if (value != reference)
                mismatches.push_back(json::array({n, engine_name(e), to_string(value)}));
        }
    }

    json engine_names = json::array();
    for (Engine e : engines) engine_names.push_back(engine_name(e));
    bool pass = mismatches.empty();
    json report{{"set_spec", s.to_spec()},
                {"n_range", json::array({0, max_n})},
                {"engines_compared", engine_names},
                {"mismatches", mismatches},
                {"verdict", pass ? "pass" : "fail"}};
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitMismatch;
}

int run_verify_bijections(int max_n) {
    json verdicts = json::array();
    for (const BijectionVerdict& v : verify_bijections(max_n)) {
        json evidence = json::array();
        for (const BijectionEvidence& e : v.evidence)
            evidence.push_back(json{{"n", e.n},
                                    {"lhs", to_string(e.lhs)},
                                    {"rhs", to_string(e.rhs)},
                                    {"shift", e.shift},
                                    {"convention", e.convention}});
        json entry{{"claim_id", v.claim_id}, {"claim", v.claim},
                   {"status", v.confirmed ? "confirmed_with_shift" : "refuted"},
                   {"evidence", evidence}};
        if (v.confirmed) {
            entry["shift"] = v.shift;
            entry["convention"] = v.convention;
        }
        verdicts.push_back(entry);
    }
    json report{{"max_n", max_n}, {"verdicts", verdicts}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and enumeration of restricted integer compositions"};
    app.require_subcommand(1);

    std::string set_spec, engine_text = "auto", format;
    int n = 0, max_n = 20;
    std::optional<long long> limit;

    CLI::App* count = app.add_subcommand("count", "count the compositions of n");
    count->add_option("--set", set_spec, "set specification")->required();
    count->add_option("--n", n, "target integer")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--engine", engine_text, "brute|dio|dp1|dp2|closed|auto");
    count->add_option("--format", format, "plain|json");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the compositions of n");
    enumerate_cmd->add_option("--set", set_spec, "set specification")->required();
    enumerate_cmd->add_option("--n", n, "target integer")->required()->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--limit", limit, "print at most this many");
    enumerate_cmd->add_option("--format", format, "lines|json");

    std::string seq_name, method_text;
    std::optional<int> seq_m;
    CLI::App* seq = app.add_subcommand("seq", "evaluate a classical sequence");
    seq->add_option("name", seq_name, "mfib|lucas|padovan|perrin|pell|pell-lucas")->required();
    seq->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--m", seq_m, "step count for mfib");
    seq->add_option("--method", method_text, "closed|recurrence");
    seq->add_option("--format", format, "plain|json");

    std::string offsets_text, coeffs_text, init_text, lhrc_method = "dp";
    CLI::App* lhrc_cmd = app.add_subcommand("lhrc", "linear recurrences");
    CLI::App* lhrc_solve = lhrc_cmd->add_subcommand("solve", "evaluate f(n)");
    lhrc_solve->add_option("--offsets", offsets_text, "comma-separated offsets")->required();
    lhrc_solve->add_option("--coeffs", coeffs_text, "comma-separated coefficients")->required();
    lhrc_solve->add_option("--init", init_text, "comma-separated initial values")->required();
    lhrc_solve->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
    lhrc_solve->add_option("--method", lhrc_method, "dp|closed");
    lhrc_solve->add_option("--format", format, "plain|json");

    std::string engines_text;
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "compare all engines against brute force");
    crosscheck->add_option("--set", set_spec, "set specification")->required();
    crosscheck->add_option("--max-n", max_n, "check all n up to this")->required()
        ->check(CLI::NonNegativeNumber);
    crosscheck->add_option("--engines", engines_text, "comma-separated engine subset");

    CLI::App* verify = app.add_subcommand("verify", "verification reports");
    verify->require_subcommand(1);
    CLI::App* bijections = verify->add_subcommand("bijections", "sequence correspondence report");
    bijections->add_option("--max-n", max_n, "test all n up to this")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    // An explicit --format wins; otherwise SCOMP_FORMAT overrides the default.
    auto pick_format = [&format](const char* fallback) {
        return format.empty() ? default_format(fallback) : format;
    };

    try {
        if (count->parsed()) return run_count(set_spec, n, engine_text, pick_format("plain"));
        if (enumerate_cmd->parsed())
            return run_enumerate(set_spec, n, limit, pick_format("lines"));
        if (seq->parsed())
            return run_seq(seq_name, n, seq_m, method_text.empty() ? "closed" : method_text,
                           pick_format("plain"));
        if (lhrc_cmd->parsed())
            return run_lhrc(offsets_text, coeffs_text, init_text, n, lhrc_method,
                            pick_format("plain"));
        if (crosscheck->parsed()) return run_crosscheck(set_spec, max_n, engines_text);
        if (verify->parsed()) return run_verify_bijections(max_n);
        std::cerr << "error: no subcommand\n";
        return kExitBadInput;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
