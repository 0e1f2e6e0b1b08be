#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topocard/enumerate.hpp"
#include "topocard/estimators.hpp"
#include "topocard/interval.hpp"
#include "topocard/json_io.hpp"
#include "topocard/topology.hpp"
#include "topocard/verifier.hpp"

namespace {

using namespace topocard;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEstimate = 3;
constexpr int kExitContainment = 4;

std::int64_t parse_int(const std::string& text) {
    std::size_t used = 0;
    std::int64_t value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

// Interval flags take "lo,hi" pairs; a bare scalar k means [k,k].
NatInterval parse_interval_arg(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) return from_scalar(parse_int(text));
    return NatInterval(parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1)));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_int(item));
    return out;
}

struct EnumerateConfig {
    int n = 0;
    EnumerationFilter filter;
    std::string output;
};

struct EstimateConfig {
    std::string theorem;
    std::string a, b, c, x;           // interval flags
    std::int64_t n = -1, m = -1, p = -1, k = -1;  // scalar flags
    std::string k_caps;
};

struct VerifyConfig {
    std::string theorem;
    bool all = false;
    int n = 0;
    int n_max = 0;
    std::string reading;
    std::string format = "json";
    std::string output;
    int counterexample_cap = 10;
    int shards = 1;
    int shard_index = 0;
    int threads = 0;
    bool expect_containment = false;
};

int run_enumerate(const EnumerateConfig& cfg) {
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "cannot open output file: " << cfg.output << "\n";
            return kExitUsage;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;
    for_each_space(cfg.n, cfg.filter,
                   [&](const FiniteSpace& space) { out << space_to_json(space).dump() << "\n"; });
    return kExitOk;
}

int run_classify() {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "invalid JSON on stdin: " << e.what() << "\n";
        return kExitUsage;
    }
    FiniteSpace space = space_from_json(j);
    std::cout << classification_to_json(space).dump(2) << "\n";
    return kExitOk;
}

void require_interval(const std::string& theorem, const std::string& value, const char* flag) {
    if (value.empty())
        throw std::invalid_argument("estimate " + theorem + " requires --" + flag + " lo,hi");
}

void require_scalar(const std::string& theorem, std::int64_t value, const char* flag) {
    if (value < 0)
        throw std::invalid_argument("estimate " + theorem + " requires --" + flag + " <int>");
}

NatInterval dispatch_estimate(const EstimateConfig& cfg) {
    const std::string& id = cfg.theorem;
    if (id == "thm2.1") {
        require_scalar(id, cfg.n, "n");
        require_interval(id, cfg.a, "a");
        return est_superset_card({static_cast<int>(cfg.n), parse_interval_arg(cfg.a)});
    }
    if (id == "thm2.2") {
        require_interval(id, cfg.c, "c");
        require_interval(id, cfg.a, "a");
        return est_factor_card({parse_interval_arg(cfg.c), parse_interval_arg(cfg.a)});
    }
    if (id == "thm2.3" || id == "thm3.5") {
        require_interval(id, cfg.x, "x");
        require_interval(id, cfg.a, "a");
        require_interval(id, cfg.b, "b");
        UnionSplitHypothesis h{parse_interval_arg(cfg.x), parse_interval_arg(cfg.a),
                               parse_interval_arg(cfg.b)};
        return id == "thm2.3" ? est_intersection_card(h)
                              : est_hyperconnected_intersection_card(h);
    }
    if (id == "thm3.1") {
        require_scalar(id, cfg.n, "n");
        require_scalar(id, cfg.m, "m");
        return est_closure_card({static_cast<int>(cfg.n), static_cast<int>(cfg.m)});
    }
    if (id == "thm3.2") {
        require_scalar(id, cfg.n, "n");
        require_scalar(id, cfg.p, "p");
        if (cfg.k_caps.empty())
            throw std::invalid_argument("estimate thm3.2 requires --k-caps k1,k2,...");
        return est_interior_card(
            {static_cast<int>(cfg.n), static_cast<int>(cfg.p), parse_int_list(cfg.k_caps)});
    }
    if (id == "thm3.3") {
        require_scalar(id, cfg.n, "n");
        require_scalar(id, cfg.k, "k");
        return est_semiopen_card({static_cast<int>(cfg.n), static_cast<int>(cfg.k)});
    }
    if (id == "thm3.4") {
        require_interval(id, cfg.x, "x");
        require_interval(id, cfg.a, "a");
        require_interval(id, cfg.b, "b");
        return est_ed_union_closure_card(
            {parse_interval_arg(cfg.x), parse_interval_arg(cfg.a), parse_interval_arg(cfg.b)});
    }
    throw UnknownTheorem("unknown theorem identifier: " + id);
}

int run_estimate(const EstimateConfig& cfg) {
    try {
        NatInterval result = dispatch_estimate(cfg);
        nlohmann::json out{{"theorem", cfg.theorem}, {"interval", interval_to_json(result)}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    } catch (const EstimateError& e) {
        nlohmann::json out{{"theorem", cfg.theorem},
                           {"error", estimate_error_name(e.code())},
                           {"message", e.what()}};
        std::cout << out.dump() << "\n";
        return kExitEstimate;
    }
}

int env_thread_cap() {
    const char* raw = std::getenv("TOPOCARD_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        std::int64_t v = parse_int(raw);
        return v > 0 ? static_cast<int>(v) : 1;
    } catch (const std::exception&) {
        return 0;
    }
}

int run_verify(const VerifyConfig& cfg) {
    VerifyOptions opts;
    opts.counterexample_cap = cfg.counterexample_cap;
    opts.shard_index = cfg.shard_index;
    opts.shard_count = cfg.shards;
    opts.threads = cfg.threads;
    if (int cap = env_thread_cap(); cap > 0)
        opts.threads = opts.threads == 0 ? cap : std::min(opts.threads, cap);

    std::vector<HypothesisReading> readings;
    if (!cfg.reading.empty()) {
        std::optional<HypothesisReading> r = parse_reading(cfg.reading);
        if (!r || *r == HypothesisReading::NotApplicable)
            throw std::invalid_argument("--reading must be 'literal' or 'pointwise'");
        readings.push_back(*r);
    } else {
        readings = {HypothesisReading::LiteralNonT1, HypothesisReading::PointwiseNonT1};
    }

    std::vector<VerificationReport> reports;
    if (cfg.all) {
        reports = verify_all(cfg.n_max, readings, opts);
    } else {
        if (theorem_has_readings(cfg.theorem)) {
            for (HypothesisReading r : readings)
                reports.push_back(verify_theorem(cfg.theorem, cfg.n, r, opts));
        } else {
            reports.push_back(
                verify_theorem(cfg.theorem, cfg.n, HypothesisReading::NotApplicable, opts));
        }
    }

    for (const VerificationReport& r : reports) std::cerr << report_summary_line(r) << "\n";

    std::string json_payload = reports_to_json(reports).dump(2) + "\n";
    std::string csv_payload = reports_to_csv(reports);
    if (!cfg.output.empty()) {
        for (const char* ext : {".json", ".csv"}) {
            std::ofstream file(cfg.output + ext);
            if (!file) {
                std::cerr << "cannot open output file: " << cfg.output << ext << "\n";
                return kExitUsage;
            }
            file << (ext[1] == 'j' ? json_payload : csv_payload);
        }
    }
    std::cout << (cfg.format == "csv" ? csv_payload : json_payload);

    if (cfg.expect_containment) {
        for (const VerificationReport& r : reports)
            if (r.cases_contained != r.cases_total) return kExitContainment;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval estimates for cardinalities in finite topological spaces"};
    app.require_subcommand(1);

    EnumerateConfig enum_cfg;
    CLI::App* cmd_enum = app.add_subcommand(
        "enumerate", "emit all topologies on n labeled points as newline-delimited JSON");
    cmd_enum->add_option("--n", enum_cfg.n, "carrier size (1..5)")->required();
    cmd_enum->add_flag("--non-t1", enum_cfg.filter.require_non_t1, "keep only non-T1 spaces");
    cmd_enum->add_flag("--pointwise-non-t1", enum_cfg.filter.require_pointwise_non_t1,
                       "keep only spaces where every singleton closure has 2+ points");
    cmd_enum->add_flag("--ed", enum_cfg.filter.require_ed,
                       "keep only extremally disconnected spaces");
    cmd_enum->add_flag("--hyperconnected", enum_cfg.filter.require_hyperconnected,
                       "keep only hyperconnected spaces");
    cmd_enum->add_flag("--t0", enum_cfg.filter.require_t0, "keep only T0 spaces");
    cmd_enum->add_option("--output", enum_cfg.output, "write to this file instead of stdout");

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "read one space as JSON on stdin, print its properties");

    EstimateConfig est_cfg;
    CLI::App* cmd_estimate =
        app.add_subcommand("estimate", "evaluate one cardinality estimator on given bounds");
    cmd_estimate->add_option("--theorem", est_cfg.theorem, "estimator id, e.g. thm2.2")
        ->required();
    cmd_estimate->add_option("--a", est_cfg.a, "interval lo,hi (or scalar)");
    cmd_estimate->add_option("--b", est_cfg.b, "interval lo,hi (or scalar)");
    cmd_estimate->add_option("--c", est_cfg.c, "interval lo,hi (or scalar)");
    cmd_estimate->add_option("--x", est_cfg.x, "carrier interval lo,hi (or scalar)");
    cmd_estimate->add_option("--n", est_cfg.n, "carrier size");
    cmd_estimate->add_option("--m", est_cfg.m, "subset cardinality");
    cmd_estimate->add_option("--p", est_cfg.p, "subset cardinality");
    cmd_estimate->add_option("--k", est_cfg.k, "witness open cardinality");
    cmd_estimate->add_option("--k-caps", est_cfg.k_caps,
                             "singleton closure caps k1,k2,... for points outside A");

    VerifyConfig ver_cfg;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "sweep enumerated spaces and measure estimator containment");
    CLI::Option* opt_theorem = cmd_verify->add_option("--theorem", ver_cfg.theorem, "theorem id");
    CLI::Option* opt_all = cmd_verify->add_flag("--all", ver_cfg.all, "verify every theorem");
    opt_theorem->excludes(opt_all);
    cmd_verify->add_option("--n", ver_cfg.n, "carrier size for --theorem");
    cmd_verify->add_option("--n-max", ver_cfg.n_max, "max carrier size for --all");
    cmd_verify->add_option("--reading", ver_cfg.reading,
                           "non-T1 reading: literal or pointwise (default: both)");
    cmd_verify->add_option("--format", ver_cfg.format, "stdout payload: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_verify->add_option("--output", ver_cfg.output,
                           "base path; writes <base>.json and <base>.csv");
    cmd_verify->add_option("--counterexample-cap", ver_cfg.counterexample_cap,
                           "max counterexamples kept per report");
    cmd_verify->add_option("--shards", ver_cfg.shards, "total shard count");
    cmd_verify->add_option("--shard-index", ver_cfg.shard_index, "this shard's index");
    cmd_verify->add_option("--threads", ver_cfg.threads, "worker threads (0 = auto)");
    cmd_verify->add_flag("--expect-containment", ver_cfg.expect_containment,
                         "exit 4 if any report has a violation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(enum_cfg);
        if (cmd_classify->parsed()) return run_classify();
        if (cmd_estimate->parsed()) return run_estimate(est_cfg);
        if (cmd_verify->parsed()) {
            if (!ver_cfg.all && ver_cfg.theorem.empty()) {
                std::cerr << "verify requires --theorem <id> or --all\n";
                return kExitUsage;
            }
            if (ver_cfg.all && ver_cfg.n_max < 1) {
                std::cerr << "verify --all requires --n-max >= 1\n";
                return kExitUsage;
            }
            if (!ver_cfg.all && ver_cfg.n < 1) {
                std::cerr << "verify --theorem requires --n >= 1\n";
                return kExitUsage;
            }
            return run_verify(ver_cfg);
        }
        return kExitUsage;
    } catch (const NotATopology& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownTheorem& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const CarrierTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
