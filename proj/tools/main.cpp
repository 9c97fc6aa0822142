// esymdom command line: one-off calculators for the dominance order plus
// the seeded verification harness.
//
//   esymdom esym 1 2 3
//   esymdom dominance [--tol T] 2 0.5 -- 4 0.25
//   esymdom verify --property SSLI --n 5 --trials 1000 --seed 7 [--out r.json]
//   esymdom pairs --n 4 --count 100 --constraint FullStrict --seed 1 [--out c.csv]
//
// Exit codes: 0 success (for verify: zero failing trials), 1 property
// failure, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esymdom/esymdom.hpp"

namespace {

std::optional<double> parse_number(const std::string& tok)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_esym(const std::vector<std::string>& args)
{
    if (args.empty()) {
        std::cerr << "esym: expected at least one entry\n";
        return 2;
    }
    std::vector<double> entries;
    for (const std::string& tok : args) {
        const auto v = parse_number(tok);
        if (!v) {
            std::cerr << "esym: not a number: " << tok << "\n";
            return 2;
        }
        entries.push_back(*v);
    }
    try {
        const esymdom::PositiveVector x{std::move(entries)};
        const esymdom::ESignature sig = esymdom::esym_all(x);
        std::string out = "{\"n\":" + std::to_string(sig.dim()) + ",\"e\":[";
        for (std::size_t k = 0; k < sig.dim(); ++k) {
            if (k) out += ",";
            out += esymdom::detail::fmt17(sig.values[k]);
        }
        std::cout << out << "]}\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "esym: " << e.what() << "\n";
        return 2;
    }
}

int cmd_dominance(const std::vector<std::string>& args)
{
    esymdom::ComparisonTolerance tol;
    std::vector<double> left;
    std::vector<double> right;
    bool after_separator = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok == "--tol") {
            if (i + 1 >= args.size()) {
                std::cerr << "dominance: --tol needs a value\n";
                return 2;
            }
            const auto v = parse_number(args[++i]);
            if (!v || !(*v > 0.0)) {
                std::cerr << "dominance: bad tolerance\n";
                return 2;
            }
            tol.tol_eq = *v;
            continue;
        }
        if (tok == "--") {
            if (after_separator) {
                std::cerr << "dominance: more than one separator\n";
                return 2;
            }
            after_separator = true;
            continue;
        }
        const auto v = parse_number(tok);
        if (!v) {
            std::cerr << "dominance: not a number: " << tok << "\n";
            return 2;
        }
        (after_separator ? right : left).push_back(*v);
    }
    if (!after_separator || left.empty() || right.empty()) {
        std::cerr << "dominance: usage: dominance [--tol T] x... -- y...\n";
        return 2;
    }
    if (left.size() != right.size()) {
        std::cerr << "dominance: vectors must have equal length\n";
        return 2;
    }
    try {
        const esymdom::PositiveVector x{std::move(left)};
        const esymdom::PositiveVector y{std::move(right)};
        const esymdom::DominanceVerdict v = esymdom::compare(x, y, tol);
        std::string out = std::string("{\"kind\":\"") + esymdom::to_string(v.kind) +
                          "\",\"direction\":\"" + esymdom::to_string(v.direction) +
                          "\",\"margins\":" +
                          esymdom::detail::json_vec(v.margins) + "}";
        std::cout << out << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "dominance: " << e.what() << "\n";
        return 2;
    }
}

int run_cli11(int argc, char** argv)
{
    CLI::App app{"elementary symmetric dominance order toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a seeded property batch");
    std::string property_name;
    esymdom::VerifyConfig cfg;
    std::string out_path;
    verify->add_option("--property", property_name, "property id")->required();
    verify->add_option("--n", cfg.n, "vector/matrix dimension");
    verify->add_option("--trials", cfg.trials, "evaluated trials to collect");
    verify->add_option("--seed", cfg.seed, "batch seed");
    verify->add_option("--alpha", cfg.alpha_grid, "alpha grid override");
    verify->add_option("--shrink", cfg.shrink,
                       "coefficient shrink (default: dimension-scaled)");
    verify->add_option("--out", out_path, "report JSON path");

    // pairs
    auto* pairs = app.add_subcommand("pairs", "emit a CSV pair corpus");
    std::size_t pairs_n = 2;
    long pairs_count = 100;
    std::string constraint_name = "FullStrict";
    std::uint64_t pairs_seed = 1;
    std::string pairs_out;
    pairs->add_option("--n", pairs_n, "vector dimension")->required();
    pairs->add_option("--count", pairs_count, "pairs to emit");
    pairs->add_option("--constraint", constraint_name, "pair constraint kind");
    pairs->add_option("--seed", pairs_seed, "corpus seed");
    pairs->add_option("--out", pairs_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto pid = esymdom::parse_property(property_name);
            if (!pid) {
                std::cerr << "verify: unknown property " << property_name << "\n";
                return 2;
            }
            cfg.property = *pid;
            const esymdom::VerificationReport rep = esymdom::run_property(cfg);
            std::cout << esymdom::summary_line(rep) << "\n";
            if (!out_path.empty()) {
                std::ofstream os(out_path, std::ios::binary);
                if (!os) {
                    std::cerr << "verify: cannot open " << out_path << "\n";
                    return 2;
                }
                os << esymdom::report_to_json(rep);
            }
            return rep.failures() == 0 ? 0 : 1;
        }
        if (pairs->parsed()) {
            const auto c = esymdom::parse_constraint(constraint_name);
            if (!c) {
                std::cerr << "pairs: unknown constraint " << constraint_name << "\n";
                return 2;
            }
            if (!esymdom::constraint_feasible(*c, pairs_n) || pairs_count < 0) {
                std::cerr << "pairs: infeasible configuration\n";
                return 2;
            }
            std::ostringstream buf;
            esymdom::write_pair_corpus(buf, pairs_n, *c, pairs_seed, pairs_count);
            if (pairs_out.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream os(pairs_out, std::ios::binary);
                if (!os) {
                    std::cerr << "pairs: cannot open " << pairs_out << "\n";
                    return 2;
                }
                os << buf.str();
            }
            return 0;
        }
    } catch (const esymdom::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: esymdom {esym|dominance|verify|pairs} ...\n";
        return 2;
    }
    const std::string cmd = argv[1];
    std::vector<std::string> rest(argv + 2, argv + argc);
    if (cmd == "esym") return cmd_esym(rest);
    if (cmd == "dominance") return cmd_dominance(rest);
    if (cmd == "verify" || cmd == "pairs") return run_cli11(argc, argv);
    if (cmd == "--help" || cmd == "-h") {
        std::cout << "usage: esymdom {esym|dominance|verify|pairs} ...\n";
        return 0;
    }
    std::cerr << "unknown subcommand: " << cmd << "\n";
    return 2;
}
