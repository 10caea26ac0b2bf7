// Command line surface: parameter checks, orbit tables, period decisions,
// restriction signs, and the verification suites. Output is JSON by
// default, TSV with --format tsv; SHALIKA_FORMAT overrides the flag.
// Exit codes: 0 success, 2 invalid input, 1 verification failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shalika/json_io.hpp"
#include "shalika/shalika.hpp"

namespace {

using namespace shalika;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void run_param_check(const std::string& file, bool tsv) {
    Json in = load_json(file);
    StandardModule m = module_from_json(in);
    MultChar eta = eta_from_json(in, m.field());
    LParameter phi = langlands_param(m);
    SymplecticDecision dec = is_symplectic_eta(phi, eta);
    if (tsv)
        std::cout << param_check_to_tsv(m, phi, dec) << '\n';
    else
        std::cout << param_check_to_json(m, phi, dec).dump(2) << '\n';
}

void run_orbits(const std::string& comp_str, bool classify_flag, bool tsv) {
    ParabolicDatum P(Composition::parse(comp_str));
    if (classify_flag) {
        auto orbits = classified_orbits(P);
        if (tsv) {
            std::cout << orbit_tsv_header() << '\n';
            for (const auto& d : orbits) std::cout << orbit_to_tsv(d) << '\n';
        } else {
            std::cout << orbits_to_json(orbits).dump(2) << '\n';
        }
        return;
    }
    auto orbits = enumerate_omega(P);
    std::sort(orbits.begin(), orbits.end(), [](const OrbitDescriptor& a, const OrbitDescriptor& b) {
        int la = a.omega.length();
        int lb = b.omega.length();
        if (la != lb) return la > lb;
        return a.omega < b.omega;
    });
    if (tsv) {
        std::cout << "omega\tgamma\tsigma\tlength\n";
        for (const auto& d : orbits)
            std::cout << d.omega.str() << '\t' << d.gamma.str() << '\t' << d.sigma.str() << '\t'
                      << d.length() << '\n';
    } else {
        Json arr = Json::array();
        for (const auto& d : orbits) {
            Json j;
            j["omega"] = d.omega.str();
            j["gamma"] = d.gamma.str();
            j["sigma"] = d.sigma.str();
            j["length"] = d.length();
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
    }
}

void run_period(const std::string& file, bool generic_flag, bool linear_flag, bool tsv) {
    Json in = load_json(file);
    StandardModule m = module_from_json(in);
    MultChar eta = eta_from_json(in, m.field());
    Rat a = psi_a_from_json(in);
    bool generic = generic_flag || assume_generic_from_json(in);
    PeriodReport rep = linear_flag ? linear_decision(m, eta, generic)
                                   : shalika_decision(m, ShalikaSpec(eta, a), generic);
    if (tsv)
        std::cout << period_report_to_tsv(m, rep) << '\n';
    else
        std::cout << period_report_to_json(m, rep).dump(2) << '\n';
}

void run_epsilon(const std::string& file, const std::string& a_str, bool tsv) {
    Json in = load_json(file);
    StandardModule m = module_from_json(in);
    MultChar eta = eta_from_json(in, m.field());
    Rat a = a_str.empty() ? psi_a_from_json(in) : Rat::parse(a_str);
    if (a.is_zero()) throw std::invalid_argument("psi parameter a must be nonzero");
    EpsilonReport rep = epsilon_pi(m, ShalikaSpec(eta, a));
    if (tsv)
        std::cout << epsilon_report_to_tsv(m, rep) << '\n';
    else
        std::cout << epsilon_report_to_json(m, rep).dump(2) << '\n';
}

int run_verify(int max_n, unsigned seed) {
    auto suites = run_verification(max_n, seed);
    bool ok = true;
    for (const auto& s : suites) {
        std::cout << "suite " << s.name << ": " << s.checks << " checks";
        if (s.passed()) {
            std::cout << ", ok\n";
        } else {
            ok = false;
            std::cout << ", FAILED\n  first counterexample: " << s.failures.front() << '\n';
        }
    }
    std::cout << (ok ? "all suites passed\n" : "verification failed\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decisions for twisted Shalika periods on GL(2n)"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::string file;
    std::string comp_str;
    std::string a_str;
    bool classify_flag = false;
    bool generic_flag = false;
    bool linear_flag = false;
    int max_n = 3;
    unsigned seed = 20260822;

    auto* cmd_param = app.add_subcommand("param-check", "L-parameter and eta-symplectic test");
    cmd_param->add_option("file", file, "input JSON file")->required();

    auto* cmd_orbits = app.add_subcommand("orbits", "orbit representatives for a composition");
    cmd_orbits->add_option("composition", comp_str, "cuspidal composition, e.g. 2+1+2")
        ->required();
    cmd_orbits->add_flag("--classify", classify_flag, "emit the full classification table");

    auto* cmd_period = app.add_subcommand("period", "Shalika period existence decision");
    cmd_period->add_option("file", file, "input JSON file")->required();
    cmd_period->add_flag("--generic", generic_flag,
                         "assume the module is irreducible and generic");
    cmd_period->add_flag("--linear", linear_flag, "decide the twisted linear period instead");

    auto* cmd_eps = app.add_subcommand("epsilon", "restriction sign for the GL+ constituents");
    cmd_eps->add_option("file", file, "input JSON file")->required();
    cmd_eps->add_option("--a", a_str, "psi parameter, a nonzero rational");

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant and oracle suites");
    cmd_verify->add_option("--max-n", max_n, "largest n covered, columns 2n")
        ->check(CLI::Range(1, 5));
    cmd_verify->add_option("--seed", seed, "corpus seed");

    // --format may follow the subcommand
    for (auto* sub : {cmd_param, cmd_orbits, cmd_period, cmd_eps, cmd_verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("SHALIKA_FORMAT")) {
        std::string f = env;
        if (f != "json" && f != "tsv") {
            std::cerr << "SHALIKA_FORMAT must be \"json\" or \"tsv\", got \"" << f << "\"\n";
            return 2;
        }
        format = f;
    }
    bool tsv = format == "tsv";

    try {
        if (cmd_param->parsed()) run_param_check(file, tsv);
        else if (cmd_orbits->parsed()) run_orbits(comp_str, classify_flag, tsv);
        else if (cmd_period->parsed()) run_period(file, generic_flag, linear_flag, tsv);
        else if (cmd_eps->parsed()) run_epsilon(file, a_str, tsv);
        else if (cmd_verify->parsed()) return run_verify(max_n, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
