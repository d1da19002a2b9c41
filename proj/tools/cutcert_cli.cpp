/**
 * cutcert: command-line access to the cutting/cohomology pipelines.
 *
 * Exit codes: 0 consistent/valid, 1 inconsistency or invalid certificate,
 * 2 budget exhausted, 3 input error.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cutcert/certificate.hpp"
#include "cutcert/circle_map.hpp"
#include "cutcert/complex.hpp"
#include "cutcert/generators.hpp"
#include "cutcert/homology.hpp"
#include "cutcert/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct InputOptions {
    std::string path;      // .sc file
    std::string gen_spec;  // --gen NAME[:PARAM]
};

cutcert::SimplicialComplex load_complex(const InputOptions& in) {
    if (!in.gen_spec.empty())
        return cutcert::generate(cutcert::parse_generator_spec(in.gen_spec));
    if (in.path.empty()) throw cutcert::ScParseError("no input: give a .sc file or --gen");
    std::ifstream f(in.path);
    if (!f) throw cutcert::ScParseError("cannot open " + in.path);
    return cutcert::parse_sc(f);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

int cmd_h1(const InputOptions& in, bool as_json, const std::string& out_path) {
    cutcert::SimplicialComplex K;
    try {
        K = load_complex(in);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    cutcert::CohomologyResult r = cutcert::homology_summary(K);
    if (as_json) {
        cutcert::json j;
        j["betti"] = r.betti;
        cutcert::json tor = cutcert::json::array();
        for (const auto& t : r.h1_torsion) tor.push_back(static_cast<long long>(t));
        j["h1_torsion"] = tor;
        j["h1_trivial"] = r.h1_trivial;
        j["euler_characteristic"] = cutcert::euler_characteristic(K);
        write_output(j.dump(2), out_path);
    } else {
        std::ostringstream os;
        os << "betti:";
        for (auto b : r.betti) os << " " << b;
        os << "\nh1_torsion:";
        for (const auto& t : r.h1_torsion) os << " " << t;
        os << "\nh1_trivial: " << (r.h1_trivial ? "true" : "false") << "\n";
        write_output(os.str(), out_path);
    }
    return kExitOk;
}

int cmd_verify(const InputOptions& in, int max_facets, bool as_json,
               const std::string& out_path) {
    cutcert::SimplicialComplex K;
    try {
        K = load_complex(in);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    cutcert::TheoremReport r;
    try {
        int budget = max_facets > 0 ? max_facets : static_cast<int>(K.facets.size());
        r = cutcert::theorem_check(K, budget);
    } catch (const cutcert::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    if (as_json) {
        write_output(cutcert::theorem_report_to_json(r).dump(2), out_path);
    } else {
        std::ostringstream os;
        os << "h1_trivial: " << (r.h1_trivial ? "true" : "false") << "\n"
           << "candidates_tested: " << r.candidates_tested << "\n"
           << "exhaustive: " << (r.exhaustive ? "true" : "false") << "\n"
           << "non_cutting_witnesses: " << r.non_cutting_witnesses.size() << "\n"
           << "consistent: " << (r.consistent ? "true" : "false") << "\n";
        write_output(os.str(), out_path);
    }
    if (!r.consistent) return kExitInconsistent;
    if (!r.exhaustive) return kExitBudget;
    return kExitOk;
}

int cmd_witness(const InputOptions& in, int retries, const std::string& out_path) {
    cutcert::SimplicialComplex K;
    try {
        K = load_complex(in);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    try {
        cutcert::PipelineResult r = cutcert::full_pipeline(K, retries);
        write_output(cutcert::certificate_to_json(r.certificate).dump(2), out_path);
        return kExitOk;
    } catch (const cutcert::PreconditionViolatedError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cutcert::SearchExhaustedError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    }
}

int cmd_check_certificate(const std::string& path) {
    cutcert::WitnessCertificate W;
    try {
        std::ifstream f(path);
        if (!f) throw cutcert::ScParseError("cannot open " + path);
        cutcert::json j = cutcert::json::parse(f);
        W = cutcert::certificate_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    bool ok = cutcert::verify_certificate(W);
    std::cout << (ok ? "valid" : "INVALID") << "\n";
    return ok ? kExitOk : kExitInconsistent;
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
    try {
        cutcert::SimplicialComplex K =
            cutcert::generate(cutcert::parse_generator_spec(spec));
        write_output(cutcert::to_sc(K), out_path);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified cutting description of first cohomology"};
    app.require_subcommand(1);

    InputOptions in;
    int max_facets = 0;
    int retries = 8;
    bool as_json = false;
    std::string out_path;
    std::string gen_only_spec;
    std::string cert_path;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", in.path, "input .sc file");
        cmd->add_option("--gen", in.gen_spec, "generator spec, e.g. torus2 or sphere:2");
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->add_option("--out", out_path, "write output to a file");
    };

    auto* h1 = app.add_subcommand("h1", "Betti numbers, torsion, and the H^1 verdict");
    add_input(h1);

    auto* verify = app.add_subcommand("verify", "run the theorem consistency check");
    add_input(verify);
    verify->add_option("--max", max_facets, "max facets per domain (default: exhaustive)");

    auto* witness = app.add_subcommand(
        "witness", "construct a non-cutting witness and its circle-map certificate");
    add_input(witness);
    witness->add_option("--retries", retries, "subdivision retry bound (<= 8)")
        ->check(CLI::Range(1, 8));

    auto* check = app.add_subcommand("check", "verify a JSON certificate");
    check->add_option("certificate", cert_path, "certificate JSON file")->required();

    auto* gen = app.add_subcommand("gen", "emit a generator as .sc");
    gen->add_option("spec", gen_only_spec, "generator spec")->required();
    gen->add_option("--out", out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(h1)) return cmd_h1(in, as_json, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(in, max_facets, as_json, out_path);
        if (app.got_subcommand(witness)) return cmd_witness(in, retries, out_path);
        if (app.got_subcommand(check)) return cmd_check_certificate(cert_path);
        if (app.got_subcommand(gen)) return cmd_gen(gen_only_spec, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
