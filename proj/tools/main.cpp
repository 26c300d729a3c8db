// Batch front-end for the algebra toolkit. Subcommands load a scenario
// file, run one pipeline, and print a deterministic report (text or JSON).
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 domain or internal
// error (no Dirac states, infeasible extension, inconsistent pipeline),
// 3 input error (bad JSON, bad dimensions, bad options).

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ljb/io/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Lie-Jordan algebra toolkit for Hermitian matrix models"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON instead of text");
    // let the shared --json flag appear after the subcommand too
    app.fallthrough();

    std::string verify_file;
    ljb::io::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "check product identities, norms, positivity, and state "
                  "inequalities on a scenario's algebra");
    verify->add_option("file", verify_file, "scenario file")->required();
    verify->add_option("--samples", verify_opt.samples,
                       "random samples per check (default 200)");
    verify->add_option("--seed", verify_opt.seed, "rng seed (default 1)");
    verify->add_option("--tol", verify_opt.tol,
                       "axiom residual gate (default 1e-9)");

    std::string reduce_file;
    ljb::io::ReduceOptions reduce_opt;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "reduce the algebra by symmetry generators or constraints");
    reduce->add_option("file", reduce_file, "scenario file")->required();
    reduce->add_option("--mode", reduce_opt.mode, "symmetry or constraints")
        ->required();
    reduce->add_option("--out", reduce_opt.out_path,
                       "write the reduced algebra as a scenario file");

    std::string states_file;
    ljb::io::StatesOptions states_opt;
    CLI::App* states = app.add_subcommand(
        "states", "Dirac-state characterization and reduce/lift round trips "
                  "for a constraint scenario");
    states->add_option("file", states_file, "scenario file")->required();
    states->add_option("--samples", states_opt.samples,
                       "sampled states per check (default 100)");
    states->add_option("--seed", states_opt.seed, "rng seed (default 1)");
    states->add_option("--reduced", states_opt.reduced_path,
                       "cross-check a previously written reduced scenario");

    std::string example_kind;
    int example_l = 0;
    int example_lmax = 0;
    std::string example_out;
    CLI::App* example = app.add_subcommand(
        "example", "emit a bundled worked example as a scenario file");
    example->add_option("kind", example_kind, "example name (angular-momentum)")
        ->required();
    example->add_option("--l", example_l, "selected sector")->required();
    example->add_option("--lmax", example_lmax, "largest sector in the tower")
        ->required();
    example->add_option("--out", example_out,
                        "target file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3; // help exits clean, usage errors are input errors
    }

    try {
        if (example->parsed()) {
            if (example_kind != "angular-momentum")
                throw ljb::ValidationError("unknown example \"" + example_kind +
                                           "\"; available: angular-momentum");
            const ljb::io::ScenarioFile sc =
                ljb::io::make_angular_momentum_scenario(example_l,
                                                        example_lmax);
            if (example_out.empty())
                std::cout << ljb::io::serialize_scenario(sc);
            else
                ljb::io::save_scenario(sc, example_out);
            return 0;
        }

        ljb::io::ReductionReport rep;
        if (verify->parsed())
            rep = ljb::io::cmd_verify(ljb::io::load_scenario(verify_file),
                                      verify_opt);
        else if (reduce->parsed())
            rep = ljb::io::cmd_reduce(ljb::io::load_scenario(reduce_file),
                                      reduce_opt);
        else
            rep = ljb::io::cmd_states(ljb::io::load_scenario(states_file),
                                      states_opt);

        std::cout << (as_json ? rep.to_json() : rep.to_text());
        return rep.passed ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ljb::io::exit_code_for(e);
    }
}
