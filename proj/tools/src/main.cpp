#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"clutterlab: exact clutter, blocker and covering toolkit"};
    app.require_subcommand(1);

    clutterlab::cli::GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a Q_pq family clutter file");
    gen_cmd->add_option("-p", gen.p, "P-side block size (>= 1)")->required();
    gen_cmd->add_option("-q", gen.q, "Q-side block size (>= 1)")->required();
    gen_cmd->add_option("--f", gen.fspec,
                        "augmentation: none | caseI:all | caseI:<1-4 list> | caseII:<1-4 list> | "
                        "custom:<file>");
    gen_cmd->add_option("-o,--out", gen.out_path, "output path (text format; stdout if omitted)");
    gen_cmd->add_option("--json-out", gen.json_out_path, "clutter JSON mirror path");
    gen_cmd->add_option("--json", gen.report_json_path, "write the machine-readable report here");

    clutterlab::cli::CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "run a decision procedure on a clutter file");
    check_cmd->add_option("which", check.which, "konig|pack|ideal|mengerian|classify|2part|delta-r")
        ->required();
    check_cmd->add_option("file", check.path, "clutter file (text or .json)")->required();
    check_cmd->add_option("--wmax", check.w_max, "weight bound for the mengerian scan (default 3)");
    check_cmd->add_option("--balanced-limit", check.balanced_limit,
                          "largest odd submatrix order for the balanced check (default 7)");
    check_cmd->add_flag("--hypergraph", check.hypergraph,
                        "accept inclusion-violating edge files and minimalize on load");
    check_cmd->add_option("--json", check.json_out_path, "write the machine-readable report here");

    clutterlab::cli::DecomposeOptions dec;
    auto* dec_cmd = app.add_subcommand("decompose",
                                       "write a weighted cover certificate for a caseI:all family");
    dec_cmd->add_option("file", dec.path, "generated clutter file with @qpq metadata")->required();
    dec_cmd->add_option("--w", dec.weights, "weights, comma-separated in universe order");
    dec_cmd->add_option("--w-file", dec.weights_file, "weights as label=value lines (missing = 0)");
    dec_cmd->add_option("--json", dec.json_out_path, "write the machine-readable report here");

    clutterlab::cli::VerifySuiteOptions suite;
    auto* suite_cmd = app.add_subcommand("verify-suite", "run the acceptance criteria");
    suite_cmd->add_option("scale", suite.scale, "small | full")->required();
    suite_cmd->add_option("--only", suite.only, "substring filter on criterion keys");
    suite_cmd->add_option("--seed", suite.seed, "seed for the random corpora (default 42)");
    suite_cmd->add_option("--json", suite.json_out_path, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : clutterlab::cli::kExitError;
    }

    if (gen_cmd->parsed()) return clutterlab::cli::cmd_gen(gen);
    if (check_cmd->parsed()) return clutterlab::cli::cmd_check(check);
    if (dec_cmd->parsed()) return clutterlab::cli::cmd_decompose(dec);
    if (suite_cmd->parsed()) return clutterlab::cli::cmd_verify_suite(suite);
    return clutterlab::cli::kExitError;
}
