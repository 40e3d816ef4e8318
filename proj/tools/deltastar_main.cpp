#include "cli_common.hpp"

#include "splinedim/deltastar.hpp"

using namespace splinedim;

int main(int argc, char** argv) {
    CLI::App app{"the one-non-pseudoedge triangulation and its kernel spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "tsv";
    long long seed = 0;
    bool force = false;
    app.add_option("--format", format_name, "report format: tsv or json")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed recorded in reports")->capture_default_str();
    app.add_flag("--force", force, "include spline decomposition rows above r = 6");

    int r = 1, r_max = 1;
    bool emit = false;

    CLI::App* kdim = app.add_subcommand("k-dim", "dimension of the kernel space K(r)");
    kdim->add_option("--r", r, "smoothness order")->required()->check(CLI::PositiveNumber);

    CLI::App* eps = app.add_subcommand("epsilon", "colon intersection dimension, original coordinates");
    eps->add_option("--r", r, "smoothness order")->required()->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run every verifier up to r-max");
    verify->add_option("--r-max", r_max, "largest smoothness order")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* tri = app.add_subcommand("tri", "the built-in triangulation");
    tri->add_flag("--emit", emit, "print the triangulation document");

    return tools::run_cli(app, argc, argv, [&]() {
        if (kdim->parsed()) {
            std::cout << deltastar::k_space(r).basis.dim() << '\n';
            return tools::kExitOk;
        }
        if (eps->parsed()) {
            std::cout << deltastar::epsilon(r) << '\n';
            return tools::kExitOk;
        }
        if (tri->parsed()) {
            if (emit) std::cout << deltastar::delta_s_document();
            return tools::kExitOk;
        }
        cli::Report report = cli::deltastar_verify(r_max, force);
        std::cout << report.render(tools::parse_format(format_name), seed);
        return report.all_pass() ? tools::kExitOk : tools::kExitVerifyFail;
    });
}
