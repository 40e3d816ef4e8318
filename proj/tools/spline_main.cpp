#include "cli_common.hpp"

#include "splinedim/splinecore.hpp"

using namespace splinedim;

int main(int argc, char** argv) {
    CLI::App app{"exact spline space dimensions on planar triangulations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "tsv";
    long long seed = 0;
    bool force = false;
    app.add_option("--format", format_name, "report format: tsv or json")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed recorded in reports")->capture_default_str();
    app.add_flag("--force", force, "override the desk-scale size guard");

    std::string tri_path;
    int r = 0, d = 0, r_max = 1;

    CLI::App* dim = app.add_subcommand("dim", "dimension of one spline space");
    dim->add_option("--tri", tri_path, "triangulation document")->required();
    dim->add_option("--r", r, "smoothness order")->required();
    dim->add_option("--d", d, "polynomial degree")->required();

    CLI::App* check = app.add_subcommand("check", "dimension formula comparison sweep");
    check->add_option("--tri", tri_path, "triangulation document")->required();
    check->add_option("--r-max", r_max, "largest smoothness order")->required();

    return tools::run_cli(app, argc, argv, [&]() {
        splinecore::Triangulation t = splinecore::Triangulation::load(tools::read_file(tri_path));
        if (dim->parsed()) {
            if (cli::spline_size_guard(t, r, force))
                throw cli::SizeGuardError(
                    "refusing exact elimination above r = 6; pass --force to override");
            std::cout << splinecore::spline_dim(t, r, d).dim << '\n';
            return tools::kExitOk;
        }
        cli::Report report = cli::spline_check(t, r_max, force);
        std::cout << report.render(tools::parse_format(format_name), seed);
        return report.all_pass() ? tools::kExitOk : tools::kExitVerifyFail;
    });
}
