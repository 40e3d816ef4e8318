#include "cli_common.hpp"

#include "splinedim/structmat.hpp"

using namespace splinedim;

int main(int argc, char** argv) {
    CLI::App app{"binomial Toeplitz blocks, Schur dimensions, and Roth solves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "tsv";
    long long seed = 0;
    bool force = false;
    app.add_option("--format", format_name, "report format: tsv or json")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed recorded in reports")->capture_default_str();
    app.add_flag("--force", force, "accepted globally; no size guard applies here");

    int r = 1, t_dim = 0, max_order = 4;
    std::string lambda_text, w_path, c_path, mode = "upper";

    CLI::App* kdim = app.add_subcommand("kdim", "total kernel dimension of the banded blocks");
    kdim->add_option("--r", r, "smoothness order")->required()->check(CLI::PositiveNumber);

    CLI::App* schur = app.add_subcommand("schur", "Schur module dimension");
    schur->add_option("--lambda", lambda_text, "partition, comma separated, e.g. 2,1")->required();
    schur->add_option("--t", t_dim, "dimension of the underlying space")->required();

    CLI::App* roth = app.add_subcommand("roth", "triangular-constrained Roth solve");
    roth->add_option("--w", w_path, "coefficient matrix file (exact matrix text)")->required();
    roth->add_option("--c", c_path, "right-hand side file")->required();
    roth->add_option("--mode", mode, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));

    CLI::App* positivity = app.add_subcommand("positivity", "minor positivity of the binomial blocks");
    positivity->add_option("--r", r, "smoothness order")->required()->check(CLI::PositiveNumber);
    positivity->add_option("--max-order", max_order, "largest contiguous minor order")
        ->capture_default_str();

    return tools::run_cli(app, argc, argv, [&]() {
        if (kdim->parsed()) {
            std::cout << structmat::kernel_dim_total(r) << '\n';
            return tools::kExitOk;
        }
        if (schur->parsed()) {
            std::vector<int> lambda;
            std::stringstream ss(lambda_text);
            std::string part;
            while (std::getline(ss, part, ','))
                lambda.push_back(std::stoi(part));
            exactla::Int det = structmat::schur_dim_det(lambda, t_dim);
            exactla::Int weyl = structmat::schur_dim_weyl(lambda, t_dim);
            std::cout << det << '\n';
            if (det != weyl) {
                std::cerr << "error: determinant and Weyl values disagree\n";
                return tools::kExitVerifyFail;
            }
            return tools::kExitOk;
        }
        if (roth->parsed()) {
            exactla::QMatrix w = exactla::QMatrix::parse(tools::read_file(w_path));
            exactla::QMatrix c = exactla::QMatrix::parse(tools::read_file(c_path));
            structmat::RothSolution sol = mode == "upper"
                                              ? structmat::roth_triangular_solve(w, c)
                                              : structmat::roth_lower_solve(w, c);
            std::cout << sol.x.to_text() << '\n' << sol.y.to_text() << '\n';
            return tools::kExitOk;
        }
        bool positive = structmat::toeplitz_positivity(r, max_order);
        std::cout << (positive ? "positive" : "NOT POSITIVE") << '\n';
        return positive ? tools::kExitOk : tools::kExitVerifyFail;
    });
}
