#include "splinedim/report.hpp"

#include "splinedim/deltastar.hpp"
#include "splinedim/structmat.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace splinedim::cli {

using deltastar::KSpace;

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = {
        {"k-dim", "dim K(r) = n for r = 2n-1 and n+1 for r = 2n"},
        {"k-dim-lower-bound", "dim K(r) is at least the expected value"},
        {"epsilon-consistency",
         "the degree-r colon intersection in original coordinates has dim K(r)"},
        {"y-power-membership", "y^r lies in K(r)"},
        {"y-power-exclusion", "y^j avoids both colon ideals for every j < r"},
        {"slicing", "all slices of K(r) elements fall in the generator ideals"},
        {"symmetry", "K(r) is fixed by the x-z swap and has no antisymmetric part"},
        {"derivative-map", "y times the mixed second derivative maps K(r) into K(r-1)"},
        {"min-degree", "the colon intersection ideal has nothing below degree r"},
        {"support-bound", "x and z exponents in K(r) stay at most r - alpha(r)"},
        {"hf-quotient-zero", "the degree-r piece of R modulo all four generators vanishes"},
        {"generator-degrees", "colon ideal generator degrees follow the parity rule"},
        {"sigma-closed-form", "the vertex sigma sum equals 2*r*alpha - 2*alpha^2"},
        {"decomposition", "spline dimension at d = 2r+1 decomposes through epsilon"},
        {"kernel-total", "summed banded-block kernels have the triangular-number dimension"},
        {"roth-operator", "the triangular Roth operator is surjective exactly when dim K fits"},
        {"dimension-comparison", "exact spline dimension versus the combinatorial formula"},
        {"conjecture-equality", "the combinatorial formula is exact for d >= 2r+1"},
    };
    return registry;
}

bool claim_registered(const std::string& id) {
    const auto& reg = claim_registry();
    return std::any_of(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
}

void Report::add(ReportRow row) {
    if (!claim_registered(row.claim_id))
        throw std::logic_error("unregistered claim id: " + row.claim_id);
    rows_.push_back(std::move(row));
}

bool Report::all_pass() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.pass; });
}

void Report::finalize() {
    std::stable_sort(rows_.begin(), rows_.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.command, a.r, a.d, a.claim_id) <
               std::tie(b.command, b.r, b.d, b.claim_id);
    });
}

std::string Report::to_tsv() const {
    std::ostringstream os;
    os << "command\tr\td\tclaim\tcomputed\texpected\tstatus\n";
    for (const ReportRow& row : rows_) {
        os << row.command << '\t' << row.r << '\t';
        if (row.d >= 0)
            os << row.d;
        else
            os << '-';
        os << '\t' << row.claim_id << '\t' << row.computed << '\t' << row.expected << '\t'
           << (row.pass ? "pass" : "FAIL") << '\n';
    }
    return os.str();
}

std::string Report::to_json(long long seed) const {
    nlohmann::json doc;
    doc["schema"] = "splinedim-report/1";
    doc["seed"] = seed;
    doc["rows"] = nlohmann::json::array();
    for (const ReportRow& row : rows_) {
        nlohmann::json j;
        j["command"] = row.command;
        j["r"] = row.r;
        if (row.d >= 0) j["d"] = row.d;
        j["claim"] = row.claim_id;
        j["computed"] = row.computed;
        j["expected"] = row.expected;
        j["pass"] = row.pass;
        doc["rows"].push_back(j);
    }
    doc["all_pass"] = all_pass();
    return doc.dump(2) + "\n";
}

std::string Report::render(Format format, long long seed) const {
    return format == Format::Tsv ? to_tsv() : to_json(seed);
}

namespace {

std::string bool_text(bool v) { return v ? "true" : "false"; }

} // namespace

Report deltastar_verify(int r_max, bool force) {
    if (r_max < 1) throw exactla::ShapeError("r_max must be at least 1");
    Report report;
    const std::string cmd = "deltastar verify";
    for (int r = 1; r <= r_max; ++r) {
        KSpace k = deltastar::k_space(r);
        const std::size_t expected = deltastar::expected_k_dim(r);

        report.add({cmd, r, -1, "k-dim", std::to_string(k.basis.dim()),
                    std::to_string(expected), k.basis.dim() == expected});
        report.add({cmd, r, -1, "k-dim-lower-bound", std::to_string(k.basis.dim()),
                    ">= " + std::to_string(expected), k.basis.dim() >= expected});

        std::size_t eps = deltastar::epsilon(r);
        report.add({cmd, r, -1, "epsilon-consistency", std::to_string(eps),
                    std::to_string(k.basis.dim()), eps == k.basis.dim()});

        report.add({cmd, r, -1, "y-power-membership", bool_text(deltastar::y_power_in_k(r)),
                    "true", deltastar::y_power_in_k(r)});
        report.add({cmd, r, -1, "y-power-exclusion", bool_text(deltastar::y_power_excluded(r)),
                    "true", deltastar::y_power_excluded(r)});

        bool slicing = true;
        for (std::size_t i = 0; i < k.basis.dim(); ++i)
            slicing = slicing && deltastar::verify_slicing(k.basis.basis_poly(i));
        report.add({cmd, r, -1, "slicing", bool_text(slicing), "true", slicing});

        bool symmetry = deltastar::verify_symmetry(r);
        report.add({cmd, r, -1, "symmetry", bool_text(symmetry), "true", symmetry});

        if (r >= 2) {
            bool derivative = deltastar::verify_derivative_map(r);
            report.add({cmd, r, -1, "derivative-map", bool_text(derivative), "true", derivative});
            bool mindeg = deltastar::verify_min_degree(r);
            report.add({cmd, r, -1, "min-degree", bool_text(mindeg), "true", mindeg});
        }

        bool support = deltastar::support_bound_holds(k);
        report.add({cmd, r, -1, "support-bound", bool_text(support), "true", support});

        bool hf_zero = deltastar::hf_quotient_zero(r);
        report.add({cmd, r, -1, "hf-quotient-zero", bool_text(hf_zero), "true", hf_zero});

        deltastar::CFGenerators cf = deltastar::cf_generators(r);
        const int n = deltastar::alpha(r);
        std::pair<int, int> expected_degrees =
            (r + 1) % 2 == 0 ? std::pair{n, n} : std::pair{n, n + 1};
        report.add({cmd, r, -1, "generator-degrees",
                    "(" + std::to_string(cf.degrees.first) + "," +
                        std::to_string(cf.degrees.second) + ")",
                    "(" + std::to_string(expected_degrees.first) + "," +
                        std::to_string(expected_degrees.second) + ")",
                    cf.degrees == expected_degrees});

        long long sigma = splinecore::alfeld_schumaker(deltastar::delta_s(), r, 2 * r + 1).sigma;
        long long closed = deltastar::sigma_closed_form(r);
        report.add({cmd, r, -1, "sigma-closed-form", std::to_string(sigma),
                    std::to_string(closed), sigma == closed});

        std::size_t kernel_total = structmat::kernel_dim_total(r);
        const int nn = deltastar::alpha(r);
        std::size_t kernel_expected = r % 2 == 1
                                          ? std::size_t(nn * (nn + 1) / 2)
                                          : std::size_t((nn + 1) * (nn + 2) / 2);
        report.add({cmd, r, -1, "kernel-total", std::to_string(kernel_total),
                    std::to_string(kernel_expected), kernel_total == kernel_expected});

        structmat::RothOperatorRank roth = structmat::triangular_roth_operator_rank(r);
        bool dim_fits = k.basis.dim() == std::size_t(structmat::block_spec(r).p);
        report.add({cmd, r, -1, "roth-operator", bool_text(roth.surjective),
                    bool_text(dim_fits), roth.surjective == dim_fits});

        if (r <= 6 || force) {
            long long dim = splinecore::spline_dim(deltastar::delta_s(), r, 2 * r + 1).dim;
            long long decomposed = splinecore::binom2(2 * r + 3) + 4 * splinecore::binom2(r + 2) +
                                   static_cast<long long>(eps);
            report.add({cmd, r, 2 * r + 1, "decomposition", std::to_string(dim),
                        std::to_string(decomposed), dim == decomposed});
        }
    }
    report.finalize();
    return report;
}

bool spline_size_guard(const splinecore::Triangulation& t, int r, bool force) {
    return !force && r > 6 && t.f1_interior() > 0;
}

Report spline_check(const splinecore::Triangulation& t, int r_max, bool force) {
    if (spline_size_guard(t, r_max, force))
        throw SizeGuardError("refusing exact elimination above r = 6; pass --force to override");
    Report report;
    for (const splinecore::DimReport& row : splinecore::conjecture_report(t, r_max)) {
        if (row.d >= 2 * row.r + 1) {
            report.add({"spline check", row.r, row.d, "conjecture-equality",
                        std::to_string(row.dim_spline), std::to_string(row.l_value),
                        row.dim_spline == row.l_value});
        } else {
            // d = 2r carries no universal claim; both values are reported.
            report.add({"spline check", row.r, row.d, "dimension-comparison",
                        std::to_string(row.dim_spline), std::to_string(row.l_value), true});
        }
    }
    report.finalize();
    return report;
}

} // namespace splinedim::cli
