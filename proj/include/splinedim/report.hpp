#pragma once

#include "splinedim/splinecore.hpp"

#include <string>
#include <vector>

namespace splinedim::cli {

enum class Format { Tsv, Json };

/// Computation refused by the size guard (exit code 3 at the command line).
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One verifiable claim: a stable id and the identity it asserts. Every
/// report row must reference a registered claim.
struct Claim {
    std::string id;
    std::string statement;
};

const std::vector<Claim>& claim_registry();
bool claim_registered(const std::string& id);

struct ReportRow {
    std::string command;
    int r = 0;
    int d = -1; ///< -1 when no degree applies
    std::string claim_id;
    std::string computed;
    std::string expected;
    bool pass = false;
};

class Report {
public:
    /// Rejects rows whose claim id is not in the registry.
    void add(ReportRow row);

    const std::vector<ReportRow>& rows() const { return rows_; }
    bool all_pass() const;

    /// Deterministic order: (command, r, d, claim id).
    void finalize();

    std::string to_tsv() const;
    std::string to_json(long long seed) const;
    std::string render(Format format, long long seed) const;

private:
    std::vector<ReportRow> rows_;
};

/// Full lemma/proposition verification sweep for r = 1..r_max. Spline
/// decomposition rows are limited to r <= 6 unless force is set.
Report deltastar_verify(int r_max, bool force);

/// Dimension-vs-formula rows for d in {2r, 2r+1, 3r+1}, r = 1..r_max.
/// Throws SizeGuardError for r_max > 6 on complexes with interior edges
/// unless force is set.
Report spline_check(const splinecore::Triangulation& t, int r_max, bool force);

/// Exact elimination above r = 6 on a complex with smoothness conditions is
/// refused without force.
bool spline_size_guard(const splinecore::Triangulation& t, int r, bool force);

} // namespace splinedim::cli
