#include "splinedim/report.hpp"

#include "splinedim/deltastar.hpp"

#include <doctest.h>

#include <set>

using namespace splinedim::cli;

TEST_CASE("claim registry is well formed") {
    const auto& reg = claim_registry();
    CHECK(!reg.empty());
    std::set<std::string> ids;
    for (const Claim& c : reg) {
        CHECK(!c.statement.empty());
        CHECK(ids.insert(c.id).second); // unique
    }
    CHECK(claim_registered("k-dim"));
    CHECK_FALSE(claim_registered("no-such-claim"));
}

TEST_CASE("rows must reference registered claims") {
    Report report;
    CHECK_THROWS_AS(report.add({"cmd", 1, -1, "no-such-claim", "1", "1", true}),
                    std::logic_error);
}

TEST_CASE("verification sweep passes and is deterministic") {
    Report first = deltastar_verify(2, false);
    CHECK(first.all_pass());
    CHECK(!first.rows().empty());
    for (const ReportRow& row : first.rows()) CHECK(claim_registered(row.claim_id));
    Report second = deltastar_verify(2, false);
    CHECK(first.to_tsv() == second.to_tsv());
    CHECK(first.to_json(7) == second.to_json(7));
    // tsv header plus one line per row
    std::string tsv = first.to_tsv();
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 1 + std::ptrdiff_t(first.rows().size()));
    CHECK(tsv.substr(0, 7) == "command");
}

TEST_CASE("spline check rows") {
    Report report = spline_check(splinedim::deltastar::delta_s(), 2, false);
    CHECK(report.all_pass());
    CHECK(report.rows().size() == 6);
    int judged = 0;
    for (const ReportRow& row : report.rows())
        if (row.claim_id == "conjecture-equality") ++judged;
    CHECK(judged == 4); // d = 2r+1 and 3r+1 for r = 1, 2
}

TEST_CASE("size guard") {
    const auto& t = splinedim::deltastar::delta_s();
    CHECK(spline_size_guard(t, 7, false));
    CHECK_FALSE(spline_size_guard(t, 7, true));
    CHECK_FALSE(spline_size_guard(t, 6, false));
    CHECK_THROWS_AS(spline_check(t, 7, false), SizeGuardError);
}
