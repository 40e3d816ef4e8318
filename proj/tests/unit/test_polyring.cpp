#include "splinedim/polyring.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace splinedim::polyring;
using splinedim::exactla::QMatrix;
using splinedim::exactla::Rational;
using splinedim::exactla::binomial;

namespace {

HPoly p(std::string_view text, const VarList& vars = vars_xyz()) {
    return HPoly::parse(text, vars);
}

} // namespace

TEST_CASE("monomial order is descending grevlex with x > y > z") {
    MonomialBasis basis(vars_xyz(), 2);
    REQUIRE(basis.size() == 6);
    std::vector<std::array<int, 3>> expected = {
        {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(basis.monomial(i).e == expected[i]);
        CHECK(basis.index_of(basis.monomial(i)) == i);
    }
    CHECK(MonomialBasis(vars_xyz(), 7).size() == binomial(9, 2));
    MonomialBasis two(vars_xy(), 3);
    CHECK(two.size() == 4);
    CHECK(two.monomial(0).e == std::array<int, 3>{3, 0, 0});
    CHECK(two.monomial(3).e == std::array<int, 3>{0, 3, 0});
}

TEST_CASE("polynomial text round trips") {
    CHECK(p("x^2 - 2*x*y + 1/3*y^2").to_text() == "x^2 - 2*x*y + 1/3*y^2");
    CHECK(p("- x + y").to_text() == "-x + y");
    CHECK(p("z^3").degree() == 3);
    CHECK(p("0").is_zero());
    CHECK(p("x*x*y").to_text() == "x^2*y");
    CHECK_THROWS(p("x + y^2"));
    CHECK_THROWS(p("w^2"));
    CHECK_THROWS(p("x", vars_yz()));
}

TEST_CASE("arithmetic and derivatives") {
    CHECK(p("x^2*y") * p("y - z") == p("x^2*y^2 - x^2*y*z"));
    CHECK(p("x + y").pow(2) == p("x^2 + 2*x*y + y^2"));
    CHECK(partial_derivative(p("x^2*y"), Var::x) == p("2*x*y"));
    CHECK(partial_derivative(partial_derivative(p("y^3"), Var::x), Var::z).is_zero());
    CHECK(partial_derivative(p("3"), Var::x).is_zero());

    // product rule on random inputs
    testutil::SplitMix64 rng(0x5eed010);
    for (int it = 0; it < 10; ++it) {
        HPoly f = testutil::random_poly(rng, vars_xyz(), 2);
        HPoly g = testutil::random_poly(rng, vars_xyz(), 3);
        CHECK(partial_derivative(f * g, Var::x) ==
              partial_derivative(f, Var::x) * g + f * partial_derivative(g, Var::x));
    }
}

TEST_CASE("mult_map") {
    SUBCASE("by x from degree 0") {
        QMatrix m = mult_map(p("x"), 0);
        CHECK(m == QMatrix::parse("1;0;0"));
    }
    SUBCASE("by y^2 from degree 1 in two variables") {
        QMatrix m = mult_map(p("y^2", vars_xy()), 1);
        CHECK(m == QMatrix::parse("0,0;0,0;1,0;0,1"));
    }
    SUBCASE("multiplication by a nonzero form is injective") {
        testutil::SplitMix64 rng(0x5eed011);
        for (int it = 0; it < 8; ++it) {
            HPoly f = testutil::random_poly(rng, vars_xyz(), 1 + rng.range(0, 2));
            if (f.is_zero()) continue;
            int d = rng.range(0, 3);
            CHECK(splinedim::exactla::rank(mult_map(f, d)) == std::size_t(binomial(d + 2, 2)));
        }
    }
}

TEST_CASE("ideal pieces") {
    CHECK(ideal_piece({p("x^2", vars_xy())}, 3).dim() == 2);
    CHECK(ideal_piece({p("x^4", vars_xy()), p("x+y", vars_xy()).pow(4)}, 4).dim() == 2);
    CHECK(ideal_piece({p("x^2", vars_xy()), p("x+y", vars_xy()).pow(2), p("y^2", vars_xy())}, 2)
              .dim() == 3);
    CHECK(ideal_piece(vars_xy(), {}, 5).dim() == 0);

    // complete intersection in two variables: dim <x^{r+1},(x+y)^{r+1}>_d = 2(d-r)
    // for r+1 <= d <= 2r+1 (first syzygy lives in degree 2r+2)
    for (int r = 1; r <= 8; ++r) {
        HPoly g1 = p("x", vars_xy()).pow(r + 1);
        HPoly g2 = p("x+y", vars_xy()).pow(r + 1);
        for (int d = r + 1; d <= 2 * r + 1; d += r) {
            CHECK(ideal_piece({g1, g2}, d).dim() == std::size_t(2 * (d - r)));
        }
        CHECK(ideal_piece({g1, g2}, r).dim() == 0);
    }
}

TEST_CASE("intersection of graded subspaces") {
    GradedSubspace s1 = ideal_piece({p("x^2", vars_xy())}, 3);
    CHECK(intersect(s1, s1).dim() == s1.dim());

    GradedSubspace a = ideal_piece({p("x^2", vars_xy())}, 2);
    GradedSubspace b = ideal_piece({p("y^2", vars_xy())}, 2);
    CHECK(intersect(a, b).dim() == 0);

    testutil::SplitMix64 rng(0x5eed012);
    for (int it = 0; it < 6; ++it) {
        HPoly f = testutil::random_poly(rng, vars_xyz(), 1);
        HPoly g = testutil::random_poly(rng, vars_xyz(), 1);
        if (f.is_zero() || g.is_zero()) continue;
        GradedSubspace sf = ideal_piece({f}, 3);
        GradedSubspace sg = ideal_piece({g}, 3);
        CHECK(intersect(sf, sg).dim() + subspace_sum(sf, sg).dim() == sf.dim() + sg.dim());
    }
}

TEST_CASE("colon pieces") {
    VarList xy = vars_xy();
    SUBCASE("explicit certificate: y^3 = (x+y)^2(y-2x) + x^2(2x+3y)") {
        CHECK(p("x+y", xy).pow(2) * p("y - 2*x", xy) + p("x^2", xy) * p("2*x + 3*y", xy) ==
              p("y^3", xy));
        GradedSubspace colon =
            colon_piece({p("x^2", xy), p("x+y", xy).pow(2)}, p("y^2", xy), 1);
        CHECK(colon.contains(p("y", xy)));
        CHECK(colon.dim() >= 1);
    }
    SUBCASE("colon of an ideal by its own generator is everything") {
        HPoly f = p("x^2 - y*z");
        GradedSubspace colon = colon_piece({f}, f, 2);
        CHECK(colon.dim() == 6);
    }
    SUBCASE("I_d is contained in (I:f)_d") {
        testutil::SplitMix64 rng(0x5eed013);
        for (int it = 0; it < 5; ++it) {
            HPoly g = testutil::random_poly(rng, vars_xyz(), 2);
            HPoly f = testutil::random_poly(rng, vars_xyz(), 1);
            if (g.is_zero() || f.is_zero()) continue;
            GradedSubspace ideal = ideal_piece({g}, 3);
            GradedSubspace colon = colon_piece({g}, f, 3);
            for (std::size_t i = 0; i < ideal.dim(); ++i)
                CHECK(colon.contains(ideal.basis_poly(i)));
        }
    }
    SUBCASE("powers of y below degree r are excluded") {
        for (int r : {2, 3, 4}) {
            HPoly g1 = p("x", xy).pow(r + 1);
            HPoly g2 = p("x+y", xy).pow(r + 1);
            HPoly divisor = p("y", xy).pow(r + 1);
            for (int j = 0; j <= r - 1; ++j) {
                GradedSubspace colon = colon_piece({g1, g2}, divisor, j);
                CHECK_FALSE(colon.contains(p("y", xy).pow(j)));
            }
        }
    }
}

TEST_CASE("minimal generator counts") {
    VarList xy = vars_xy();
    CHECK(min_gens_count({p("x^2", xy)}, 2) == 1);
    CHECK(min_gens_count({p("x^2", xy)}, 3) == 0);
    CHECK(min_gens_count({p("x", xy), p("y", xy)}, 1) == 2);
}

TEST_CASE("linear substitution") {
    QMatrix identity = QMatrix::identity(3);
    HPoly f = p("x^2*z - y^3");
    CHECK(linear_substitute(f, identity) == f);

    QMatrix swap_xz = QMatrix::parse("0,0,1;0,1,0;1,0,0");
    CHECK(linear_substitute(p("x^2*z"), swap_xz) == p("x*z^2"));

    testutil::SplitMix64 rng(0x5eed014);
    QMatrix a = QMatrix::parse("1,1,0;0,2,1;1,0,1");
    QMatrix ainv = splinedim::exactla::inverse(a);
    for (int it = 0; it < 5; ++it) {
        HPoly g = testutil::random_poly(rng, vars_xyz(), 3);
        CHECK(linear_substitute(linear_substitute(g, a), ainv) == g);
    }
    CHECK_THROWS_AS(linear_substitute(f, QMatrix::parse("1,0,0;0,1,0;1,1,0")),
                    splinedim::exactla::SingularError);
}

TEST_CASE("variable embedding") {
    HPoly f = p("x^2 + x*y", vars_xy());
    HPoly lifted = f.with_variables(vars_xyz());
    CHECK(lifted.degree() == 2);
    CHECK(lifted.coeff_of(Exponents{{2, 0, 0}}) == 1);
    CHECK(lifted.with_variables(vars_xy()) == f);
    CHECK_THROWS(p("x*z").with_variables(vars_xy()));
}
