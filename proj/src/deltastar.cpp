#include "splinedim/deltastar.hpp"

#include <map>

namespace splinedim::deltastar {

using exactla::QMatrix;
using exactla::Rational;
using polyring::MonomialBasis;
using polyring::Var;
using polyring::VarList;
using polyring::vars_xy;
using polyring::vars_xyz;
using polyring::vars_yz;
using splinecore::Triangulation;

namespace {

HPoly hp(std::string_view text, const VarList& vars = vars_xyz()) {
    return HPoly::parse(text, vars);
}

Triangulation build_delta_s() {
    std::vector<splinecore::Point> vertices = {
        {0, 0}, {0, 2}, {2, 2}, {4, 2}, {4, 0}, {2, 0}, {1, 1}, {3, 1}};
    std::vector<std::array<int, 3>> triangles = {
        {1, 2, 6}, {2, 7, 6}, {2, 3, 7}, {3, 4, 7},
        {4, 5, 7}, {5, 6, 7}, {5, 0, 6}, {0, 1, 6}};
    Triangulation t = Triangulation::build(std::move(vertices), std::move(triangles));

    // Cross-check the derived geometry against the known description: nine
    // interior edges realizing exactly these five lines, with (6,7) the one
    // totally interior edge. Any mismatch means the built-in coordinates are
    // wrong, so fail hard.
    const std::map<std::pair<int, int>, std::string> expected = {
        {{2, 6}, "x - y"},       {{0, 6}, "x - y"},
        {{2, 7}, "x + y - 4*z"}, {{4, 7}, "x + y - 4*z"},
        {{3, 7}, "x - y - 2*z"}, {{5, 7}, "x - y - 2*z"},
        {{5, 6}, "x + y - 2*z"}, {{1, 6}, "x + y - 2*z"},
        {{6, 7}, "y - z"}};
    if (t.interior_edges().size() != expected.size())
        throw std::logic_error("delta_s: expected nine interior edges");
    int totally_interior = 0;
    for (int ei : t.interior_edges()) {
        const splinecore::Edge& e = t.edges()[ei];
        auto it = expected.find({e.a, e.b});
        if (it == expected.end())
            throw std::logic_error("delta_s: unexpected interior edge");
        if (t.edge_form(ei) != hp(it->second))
            throw std::logic_error("delta_s: edge form mismatch on edge (" +
                                   std::to_string(e.a) + "," + std::to_string(e.b) + ")");
        if (t.is_interior_vertex(e.a) && t.is_interior_vertex(e.b)) ++totally_interior;
    }
    if (totally_interior != 1)
        throw std::logic_error("delta_s: expected exactly one totally interior edge");
    return t;
}

/// x <-> z swap as a polynomial map.
HPoly swapped_xz(const HPoly& f) {
    static const QMatrix swap_matrix = QMatrix::parse("0,0,1;0,1,0;1,0,0");
    return polyring::linear_substitute(f, swap_matrix);
}

struct ColonPair {
    polyring::GradedSubspace first;  ///< (<x^{r+1},(x+y)^{r+1}> : y^{r+1})_d
    polyring::GradedSubspace second; ///< (<z^{r+1},(z+y)^{r+1}> : y^{r+1})_d
};

ColonPair colon_pair(int r, int d) {
    VarList R = vars_xyz();
    HPoly x = HPoly::variable(R, Var::x);
    HPoly y = HPoly::variable(R, Var::y);
    HPoly z = HPoly::variable(R, Var::z);
    HPoly divisor = y.pow(r + 1);
    return ColonPair{
        polyring::colon_piece({x.pow(r + 1), (x + y).pow(r + 1)}, divisor, d),
        polyring::colon_piece({z.pow(r + 1), (z + y).pow(r + 1)}, divisor, d)};
}

} // namespace

const Triangulation& delta_s() {
    static const Triangulation t = build_delta_s();
    return t;
}

std::string delta_s_document() { return delta_s().to_document(); }

const DeltaSForms& delta_s_forms() {
    static const DeltaSForms forms = {hp("x - y"), hp("x + y - 4*z"), hp("x - y - 2*z"),
                                      hp("x + y - 2*z"), hp("y - z")};
    return forms;
}

int alpha(int r) { return (r + 1) / 2; }

std::size_t expected_k_dim(int r) { return static_cast<std::size_t>(r / 2 + 1); }

KSpace k_space(int r) {
    if (r < 1) throw exactla::ShapeError("k_space needs r >= 1");
    ColonPair pair = colon_pair(r, r);
    return KSpace{r, polyring::intersect(pair.first, pair.second)};
}

std::size_t epsilon(int r) {
    if (r < 1) throw exactla::ShapeError("epsilon needs r >= 1");
    const DeltaSForms& forms = delta_s_forms();
    HPoly divisor = forms.l26.pow(r + 1);
    auto first = polyring::colon_piece({forms.l12.pow(r + 1), forms.l67.pow(r + 1)},
                                       divisor, r);
    auto second = polyring::colon_piece({forms.l23.pow(r + 1), forms.l34.pow(r + 1)},
                                        divisor, r);
    return polyring::intersect(first, second).dim();
}

CFGenerators cf_generators(int r) {
    if (r < 1) throw exactla::ShapeError("cf_generators needs r >= 1");
    VarList A = vars_xy();
    HPoly x = HPoly::variable(A, Var::x);
    HPoly y = HPoly::variable(A, Var::y);
    std::vector<HPoly> gens = {x.pow(r + 1), (x + y).pow(r + 1)};
    HPoly divisor = y.pow(r + 1);
    const int n = alpha(r);

    polyring::GradedSubspace first = polyring::colon_piece(gens, divisor, n);
    if ((r + 1) % 2 == 0) {
        if (first.dim() != 2)
            throw std::logic_error("colon piece in the shared generator degree must have dim 2");
        return CFGenerators{first.basis_poly(0), first.basis_poly(1), {n, n}};
    }
    if (first.dim() != 1)
        throw std::logic_error("colon piece in the first generator degree must have dim 1");
    HPoly c1 = first.basis_poly(0);
    polyring::GradedSubspace next = polyring::colon_piece(gens, divisor, n + 1);
    auto grown = polyring::GradedSubspace::from_columns(
        A, n + 1, hcat(polyring::mult_map(x, n) * c1.coeff_column(),
                       polyring::mult_map(y, n) * c1.coeff_column()));
    for (std::size_t i = 0; i < next.dim(); ++i) {
        HPoly candidate = next.basis_poly(i);
        if (!grown.contains(candidate)) return CFGenerators{c1, candidate, {n, n + 1}};
    }
    throw std::logic_error("no second minimal generator found");
}

bool verify_slicing(const HPoly& f_in) {
    HPoly f = f_in.with_variables(vars_xyz());
    const int r = f.degree();
    KSpace k = k_space(r);
    if (!k.basis.contains(f)) throw NotInKError("polynomial is not in K(r)");

    const int n = alpha(r);
    CFGenerators cf = cf_generators(r);
    HPoly c2 = swapped_xz(cf.c1.with_variables(vars_xyz())).with_variables(vars_yz());
    HPoly f2 = swapped_xz(cf.f1.with_variables(vars_xyz())).with_variables(vars_yz());

    MonomialBasis basis(vars_xyz(), r);
    for (int i = 0; i <= r; ++i) {
        // z-slice: f_i = sum of coeff(x^a y^{i-a} z^{r-i}) x^a y^{i-a}
        HPoly slice(vars_xy(), i);
        for (int a = 0; a <= i; ++a) {
            polyring::Exponents m{{a, i - a, r - i}};
            Rational c = f.coeff(basis.index_of(m));
            if (c != 0) slice = slice + HPoly::monomial(vars_xy(), {{a, i - a, 0}}, c);
        }
        if (i < n) {
            if (!slice.is_zero()) return false;
        } else if (!slice.is_zero() &&
                   !polyring::ideal_piece({cf.c1, cf.f1}, i).contains(slice)) {
            return false;
        }

        // x-slice: g_i = sum of coeff(x^{r-i} y^{i-c} z^c) y^{i-c} z^c
        HPoly xslice(vars_yz(), i);
        for (int c = 0; c <= i; ++c) {
            polyring::Exponents m{{r - i, i - c, c}};
            Rational v = f.coeff(basis.index_of(m));
            if (v != 0) xslice = xslice + HPoly::monomial(vars_yz(), {{0, i - c, c}}, v);
        }
        if (i < n) {
            if (!xslice.is_zero()) return false;
        } else if (!xslice.is_zero() &&
                   !polyring::ideal_piece({c2, f2}, i).contains(xslice)) {
            return false;
        }
    }
    return true;
}

bool verify_symmetry(int r) {
    KSpace k = k_space(r);
    if (k.basis.dim() == 0) return true;
    MonomialBasis basis(vars_xyz(), r);
    QMatrix swap = QMatrix::from_fn(basis.size(), basis.size(),
                                    [&](std::size_t i, std::size_t j) -> Rational {
                                        const polyring::Exponents& m = basis.monomial(j);
                                        polyring::Exponents s{{m.e[2], m.e[1], m.e[0]}};
                                        return basis.index_of(s) == i ? 1 : 0;
                                    });
    const QMatrix& b = k.basis.basis_matrix();
    QMatrix sb = swap * b;
    std::size_t symmetric_dim = exactla::rref_rank_nullspace(sb - b).nullspace.cols();
    std::size_t antisymmetric_dim = exactla::rref_rank_nullspace(sb + b).nullspace.cols();
    return symmetric_dim == k.basis.dim() && antisymmetric_dim == 0;
}

bool verify_derivative_map(int r) {
    if (r < 2) throw exactla::ShapeError("verify_derivative_map needs r >= 2");
    KSpace k = k_space(r);
    KSpace lower = k_space(r - 1);
    HPoly y = HPoly::variable(vars_xyz(), Var::y);
    for (std::size_t i = 0; i < k.basis.dim(); ++i) {
        HPoly f = k.basis.basis_poly(i);
        HPoly g = y * polyring::partial_derivative(
                          polyring::partial_derivative(f, Var::x), Var::z);
        if (g.is_zero()) continue;
        if (!lower.basis.contains(g)) return false;
    }
    return true;
}

bool verify_min_degree(int r) {
    if (r < 2) throw exactla::ShapeError("verify_min_degree needs r >= 2");
    ColonPair below = colon_pair(r, r - 1);
    std::size_t dim_below = polyring::intersect(below.first, below.second).dim();
    if (dim_below != 0) return false;
    // With nothing below degree r, the degree-r piece is all new generators.
    return k_space(r).basis.dim() == expected_k_dim(r);
}

bool y_power_in_k(int r) {
    HPoly y = HPoly::variable(vars_xyz(), Var::y);
    return k_space(r).basis.contains(y.pow(r));
}

bool y_power_excluded(int r) {
    HPoly y = HPoly::variable(vars_xyz(), Var::y);
    for (int j = 0; j <= r - 1; ++j) {
        ColonPair pair = colon_pair(r, j);
        if (pair.first.contains(y.pow(j)) || pair.second.contains(y.pow(j))) return false;
    }
    return true;
}

bool support_bound_holds(const KSpace& k) {
    const int bound = k.r - alpha(k.r);
    MonomialBasis basis(vars_xyz(), k.r);
    const QMatrix& b = k.basis.basis_matrix();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        bool used = false;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) used = true;
        if (!used) continue;
        const polyring::Exponents& m = basis.monomial(i);
        if (m[Var::x] > bound || m[Var::z] > bound) return false;
    }
    return true;
}

bool hf_quotient_zero(int r) {
    CFGenerators cf = cf_generators(r);
    HPoly c1 = cf.c1.with_variables(vars_xyz());
    HPoly f1 = cf.f1.with_variables(vars_xyz());
    HPoly c2 = swapped_xz(c1);
    HPoly f2 = swapped_xz(f1);
    std::size_t dim = polyring::ideal_piece({c1, f1, c2, f2}, r).dim();
    return dim == MonomialBasis(vars_xyz(), r).size();
}

long long sigma_closed_form(int r) {
    long long a = alpha(r);
    return 2 * r * a - 2 * a * a;
}

} // namespace splinedim::deltastar
