#include "splinedim/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace splinedim::polyring {

using exactla::FormatError;
using exactla::ShapeError;

VarList vars_xyz() { return {Var::x, Var::y, Var::z}; }
VarList vars_xy() { return {Var::x, Var::y}; }
VarList vars_yz() { return {Var::y, Var::z}; }

namespace {

char var_name(Var v) {
    switch (v) {
        case Var::x: return 'x';
        case Var::y: return 'y';
        default: return 'z';
    }
}

void enumerate(const VarList& vars, std::size_t arity, int degree, Exponents& current,
               std::vector<Exponents>& out) {
    if (arity == 1) {
        current[vars[0]] = degree;
        out.push_back(current);
        current[vars[0]] = 0;
        return;
    }
    // Descending grevlex: the lowest-precedence variable grows last-slowest.
    Var last = vars[arity - 1];
    for (int e = 0; e <= degree; ++e) {
        current[last] = e;
        enumerate(vars, arity - 1, degree - e, current, out);
    }
    current[last] = 0;
}

bool uses_only(const Exponents& m, const VarList& vars) {
    for (Var v : {Var::x, Var::y, Var::z}) {
        if (m[v] != 0 && std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    }
    return true;
}

} // namespace

MonomialBasis::MonomialBasis(VarList vars, int degree)
    : vars_(std::move(vars)), degree_(degree) {
    if (vars_.empty() || vars_.size() > 3) throw ShapeError("variable set must have 1..3 entries");
    if (degree_ < 0) throw ShapeError("negative degree");
    Exponents current;
    enumerate(vars_, vars_.size(), degree_, current, monomials_);
}

std::size_t MonomialBasis::index_of(const Exponents& m) const {
    if (m.degree() != degree_ || !uses_only(m, vars_))
        throw ShapeError("monomial is not in this basis");
    switch (vars_.size()) {
        case 1:
            return 0;
        case 2:
            return static_cast<std::size_t>(m[vars_[1]]);
        default: {
            const int b = m[vars_[1]];
            const int c = m[vars_[2]];
            return static_cast<std::size_t>(c * (degree_ + 1) - c * (c - 1) / 2 + b);
        }
    }
}

HPoly::HPoly(VarList vars, int degree)
    : vars_(std::move(vars)), degree_(degree),
      coeffs_(MonomialBasis(vars_, degree).size()) {}

HPoly::HPoly(VarList vars, int degree, std::vector<Rational> coeffs)
    : vars_(std::move(vars)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != MonomialBasis(vars_, degree_).size())
        throw ShapeError("coefficient vector has wrong length");
}

HPoly HPoly::monomial(VarList vars, const Exponents& m, Rational coeff) {
    HPoly p(vars, m.degree());
    p.coeffs_[MonomialBasis(p.vars_, p.degree_).index_of(m)] = std::move(coeff);
    return p;
}

HPoly HPoly::variable(VarList vars, Var v) {
    Exponents m;
    m[v] = 1;
    return monomial(std::move(vars), m);
}

Rational HPoly::coeff_of(const Exponents& m) const {
    return coeffs_[MonomialBasis(vars_, degree_).index_of(m)];
}

bool HPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

HPoly HPoly::operator+(const HPoly& rhs) const {
    if (vars_ != rhs.vars_ || degree_ != rhs.degree_) throw ShapeError("mixed-degree sum");
    HPoly out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

HPoly HPoly::operator-(const HPoly& rhs) const { return *this + rhs.scaled(-1); }

HPoly HPoly::scaled(const Rational& c) const {
    HPoly out = *this;
    for (auto& e : out.coeffs_) e *= c;
    return out;
}

HPoly HPoly::operator*(const HPoly& rhs) const {
    if (vars_ != rhs.vars_) throw ShapeError("mixed variable sets in product");
    HPoly out(vars_, degree_ + rhs.degree_);
    MonomialBasis left(vars_, degree_), right(vars_, rhs.degree_),
        target(vars_, out.degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            Exponents m;
            for (Var v : {Var::x, Var::y, Var::z})
                m[v] = left.monomial(i)[v] + right.monomial(j)[v];
            out.coeffs_[target.index_of(m)] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

HPoly HPoly::pow(int exponent) const {
    if (exponent < 0) throw ShapeError("negative power");
    HPoly out(vars_, 0, {Rational(1)});
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

HPoly HPoly::with_variables(const VarList& vars) const {
    HPoly out(vars, degree_);
    MonomialBasis from(vars_, degree_), to(vars, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!uses_only(from.monomial(i), vars))
            throw ShapeError("polynomial uses a variable outside the target set");
        out.coeffs_[to.index_of(from.monomial(i))] = coeffs_[i];
    }
    return out;
}

QMatrix HPoly::coeff_column() const {
    return QMatrix(coeffs_.size(), 1, coeffs_);
}

HPoly HPoly::from_coeff_column(const VarList& vars, int degree, const QMatrix& column) {
    if (column.cols() != 1) throw ShapeError("expected a column vector");
    std::vector<Rational> coeffs(column.rows());
    for (std::size_t i = 0; i < column.rows(); ++i) coeffs[i] = column(i, 0);
    return HPoly(vars, degree, std::move(coeffs));
}

std::string HPoly::to_text() const {
    if (is_zero()) return "0";
    MonomialBasis basis(vars_, degree_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Exponents& m = basis.monomial(i);
        bool has_vars = m.degree() > 0;
        if (mag != 1 || !has_vars) {
            os << mag;
            if (has_vars) os << '*';
        }
        bool first_var = true;
        for (Var v : vars_) {
            if (m[v] == 0) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << var_name(v);
            if (m[v] > 1) os << '^' << m[v];
        }
    }
    return os.str();
}

namespace {

struct Term {
    Rational coeff;
    Exponents exps;
};

// term := [coeff] ['*'] factor*; factor := var ['^' digits]
Term parse_term(std::string_view text, const VarList& vars) {
    Term term{Rational(1), {}};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw FormatError("empty term");
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        term.coeff = exactla::parse_rational(text.substr(start, pos - start));
        skip_ws();
        if (pos < text.size() && text[pos] == '*') ++pos;
    }
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        char c = text[pos];
        Var v;
        if (c == 'x')
            v = Var::x;
        else if (c == 'y')
            v = Var::y;
        else if (c == 'z')
            v = Var::z;
        else
            throw FormatError(std::string("unexpected character '") + c + "' in term");
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw FormatError(std::string("variable '") + c + "' not allowed here");
        ++pos;
        int exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw FormatError("missing exponent after '^'");
            exp = std::stoi(std::string(text.substr(start, pos - start)));
        }
        term.exps[v] += exp;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') ++pos;
    }
    return term;
}

} // namespace

HPoly HPoly::parse(std::string_view text, const VarList& vars) {
    std::vector<std::pair<int, Term>> terms; // sign, term
    std::size_t pos = 0;
    int sign = 1;
    bool expect_term = true;
    std::size_t term_start = std::string_view::npos;
    auto flush = [&](std::size_t end) {
        if (term_start == std::string_view::npos) throw FormatError("missing term");
        Term t = parse_term(text.substr(term_start, end - term_start), vars);
        terms.emplace_back(sign, std::move(t));
        term_start = std::string_view::npos;
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (expect_term) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            if (c == '-' && term_start == std::string_view::npos) {
                sign = -sign;
                ++pos;
                continue;
            }
            if (c == '+' && term_start == std::string_view::npos) {
                ++pos;
                continue;
            }
            term_start = pos;
            expect_term = false;
        }
        if (!expect_term && (c == '+' || c == '-')) {
            flush(pos);
            sign = c == '-' ? -1 : 1;
            ++pos;
            expect_term = true;
            term_start = std::string_view::npos;
            continue;
        }
        ++pos;
    }
    if (term_start == std::string_view::npos) throw FormatError("empty polynomial literal");
    flush(text.size());

    if (terms.size() == 1 && terms[0].second.exps.degree() == 0 && terms[0].second.coeff == 0)
        return HPoly(vars, 0);

    int degree = terms.front().second.exps.degree();
    for (const auto& [s, t] : terms)
        if (t.exps.degree() != degree) throw FormatError("non-homogeneous polynomial");
    HPoly out(vars, degree);
    MonomialBasis basis(vars, degree);
    for (const auto& [s, t] : terms)
        out.coeffs_[basis.index_of(t.exps)] += s * t.coeff;
    return out;
}

GradedSubspace::GradedSubspace(VarList vars, int degree)
    : vars_(std::move(vars)), degree_(degree),
      basis_(MonomialBasis(vars_, degree_).size(), 0) {}

GradedSubspace GradedSubspace::from_columns(VarList vars, int degree, const QMatrix& columns) {
    GradedSubspace s(std::move(vars), degree);
    if (columns.cols() == 0) return s;
    if (columns.rows() != MonomialBasis(s.vars_, degree).size())
        throw ShapeError("column length does not match the monomial basis");
    s.basis_ = exactla::column_echelon(columns);
    return s;
}

bool GradedSubspace::contains(const HPoly& f) const {
    if (f.variables() != vars_ || f.degree() != degree_)
        throw ShapeError("membership test across different graded pieces");
    return contains_column(f.coeff_column());
}

bool GradedSubspace::contains_column(const QMatrix& column) const {
    return exactla::in_column_span(basis_, column);
}

HPoly GradedSubspace::basis_poly(std::size_t i) const {
    return HPoly::from_coeff_column(vars_, degree_, basis_.column(i));
}

QMatrix mult_map(const HPoly& f, int d) {
    if (f.is_zero()) throw ShapeError("multiplication map of the zero polynomial");
    MonomialBasis source(f.variables(), d), target(f.variables(), d + f.degree()),
        fbasis(f.variables(), f.degree());
    std::vector<Rational> entries(target.size() * source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        for (std::size_t i = 0; i < f.coeff_count(); ++i) {
            if (f.coeff(i) == 0) continue;
            Exponents m;
            for (Var v : {Var::x, Var::y, Var::z})
                m[v] = fbasis.monomial(i)[v] + source.monomial(j)[v];
            entries[target.index_of(m) * source.size() + j] = f.coeff(i);
        }
    }
    return QMatrix(target.size(), source.size(), std::move(entries));
}

GradedSubspace ideal_piece(const VarList& vars, std::span<const HPoly> gens, int d) {
    QMatrix columns;
    for (const HPoly& g : gens) {
        if (g.variables() != vars) throw ShapeError("generators over mixed variable sets");
        if (g.is_zero() || g.degree() > d) continue;
        columns = hcat(columns, mult_map(g, d - g.degree()));
    }
    if (columns.empty()) return GradedSubspace(vars, d);
    return GradedSubspace::from_columns(vars, d, columns);
}

GradedSubspace ideal_piece(std::span<const HPoly> gens, int d) {
    if (gens.empty()) throw ShapeError("ideal_piece with no generators needs an explicit variable set");
    return ideal_piece(gens.front().variables(), gens, d);
}

GradedSubspace ideal_piece(std::initializer_list<HPoly> gens, int d) {
    return ideal_piece(std::span<const HPoly>(gens.begin(), gens.size()), d);
}

GradedSubspace intersect(const GradedSubspace& s1, const GradedSubspace& s2) {
    if (s1.variables() != s2.variables() || s1.degree() != s2.degree())
        throw ShapeError("intersection across different graded pieces");
    if (s1.dim() == 0 || s2.dim() == 0) return GradedSubspace(s1.variables(), s1.degree());
    QMatrix block = hcat(s1.basis_matrix(), -s2.basis_matrix());
    QMatrix null = exactla::rref_rank_nullspace(block).nullspace;
    QMatrix u = null.block(0, 0, s1.dim(), null.cols());
    return GradedSubspace::from_columns(s1.variables(), s1.degree(), s1.basis_matrix() * u);
}

GradedSubspace subspace_sum(const GradedSubspace& s1, const GradedSubspace& s2) {
    if (s1.variables() != s2.variables() || s1.degree() != s2.degree())
        throw ShapeError("sum across different graded pieces");
    return GradedSubspace::from_columns(s1.variables(), s1.degree(),
                                        hcat(s1.basis_matrix(), s2.basis_matrix()));
}

GradedSubspace colon_piece(std::span<const HPoly> gens, const HPoly& f, int d) {
    if (f.is_zero()) throw ShapeError("colon by the zero polynomial");
    const VarList& vars = f.variables();
    GradedSubspace target = ideal_piece(vars, gens, d + f.degree());
    QMatrix a = mult_map(f, d);
    if (target.dim() == 0) {
        // f*g must vanish; multiplication by a nonzero form is injective.
        return GradedSubspace(vars, d);
    }
    QMatrix null = exactla::rref_rank_nullspace(hcat(a, target.basis_matrix())).nullspace;
    QMatrix g_block = null.block(0, 0, a.cols(), null.cols());
    return GradedSubspace::from_columns(vars, d, g_block);
}

GradedSubspace colon_piece(std::initializer_list<HPoly> gens, const HPoly& f, int d) {
    return colon_piece(std::span<const HPoly>(gens.begin(), gens.size()), f, d);
}

std::size_t min_gens_count(std::span<const HPoly> gens, int d) {
    GradedSubspace piece = ideal_piece(gens, d);
    if (d == 0) return piece.dim();
    GradedSubspace below = ideal_piece(gens, d - 1);
    if (below.dim() == 0) return piece.dim();
    QMatrix grown;
    for (Var v : gens.front().variables()) {
        HPoly var_poly = HPoly::variable(gens.front().variables(), v);
        grown = hcat(grown, mult_map(var_poly, d - 1) * below.basis_matrix());
    }
    return piece.dim() - exactla::rank(grown);
}

std::size_t min_gens_count(std::initializer_list<HPoly> gens, int d) {
    return min_gens_count(std::span<const HPoly>(gens.begin(), gens.size()), d);
}

HPoly partial_derivative(const HPoly& f, Var v) {
    if (f.degree() == 0) return HPoly(f.variables(), 0);
    HPoly out(f.variables(), f.degree() - 1);
    MonomialBasis from(f.variables(), f.degree()), to(f.variables(), f.degree() - 1);
    std::vector<Rational> coeffs(to.size());
    for (std::size_t i = 0; i < f.coeff_count(); ++i) {
        if (f.coeff(i) == 0) continue;
        Exponents m = from.monomial(i);
        if (m[v] == 0) continue;
        Rational c = f.coeff(i) * m[v];
        m[v] -= 1;
        coeffs[to.index_of(m)] += c;
    }
    return HPoly(f.variables(), f.degree() - 1, std::move(coeffs));
}

HPoly linear_substitute(const HPoly& f, const QMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3) throw ShapeError("substitution matrix must be 3x3");
    if (exactla::det_ff(a) == 0) throw exactla::SingularError("singular change of variables");
    HPoly lifted = f.with_variables(vars_xyz());
    MonomialBasis basis(vars_xyz(), lifted.degree());

    std::array<HPoly, 3> images;
    for (std::size_t i = 0; i < 3; ++i) {
        HPoly form(vars_xyz(), 1,
                   {a(i, 0), a(i, 1), a(i, 2)});
        images[i] = form;
    }
    HPoly out(vars_xyz(), lifted.degree());
    for (std::size_t i = 0; i < lifted.coeff_count(); ++i) {
        if (lifted.coeff(i) == 0) continue;
        const Exponents& m = basis.monomial(i);
        HPoly term(vars_xyz(), 0, {lifted.coeff(i)});
        for (Var v : {Var::x, Var::y, Var::z})
            if (m[v] > 0) term = term * images[static_cast<int>(v)].pow(m[v]);
        out = out + term;
    }
    return out;
}

} // namespace splinedim::polyring
