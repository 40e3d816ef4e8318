#pragma once

#include "splinedim/qmatrix.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splinedim::polyring {

using exactla::Int;
using exactla::QMatrix;
using exactla::Rational;

/// Variables of R = Q[x,y,z], in precedence order x > y > z.
enum class Var : int { x = 0, y = 1, z = 2 };

/// Ordered variable subset (precedence order preserved).
using VarList = std::vector<Var>;

VarList vars_xyz();
VarList vars_xy();
VarList vars_yz();

/// Exponent triple over (x,y,z); unused variables carry exponent zero.
struct Exponents {
    std::array<int, 3> e{0, 0, 0};

    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int& operator[](Var v) { return e[static_cast<int>(v)]; }
    int degree() const { return e[0] + e[1] + e[2]; }
    bool operator==(const Exponents&) const = default;
};

/// Monomials of one degree over a variable subset, listed in descending
/// graded reverse lexicographic order with x > y > z.
class MonomialBasis {
public:
    MonomialBasis(VarList vars, int degree);

    const VarList& variables() const { return vars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Exponents& monomial(std::size_t i) const { return monomials_[i]; }
    /// Position of an exponent triple; throws if it is not a basis monomial.
    std::size_t index_of(const Exponents& m) const;

private:
    VarList vars_;
    int degree_;
    std::vector<Exponents> monomials_;
};

/// Homogeneous polynomial as a coefficient vector over the canonical basis.
class HPoly {
public:
    HPoly() : degree_(0) {}
    HPoly(VarList vars, int degree); // zero polynomial
    HPoly(VarList vars, int degree, std::vector<Rational> coeffs);

    static HPoly monomial(VarList vars, const Exponents& m, Rational coeff = 1);
    static HPoly variable(VarList vars, Var v);

    const VarList& variables() const { return vars_; }
    int degree() const { return degree_; }
    std::size_t coeff_count() const { return coeffs_.size(); }
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    Rational coeff_of(const Exponents& m) const;
    bool is_zero() const;

    HPoly operator+(const HPoly& rhs) const;
    HPoly operator-(const HPoly& rhs) const;
    HPoly operator*(const HPoly& rhs) const;
    HPoly scaled(const Rational& c) const;
    HPoly pow(int exponent) const;
    bool operator==(const HPoly& rhs) const = default;

    /// Re-expresses the polynomial over another variable subset; throws if a
    /// used variable is missing from the target.
    HPoly with_variables(const VarList& vars) const;

    /// Coefficient vector as a column matrix.
    QMatrix coeff_column() const;
    static HPoly from_coeff_column(const VarList& vars, int degree, const QMatrix& column);

    std::string to_text() const;
    /// Parses sums of terms "c*x^a*y^b*z^c"; rejects non-homogeneous input.
    static HPoly parse(std::string_view text, const VarList& vars = vars_xyz());

private:
    VarList vars_;
    int degree_;
    std::vector<Rational> coeffs_;
};

/// Degree-d piece of an ideal (or any graded subspace) as a canonical column
/// echelon basis in coefficient coordinates.
class GradedSubspace {
public:
    GradedSubspace(VarList vars, int degree); // zero subspace
    static GradedSubspace from_columns(VarList vars, int degree, const QMatrix& columns);

    const VarList& variables() const { return vars_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return basis_.cols(); }
    const QMatrix& basis_matrix() const { return basis_; }

    bool contains(const HPoly& f) const;
    bool contains_column(const QMatrix& column) const;
    HPoly basis_poly(std::size_t i) const;

private:
    VarList vars_;
    int degree_;
    QMatrix basis_;
};

/// Matrix of g -> f*g from degree d to degree d + deg f, canonical bases.
QMatrix mult_map(const HPoly& f, int d);

/// Degree-d piece of the ideal generated by gens. Empty gens give the zero
/// subspace of the stated ambient.
GradedSubspace ideal_piece(const VarList& vars, std::span<const HPoly> gens, int d);
GradedSubspace ideal_piece(std::span<const HPoly> gens, int d);
GradedSubspace ideal_piece(std::initializer_list<HPoly> gens, int d);

GradedSubspace intersect(const GradedSubspace& s1, const GradedSubspace& s2);
GradedSubspace subspace_sum(const GradedSubspace& s1, const GradedSubspace& s2);

/// Degree-d piece of (I : f) where I = <gens>.
GradedSubspace colon_piece(std::span<const HPoly> gens, const HPoly& f, int d);
GradedSubspace colon_piece(std::initializer_list<HPoly> gens, const HPoly& f, int d);

/// dim I_d - dim (R_1 * I_{d-1}): number of minimal generators in degree d.
std::size_t min_gens_count(std::span<const HPoly> gens, int d);
std::size_t min_gens_count(std::initializer_list<HPoly> gens, int d);

HPoly partial_derivative(const HPoly& f, Var v);

/// f composed with the linear change of variables v_i -> sum_j A(i,j) v_j.
/// A must be 3x3 invertible; f is lifted to Q[x,y,z] first.
HPoly linear_substitute(const HPoly& f, const QMatrix& a);

} // namespace splinedim::polyring
