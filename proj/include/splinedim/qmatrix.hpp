#pragma once

#include "splinedim/rational.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splinedim::exactla {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoLUError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense rational matrix, immutable after construction. Row-major storage.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_fn(std::size_t rows, std::size_t cols,
                           const std::function<Rational(std::size_t, std::size_t)>& fn);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Rational>& entries() const { return entries_; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix operator-() const;
    QMatrix scaled(const Rational& c) const;
    bool operator==(const QMatrix& rhs) const = default;

    QMatrix block(std::size_t row0, std::size_t col0,
                  std::size_t height, std::size_t width) const;
    QMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
    QMatrix column(std::size_t j) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    bool is_unit_lower_triangular() const;

    /// Rows separated by ';', entries by ','. "1,1/2;0,-3"
    std::string to_text() const;
    static QMatrix parse(std::string_view text);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

QMatrix hcat(const QMatrix& left, const QMatrix& right);
QMatrix vcat(const QMatrix& top, const QMatrix& bottom);

/// Anti-diagonal permutation matrix J = J^-1 = J^T.
QMatrix exchange_matrix(std::size_t p);

struct RrefResult {
    std::size_t rank = 0;
    /// Canonical kernel basis: reduced column echelon, unit pivots at the
    /// free-variable rows (lowest index first). cols = M.cols - rank.
    QMatrix nullspace;
};

/// Fraction-free forward elimination (denominators cleared row-wise, Bareiss
/// updates, first nonzero pivot in column order) followed by rational
/// back-substitution. The reduced row echelon form is unique, so the output
/// does not depend on the elimination route.
RrefResult rref_rank_nullspace(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Reduced row echelon form over the rationals.
QMatrix rref(const QMatrix& m);

/// Exact determinant by fraction-free elimination. Throws ShapeError on
/// non-square input.
Rational det_ff(const QMatrix& m);

struct LUPair {
    QMatrix V; ///< unit lower triangular
    QMatrix U; ///< upper triangular
};

/// Doolittle factorization without pivoting: exists iff all leading principal
/// minors are nonzero. Throws SingularError when det = 0, NoLUError when an
/// earlier leading principal minor vanishes.
LUPair lu_decompose(const QMatrix& m);

enum class MinorMode { LeadingPrincipal, AllUpToOrder };

/// LeadingPrincipal: minors of sizes 1..n. AllUpToOrder: every square minor of
/// size 1..k, row subsets then column subsets in lexicographic order.
std::vector<Rational> minors(const QMatrix& m, MinorMode mode, std::size_t k = 0);

QMatrix inverse(const QMatrix& m);

/// One solution of A x = b (b may have several columns), or nullopt when the
/// system is inconsistent. Free variables are set to zero.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

/// Canonical basis of the column space: reduced column echelon form with unit
/// pivots (the transpose of rref of the transpose, zero rows dropped).
QMatrix column_echelon(const QMatrix& m);

/// Membership of a column vector in the span of a column_echelon basis.
bool in_column_span(const QMatrix& echelon_basis, const QMatrix& v);

} // namespace splinedim::exactla
