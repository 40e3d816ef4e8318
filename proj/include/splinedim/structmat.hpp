#pragma once

#include "splinedim/deltastar.hpp"

namespace splinedim::structmat {

using exactla::Int;
using exactla::QMatrix;
using exactla::Rational;
using polyring::HPoly;

/// Internal inconsistency that the underlying theory rules out.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Shared data for the banded binomial blocks of one smoothness order r:
/// n with r = 2n-1 or r = 2n, the block width p = r - n + 1, and the
/// symmetric coefficient list m[l] = C(r+1, l).
struct BlockSpec {
    int r;
    int n;
    int p;
    std::vector<Int> m;
};

BlockSpec block_spec(int r);

/// The n x (k+1) banded Toeplitz block whose kernel carries the degree-k
/// parameters: entry (t, j) = C(r+1, h + t - j) with h = r + 1 - n.
/// Valid for n <= k <= r.
QMatrix m_block(int r, int k);

/// Sum of the kernel dimensions of m_block(r, k) over k = n..r. Checks
/// rank m_block(r, k) = n along the way.
std::size_t kernel_dim_total(int r);

/// The invertible n x n left block shared by every m_block(r, k).
QMatrix n_block(int r);

/// The bordered (n+1) x (n+1) matrix [[0 | N^-1], [-1 | 0]]; r even only.
QMatrix n_prime(int r);

/// N^-1 when r is odd, n_prime when r is even.
QMatrix n_bar(int r);

/// p x p lower triangular binomial matrix, entries C(r+1, i-j).
QMatrix d_matrix(int r);

/// U = J D Nbar D: symmetric, and J U J admits an LU factorization.
QMatrix u_matrix(int r);

/// Dimension of the Schur module for the partition lambda (weakly decreasing,
/// positive) over a space of dimension t > lambda[0], via the s x s binomial
/// determinant with entries C(t, lambda[j] + i - j). Rows of the Young
/// diagram are antisymmetrized, columns symmetrized.
Int schur_dim_det(const std::vector<int>& lambda, int t);

/// Independent oracle: Weyl dimension product, evaluated on the conjugate
/// partition to match the row-antisymmetrizing convention above.
Int schur_dim_weyl(const std::vector<int>& lambda, int t);

/// Every minor of n_block (full subset enumeration) and every structurally
/// nonzero contiguous minor of the Toeplitz matrix of (1+x)^{r+1} up to
/// max_order is strictly positive.
bool toeplitz_positivity(int r, int max_order);

/// Rank criterion for AX - YB = C: [[A,0],[0,B]] and [[A,C],[0,B]] agree.
bool roth_solvable(const QMatrix& a, const QMatrix& b, const QMatrix& c);

struct RothSolution {
    QMatrix x;
    QMatrix y;
};

/// Upper triangular X, Y with W X - Y^T W^T = C, for invertible W admitting
/// an LU factorization. Splitting convention: C' = V^-1 C V^-T is divided
/// into its upper part (diagonal included) and minus its strict lower part.
RothSolution roth_triangular_solve(const QMatrix& w, const QMatrix& c);

/// Lower triangular X, Y with U X - Y^T U = C for symmetric U such that
/// J U J admits an LU factorization; solved by exchange conjugation.
RothSolution roth_lower_solve(const QMatrix& u, const QMatrix& c);

/// Coefficient parameterization of an element of K(r): the two parameter
/// families, their triangular tails, and the two coefficient matrices read
/// directly from F.
struct ParamMatrices {
    int r, n, p;
    QMatrix q, s;           ///< p x p parameter matrices
    QMatrix q_tilde, s_tilde; ///< upper triangular tails
    QMatrix a, b;           ///< coefficient matrices of F itself
};

/// Solves y^{r+1} f_k = P_k x^{r+1} + Q_k (x+y)^{r+1} for every z-slice of F
/// (and the mirrored equations for the x-slices), assembles the parameter
/// matrices, and checks every relation tying them together. Throws
/// deltastar::NotInKError when F is not in K(r).
ParamMatrices param_extract(const HPoly& f);

struct RothOperatorRank {
    std::size_t rank;
    bool surjective;
};

/// Explicit p^2 x p(p+1) matrix of (S~, Q~) -> U S~ - Q~^T U^T over pairs of
/// upper triangular matrices; surjectivity there is equivalent to the kernel
/// space having the expected dimension.
RothOperatorRank triangular_roth_operator_rank(int r);

} // namespace splinedim::structmat
