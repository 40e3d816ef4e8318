#include "splinedim/structmat.hpp"

#include <algorithm>

namespace splinedim::structmat {

using deltastar::NotInKError;
using exactla::ShapeError;
using exactla::binomial;
using polyring::MonomialBasis;
using polyring::Var;
using polyring::VarList;
using polyring::vars_xy;
using polyring::vars_xyz;
using polyring::vars_yz;

BlockSpec block_spec(int r) {
    if (r < 1) throw ShapeError("block_spec needs r >= 1");
    const int n = deltastar::alpha(r);
    BlockSpec spec{r, n, r - n + 1, {}};
    spec.m.reserve(r + 2);
    for (int l = 0; l <= r + 1; ++l) spec.m.push_back(binomial(r + 1, l));
    return spec;
}

QMatrix m_block(int r, int k) {
    BlockSpec spec = block_spec(r);
    if (k < spec.n || k > r) throw ShapeError("k out of range for m_block");
    const int h = r + 1 - spec.n;
    return QMatrix::from_fn(spec.n, k + 1, [&](std::size_t t, std::size_t j) {
        return Rational(binomial(r + 1, h + static_cast<int>(t) - static_cast<int>(j)));
    });
}

std::size_t kernel_dim_total(int r) {
    BlockSpec spec = block_spec(r);
    std::size_t total = 0;
    for (int k = spec.n; k <= r; ++k) {
        QMatrix block = m_block(r, k);
        std::size_t rk = exactla::rank(block);
        if (rk != static_cast<std::size_t>(spec.n))
            throw InternalError("banded block of full row rank expected");
        total += (k + 1) - rk;
    }
    return total;
}

QMatrix n_block(int r) {
    BlockSpec spec = block_spec(r);
    const int h = r + 1 - spec.n;
    return QMatrix::from_fn(spec.n, spec.n, [&](std::size_t i, std::size_t j) {
        return Rational(binomial(r + 1, h + static_cast<int>(i) - static_cast<int>(j)));
    });
}

QMatrix n_prime(int r) {
    if (r % 2 != 0) throw ShapeError("n_prime is defined for even r only");
    const int n = r / 2;
    QMatrix ninv = exactla::inverse(n_block(r));
    return QMatrix::from_fn(n + 1, n + 1, [&](std::size_t i, std::size_t j) -> Rational {
        if (i < static_cast<std::size_t>(n))
            return j == 0 ? Rational(0) : ninv(i, j - 1);
        return j == 0 ? Rational(-1) : Rational(0);
    });
}

QMatrix n_bar(int r) {
    return r % 2 == 1 ? exactla::inverse(n_block(r)) : n_prime(r);
}

QMatrix d_matrix(int r) {
    BlockSpec spec = block_spec(r);
    return QMatrix::from_fn(spec.p, spec.p, [&](std::size_t i, std::size_t j) {
        return Rational(binomial(r + 1, static_cast<int>(i) - static_cast<int>(j)));
    });
}

QMatrix u_matrix(int r) {
    BlockSpec spec = block_spec(r);
    QMatrix d = d_matrix(r);
    return exactla::exchange_matrix(spec.p) * d * n_bar(r) * d;
}

namespace {

void validate_partition(const std::vector<int>& lambda, int t) {
    if (lambda.empty()) throw ShapeError("empty partition");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) throw ShapeError("partition parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw ShapeError("partition parts must be weakly decreasing");
    }
    if (t <= lambda.front()) throw ShapeError("need t > largest part");
}

Int rational_to_int(const Rational& v, const char* what) {
    if (denominator(v) != 1) throw InternalError(std::string(what) + " is not an integer");
    return Int(numerator(v));
}

} // namespace

Int schur_dim_det(const std::vector<int>& lambda, int t) {
    validate_partition(lambda, t);
    const std::size_t s = lambda.size();
    QMatrix m = QMatrix::from_fn(s, s, [&](std::size_t i, std::size_t j) {
        return Rational(binomial(t, lambda[j] + static_cast<int>(i) - static_cast<int>(j)));
    });
    return rational_to_int(exactla::det_ff(m), "schur dimension determinant");
}

Int schur_dim_weyl(const std::vector<int>& lambda, int t) {
    validate_partition(lambda, t);
    // The determinant convention antisymmetrizes diagram rows, so the
    // highest-weight partition fed to the Weyl product is the conjugate.
    std::vector<int> mu(t, 0);
    for (int i = 0; i < lambda.front(); ++i) {
        int count = 0;
        for (int part : lambda)
            if (part > i) ++count;
        mu[i] = count;
    }
    Rational dim = 1;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            dim *= Rational(mu[i] - mu[j] + j - i, j - i);
    return rational_to_int(dim, "Weyl dimension product");
}

bool toeplitz_positivity(int r, int max_order) {
    if (r < 1 || max_order < 1) throw ShapeError("toeplitz_positivity needs r, max_order >= 1");
    QMatrix n = n_block(r);
    for (const Rational& v : exactla::minors(n, exactla::MinorMode::AllUpToOrder, n.rows()))
        if (v <= 0) return false;

    // Contiguous windows of the Toeplitz matrix (a_{j-i}) of (1+x)^{r+1}.
    // Offsets outside [0, r+1] put a zero on the diagonal, which forces a
    // structurally zero determinant, so only the banded offsets are tested.
    for (int offset = 0; offset <= r + 1; ++offset) {
        for (int size = 1; size <= max_order; ++size) {
            QMatrix window = QMatrix::from_fn(size, size, [&](std::size_t i, std::size_t j) {
                return Rational(
                    binomial(r + 1, offset + static_cast<int>(j) - static_cast<int>(i)));
            });
            if (exactla::det_ff(window) <= 0) return false;
        }
    }
    return true;
}

bool roth_solvable(const QMatrix& a, const QMatrix& b, const QMatrix& c) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || c.rows() != a.rows() ||
        c.cols() != b.cols())
        throw ShapeError("roth_solvable shape mismatch");
    const std::size_t m = a.rows(), n = b.rows();
    auto blocks = [&](bool with_c) {
        return QMatrix::from_fn(m + n, m + n, [&](std::size_t i, std::size_t j) -> Rational {
            if (i < m && j < m) return a(i, j);
            if (i >= m && j >= m) return b(i - m, j - m);
            if (with_c && i < m && j >= m) return c(i, j - m);
            return 0;
        });
    };
    return exactla::rank(blocks(false)) == exactla::rank(blocks(true));
}

namespace {

QMatrix upper_part(const QMatrix& m) {
    return QMatrix::from_fn(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) {
        return j >= i ? m(i, j) : Rational(0);
    });
}

} // namespace

RothSolution roth_triangular_solve(const QMatrix& w, const QMatrix& c) {
    if (w.rows() != w.cols() || c.rows() != c.cols() || w.rows() != c.rows())
        throw ShapeError("roth_triangular_solve needs square matrices of one size");
    exactla::LUPair lu = exactla::lu_decompose(w);
    QMatrix v_inv = exactla::inverse(lu.V);
    QMatrix c_prime = v_inv * c * v_inv.transpose();
    QMatrix c_upper = upper_part(c_prime);
    QMatrix c_lower = c_upper - c_prime; // minus the strict lower part
    QMatrix u_inv = exactla::inverse(lu.U);
    QMatrix vt = lu.V.transpose();
    RothSolution sol{u_inv * c_upper * vt, u_inv * c_lower.transpose() * vt};
    if (!sol.x.is_upper_triangular() || !sol.y.is_upper_triangular())
        throw InternalError("triangular Roth solution lost triangularity");
    if (w * sol.x - sol.y.transpose() * w.transpose() != c)
        throw InternalError("triangular Roth solution has nonzero residual");
    return sol;
}

RothSolution roth_lower_solve(const QMatrix& u, const QMatrix& c) {
    if (!u.is_symmetric()) throw ShapeError("roth_lower_solve needs a symmetric matrix");
    if (c.rows() != c.cols() || c.rows() != u.rows())
        throw ShapeError("roth_lower_solve shape mismatch");
    QMatrix j = exactla::exchange_matrix(u.rows());
    RothSolution conj = roth_triangular_solve(j * u * j, j * c * j);
    RothSolution sol{j * conj.x * j, j * conj.y * j};
    if (!sol.x.is_lower_triangular() || !sol.y.is_lower_triangular())
        throw InternalError("lower Roth solution lost triangularity");
    if (u * sol.x - sol.y.transpose() * u != c)
        throw InternalError("lower Roth solution has nonzero residual");
    return sol;
}

namespace {

/// Unique (P, Q) of degree k with y^{r+1} f = P g1 + Q g2 in two variables.
/// Returns the coefficient vectors of P and Q; nullopt when f is outside the
/// colon ideal.
std::optional<std::pair<QMatrix, QMatrix>> solve_syzygy_free(const HPoly& f, const HPoly& g1,
                                                             const HPoly& g2, const HPoly& y,
                                                             int r, int k) {
    QMatrix lhs = hcat(polyring::mult_map(g1, k), polyring::mult_map(g2, k));
    QMatrix rhs = (y.pow(r + 1) * f).coeff_column();
    auto solution = exactla::solve(lhs, rhs);
    if (!solution) return std::nullopt;
    if (exactla::rank(lhs) != lhs.cols())
        throw InternalError("syzygy in an unexpectedly low degree");
    return std::make_pair(solution->block(0, 0, k + 1, 1),
                          solution->block(k + 1, 0, k + 1, 1));
}

} // namespace

ParamMatrices param_extract(const HPoly& f_in) {
    HPoly f = f_in.with_variables(vars_xyz());
    const int r = f.degree();
    if (r < 1) throw ShapeError("param_extract needs degree >= 1");
    BlockSpec spec = block_spec(r);
    const int n = spec.n, p = spec.p;
    MonomialBasis basis(vars_xyz(), r);

    // q[a][b]: coefficient of x^a y^b in Q_{a+b}; s[u][v]: of y^u z^v in S_{u+v}.
    std::vector<std::vector<Rational>> q(r + 1, std::vector<Rational>(r + 1)),
        s(r + 1, std::vector<Rational>(r + 1));

    VarList A = vars_xy(), B = vars_yz();
    HPoly ax = HPoly::variable(A, Var::x), ay = HPoly::variable(A, Var::y);
    HPoly bz = HPoly::variable(B, Var::z), by = HPoly::variable(B, Var::y);
    HPoly g1 = ax.pow(r + 1), g2 = (ax + ay).pow(r + 1);
    HPoly h1 = bz.pow(r + 1), h2 = (bz + by).pow(r + 1);

    for (int k = 0; k <= r; ++k) {
        // z-slice of degree k
        HPoly slice(A, k);
        for (int a = 0; a <= k; ++a) {
            Rational c = f.coeff(basis.index_of({{a, k - a, r - k}}));
            if (c != 0) slice = slice + HPoly::monomial(A, {{a, k - a, 0}}, c);
        }
        if (k < n) {
            if (!slice.is_zero())
                throw NotInKError("low z-slice does not vanish; not in K(r)");
            continue;
        }
        auto pq = solve_syzygy_free(slice, g1, g2, ay, r, k);
        if (!pq) throw NotInKError("z-slice outside the colon ideal; not in K(r)");
        for (int i = 0; i <= k; ++i) q[i][k - i] = pq->second(k - i, 0);
    }
    for (int i = 0; i <= r; ++i) {
        // x-slice of degree i
        HPoly slice(B, i);
        for (int c = 0; c <= i; ++c) {
            Rational v = f.coeff(basis.index_of({{r - i, i - c, c}}));
            if (v != 0) slice = slice + HPoly::monomial(B, {{0, i - c, c}}, v);
        }
        if (i < n) {
            if (!slice.is_zero())
                throw NotInKError("low x-slice does not vanish; not in K(r)");
            continue;
        }
        auto rs = solve_syzygy_free(slice, h1, h2, by, r, i);
        if (!rs) throw NotInKError("x-slice outside the colon ideal; not in K(r)");
        for (int c = 0; c <= i; ++c) s[i - c][c] = rs->second(c, 0);
    }

    ParamMatrices out{r, n, p, {}, {}, {}, {}, {}, {}};
    out.q = QMatrix::from_fn(p, p, [&](std::size_t a, std::size_t c) {
        return q[a][n + c - a];
    });
    out.s = QMatrix::from_fn(p, p, [&](std::size_t u, std::size_t c) {
        return s[n + c - u][u];
    });
    out.q_tilde = QMatrix::from_fn(p, p, [&](std::size_t t, std::size_t c) {
        return c >= t ? q[n + t][c - t] : Rational(0);
    });
    out.s_tilde = QMatrix::from_fn(p, p, [&](std::size_t t, std::size_t c) {
        return c >= t ? s[c - t][n + t] : Rational(0);
    });
    out.a = QMatrix::from_fn(p, p, [&](std::size_t u, std::size_t c) {
        return f.coeff(basis.index_of({{static_cast<int>(u),
                                        static_cast<int>(n + c - u),
                                        static_cast<int>(r - n - c)}}));
    });
    out.b = QMatrix::from_fn(p, p, [&](std::size_t u, std::size_t c) {
        return f.coeff(basis.index_of({{static_cast<int>(r - n - c),
                                        static_cast<int>(n + c - u),
                                        static_cast<int>(u)}}));
    });

    // Relations forced by the parameterization; a failure here is a bug.
    QMatrix d = d_matrix(r);
    QMatrix j = exactla::exchange_matrix(p);
    QMatrix u = u_matrix(r);
    QMatrix nb = n_bar(r);
    if (out.a != d * out.q) throw InternalError("A = D Q failed");
    if (out.b != d * out.s) throw InternalError("B = D S failed");
    if (j * out.a.transpose() * j != out.b) throw InternalError("J A^T J = B failed");
    if (d * out.s != j * out.q.transpose() * d.transpose() * j)
        throw InternalError("D S = J Q^T D^T J failed");
    if (out.q != -(nb * d * out.q_tilde)) throw InternalError("Q = -Nbar D Qtilde failed");
    if (out.s != -(nb * d * out.s_tilde)) throw InternalError("S = -Nbar D Stilde failed");
    if (u * out.s_tilde != (u * out.q_tilde).transpose())
        throw InternalError("U Stilde = (U Qtilde)^T failed");
    for (int k = n; k <= r; ++k) {
        QMatrix qvec = QMatrix::from_fn(k + 1, 1, [&](std::size_t i, std::size_t) {
            return q[i][k - i];
        });
        QMatrix svec = QMatrix::from_fn(k + 1, 1, [&](std::size_t i, std::size_t) {
            return s[k - i][i];
        });
        QMatrix block = m_block(r, k);
        if (!(block * qvec).is_zero()) throw InternalError("M(k) q = 0 failed");
        if (!(block * svec).is_zero()) throw InternalError("M(k) s = 0 failed");
    }
    return out;
}

RothOperatorRank triangular_roth_operator_rank(int r) {
    BlockSpec spec = block_spec(r);
    const std::size_t p = spec.p;
    QMatrix u = u_matrix(r);
    const std::size_t upper_count = p * (p + 1) / 2;
    std::vector<Rational> entries(p * p * 2 * upper_count);
    std::size_t col = 0;
    auto emit = [&](const QMatrix& image) {
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                entries[(i * p + j) * 2 * upper_count + col] = image(i, j);
        ++col;
    };
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            QMatrix e = QMatrix::from_fn(p, p, [&](std::size_t a, std::size_t b) {
                return Rational(a == i && b == j ? 1 : 0);
            });
            emit(u * e); // S~ direction
        }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            QMatrix e = QMatrix::from_fn(p, p, [&](std::size_t a, std::size_t b) {
                return Rational(a == i && b == j ? 1 : 0);
            });
            emit(-(e.transpose() * u.transpose())); // Q~ direction
        }
    QMatrix matrix(p * p, 2 * upper_count, std::move(entries));
    std::size_t rank = exactla::rank(matrix);
    return RothOperatorRank{rank, rank == p * p};
}

} // namespace splinedim::structmat
