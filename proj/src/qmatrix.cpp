#include "splinedim/qmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace splinedim::exactla {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact at every step
    }
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Int parse_int(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw FormatError("invalid integer literal");
    Int v{std::string(s)};
    return negative ? Int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw FormatError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    Int num = parse_int(trim(s.substr(0, slash)));
    Int den = parse_int(trim(s.substr(slash + 1)));
    if (den == 0) throw FormatError("zero denominator");
    return Rational(num, den); // constructor canonicalizes
}

std::string rational_to_string(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("entry count does not match dimensions");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
}

QMatrix QMatrix::from_fn(std::size_t rows, std::size_t cols,
                         const std::function<Rational(std::size_t, std::size_t)>& fn) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.entries_[i * cols + j] = fn(i, j);
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("product shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (b != 0) out.entries_[i * rhs.cols_ + j] += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("sum shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("difference shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

QMatrix QMatrix::operator-() const { return scaled(-1); }

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = c * entries_[i];
    return out;
}

QMatrix QMatrix::block(std::size_t row0, std::size_t col0,
                       std::size_t height, std::size_t width) const {
    if (row0 + height > rows_ || col0 + width > cols_) throw ShapeError("block out of range");
    QMatrix out(height, width);
    for (std::size_t i = 0; i < height; ++i)
        for (std::size_t j = 0; j < width; ++j)
            out.entries_[i * width + j] = (*this)(row0 + i, col0 + j);
    return out;
}

QMatrix QMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const {
    QMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.entries_[i * col_idx.size() + j] = (*this)(row_idx[i], col_idx[j]);
    return out;
}

QMatrix QMatrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

bool QMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool QMatrix::is_upper_triangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool QMatrix::is_lower_triangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool QMatrix::is_unit_lower_triangular() const {
    if (!is_lower_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, i) != 1) return false;
    return true;
}

std::string QMatrix::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
    }
    return os.str();
}

QMatrix QMatrix::parse(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t start = 0;
    std::string body(text);
    while (start <= body.size()) {
        auto end = body.find(';', start);
        std::string_view row_text =
            std::string_view(body).substr(start, end == std::string::npos ? std::string::npos
                                                                          : end - start);
        std::vector<Rational> row;
        std::size_t e0 = 0;
        while (e0 <= row_text.size()) {
            auto e1 = row_text.find(',', e0);
            std::string_view cell =
                row_text.substr(e0, e1 == std::string_view::npos ? std::string_view::npos
                                                                 : e1 - e0);
            try {
                row.push_back(parse_rational(cell));
            } catch (const FormatError& ex) {
                throw FormatError("row " + std::to_string(rows.size() + 1) + ", entry " +
                                  std::to_string(row.size() + 1) + ": " + ex.what());
            }
            if (e1 == std::string_view::npos) break;
            e0 = e1 + 1;
        }
        rows.push_back(std::move(row));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (rows.empty()) throw FormatError("empty matrix literal");
    std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw FormatError("row " + std::to_string(i + 1) + ": expected " +
                              std::to_string(cols) + " entries");
        for (auto& e : rows[i]) entries.push_back(std::move(e));
    }
    return QMatrix(rows.size(), cols, std::move(entries));
}

QMatrix hcat(const QMatrix& left, const QMatrix& right) {
    if (left.empty()) return right;
    if (right.empty()) return left;
    if (left.rows() != right.rows()) throw ShapeError("hcat row mismatch");
    return QMatrix::from_fn(left.rows(), left.cols() + right.cols(),
                            [&](std::size_t i, std::size_t j) {
                                return j < left.cols() ? left(i, j) : right(i, j - left.cols());
                            });
}

QMatrix vcat(const QMatrix& top, const QMatrix& bottom) {
    if (top.empty()) return bottom;
    if (bottom.empty()) return top;
    if (top.cols() != bottom.cols()) throw ShapeError("vcat column mismatch");
    return QMatrix::from_fn(top.rows() + bottom.rows(), top.cols(),
                            [&](std::size_t i, std::size_t j) {
                                return i < top.rows() ? top(i, j) : bottom(i - top.rows(), j);
                            });
}

QMatrix exchange_matrix(std::size_t p) {
    if (p < 1) throw ShapeError("exchange matrix needs p >= 1");
    return QMatrix::from_fn(p, p, [p](std::size_t i, std::size_t j) {
        return Rational(i + j == p - 1 ? 1 : 0);
    });
}

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rows; // pivot rows first, then untouched zeros
    std::vector<std::size_t> pivot_cols;     // ascending
    int sign = 1;
};

// Rational Gaussian forward elimination, first nonzero pivot in column order.
// Skips zero entries so the unit-heavy structured matrices stay cheap.
Echelon forward(const QMatrix& m) {
    Echelon ech;
    ech.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ech.rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) ech.rows[i][j] = m(i, j);
    }
    std::size_t front = 0;
    for (std::size_t col = 0; col < m.cols() && front < m.rows(); ++col) {
        std::size_t pr = front;
        while (pr < m.rows() && ech.rows[pr][col] == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != front) {
            std::swap(ech.rows[pr], ech.rows[front]);
            ech.sign = -ech.sign;
        }
        const std::vector<Rational>& prow = ech.rows[front];
        const Rational& pivot = prow[col];
        for (std::size_t r = front + 1; r < m.rows(); ++r) {
            std::vector<Rational>& row = ech.rows[r];
            if (row[col] == 0) continue;
            Rational factor = row[col] / pivot;
            row[col] = 0;
            for (std::size_t c = col + 1; c < m.cols(); ++c)
                if (prow[c] != 0) row[c] -= factor * prow[c];
        }
        ech.pivot_cols.push_back(col);
        ++front;
    }
    return ech;
}

// Normalizes pivots to one and clears above, yielding the (unique) RREF rows.
void jordan(Echelon& ech, std::size_t cols) {
    for (std::size_t idx = ech.pivot_cols.size(); idx-- > 0;) {
        std::size_t pc = ech.pivot_cols[idx];
        std::vector<Rational>& prow = ech.rows[idx];
        const Rational pivot = prow[pc];
        if (pivot != 1)
            for (std::size_t c = pc; c < cols; ++c)
                if (prow[c] != 0) prow[c] /= pivot;
        for (std::size_t r = 0; r < idx; ++r) {
            std::vector<Rational>& row = ech.rows[r];
            if (row[pc] == 0) continue;
            Rational factor = row[pc];
            row[pc] = 0;
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (prow[c] != 0) row[c] -= factor * prow[c];
        }
    }
}

} // namespace

RrefResult rref_rank_nullspace(const QMatrix& m) {
    if (m.empty()) throw ShapeError("empty matrix");
    Echelon ech = forward(m);
    jordan(ech, m.cols());
    const std::size_t rank = ech.pivot_cols.size();

    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_col(m.cols(), kFree);
    for (std::size_t p = 0; p < rank; ++p) pivot_of_col[ech.pivot_cols[p]] = p;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (pivot_of_col[c] == kFree) free_cols.push_back(c);

    QMatrix nullspace = QMatrix::from_fn(
        m.cols(), free_cols.size(), [&](std::size_t i, std::size_t j) -> Rational {
            if (i == free_cols[j]) return 1;
            if (pivot_of_col[i] != kFree) return -ech.rows[pivot_of_col[i]][free_cols[j]];
            return 0;
        });
    return RrefResult{rank, std::move(nullspace)};
}

std::size_t rank(const QMatrix& m) {
    if (m.empty()) return 0;
    return forward(m).pivot_cols.size();
}

QMatrix rref(const QMatrix& m) {
    Echelon ech = forward(m);
    jordan(ech, m.cols());
    return QMatrix::from_fn(m.rows(), m.cols(),
                            [&](std::size_t i, std::size_t j) { return ech.rows[i][j]; });
}

Rational det_ff(const QMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            lcm = boost::multiprecision::lcm(lcm, Int(denominator(m(i, j))));
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m(i, j);
            a[i][j] = Int(numerator(e)) * (lcm / Int(denominator(e)));
        }
        scale *= lcm;
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        std::size_t pr = k;
        while (pr < n && a[pr][k] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != k) {
            std::swap(a[pr], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int numer = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                Int q, rem;
                boost::multiprecision::divide_qr(numer, prev, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free division not exact");
                a[i][j] = std::move(q);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]), scale);
}

LUPair lu_decompose(const QMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("LU of non-square matrix");
    const std::size_t n = m.rows();
    if (det_ff(m) == 0) throw SingularError("matrix is singular");

    std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n)),
        u(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = k; j < n; ++j) {
            Rational s = m(k, j);
            for (std::size_t t = 0; t < k; ++t) s -= v[k][t] * u[t][j];
            u[k][j] = std::move(s);
        }
        if (u[k][k] == 0)
            throw NoLUError("leading principal minor of order " + std::to_string(k + 1) +
                            " is zero");
        v[k][k] = 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational s = m(i, k);
            for (std::size_t t = 0; t < k; ++t) s -= v[i][t] * u[t][k];
            v[i][k] = s / u[k][k];
        }
    }
    return LUPair{
        QMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) { return v[i][j]; }),
        QMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) { return u[i][j]; })};
}

namespace {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace

std::vector<Rational> minors(const QMatrix& m, MinorMode mode, std::size_t k) {
    std::vector<Rational> out;
    const std::size_t bound = std::min(m.rows(), m.cols());
    if (mode == MinorMode::LeadingPrincipal) {
        for (std::size_t s = 1; s <= bound; ++s) out.push_back(det_ff(m.block(0, 0, s, s)));
        return out;
    }
    if (k > bound) throw ShapeError("minor order out of range");
    for (std::size_t s = 1; s <= k; ++s) {
        for_each_combination(m.rows(), s, [&](const std::vector<std::size_t>& rows_sel) {
            for_each_combination(m.cols(), s, [&](const std::vector<std::size_t>& cols_sel) {
                out.push_back(det_ff(m.submatrix(rows_sel, cols_sel)));
            });
        });
    }
    return out;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug = hcat(m, QMatrix::identity(n));
    QMatrix red = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (red(i, i) != 1) throw SingularError("matrix is singular");
    return red.block(0, n, n, n);
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve shape mismatch");
    Echelon ech = forward(hcat(a, b));
    // Any pivot landing in the right block marks an inconsistent system.
    for (std::size_t pc : ech.pivot_cols)
        if (pc >= a.cols()) return std::nullopt;
    jordan(ech, a.cols() + b.cols());
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_col(a.cols(), kFree);
    for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p) pivot_of_col[ech.pivot_cols[p]] = p;
    return QMatrix::from_fn(a.cols(), b.cols(), [&](std::size_t i, std::size_t j) -> Rational {
        if (pivot_of_col[i] != kFree) return ech.rows[pivot_of_col[i]][a.cols() + j];
        return 0;
    });
}

QMatrix column_echelon(const QMatrix& m) {
    if (m.empty()) return QMatrix(m.rows(), 0);
    QMatrix t = m.transpose();
    Echelon ech = forward(t);
    jordan(ech, t.cols());
    const std::size_t rank = ech.pivot_cols.size();
    return QMatrix::from_fn(m.rows(), rank,
                            [&](std::size_t i, std::size_t j) { return ech.rows[j][i]; });
}

bool in_column_span(const QMatrix& echelon_basis, const QMatrix& v) {
    if (v.cols() != 1 || v.rows() != echelon_basis.rows()) throw ShapeError("vector shape mismatch");
    std::vector<Rational> w(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) w[i] = v(i, 0);
    for (std::size_t j = 0; j < echelon_basis.cols(); ++j) {
        // pivot row = first nonzero entry of the echelon column
        std::size_t p = 0;
        while (p < echelon_basis.rows() && echelon_basis(p, j) == 0) ++p;
        if (p == echelon_basis.rows()) continue;
        if (w[p] == 0) continue;
        Rational factor = w[p] / echelon_basis(p, j);
        for (std::size_t i = p; i < v.rows(); ++i)
            if (echelon_basis(i, j) != 0) w[i] -= factor * echelon_basis(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& e) { return e == 0; });
}

} // namespace splinedim::exactla
