#include "fo/linalg.hpp"

#include "fo/errors.hpp"

namespace fo {

namespace {

size_t ncols_of(const QMat& a) {
    if (a.empty()) return 0;
    size_t n = a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw InputError("ragged matrix");
    return n;
}

// Gauss-Jordan on an augmented matrix [a | aug]; returns pivot column of each
// pivot row. aug may be empty.
std::vector<size_t> rref_in_place(QMat& m, size_t main_cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < main_cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t j = col; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinSolveResult solve_linear(const QMat& a, const QVec& rhs) {
    size_t rows = a.size();
    size_t cols = ncols_of(a);
    if (rhs.size() != rows) throw InputError("rhs length mismatch");

    QMat m = a;
    for (size_t r = 0; r < rows; ++r) m[r].push_back(rhs[r]);
    std::vector<size_t> pivots = rref_in_place(m, cols);

    LinSolveResult out;
    out.rank = static_cast<int>(pivots.size());

    // inconsistent iff some row reads 0 = nonzero
    out.consistent = true;
    for (size_t r = pivots.size(); r < rows; ++r)
        if (!m[r][cols].is_zero()) { out.consistent = false; break; }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    if (out.consistent) {
        out.solution.assign(cols, Rational(0));
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            out.solution[pivots[pr]] = m[pr][cols];
    }

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_col];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

int rank(const QMat& a) {
    QMat m = a;
    return static_cast<int>(rref_in_place(m, ncols_of(m)).size());
}

std::vector<QVec> null_space(const QMat& a) {
    size_t rows = a.size();
    QVec rhs(rows, Rational(0));
    return solve_linear(a, rhs).nullspace;
}

QMat row_space_basis(const QMat& a) {
    QMat m = a;
    std::vector<size_t> pivots = rref_in_place(m, ncols_of(m));
    m.resize(pivots.size());
    return m;
}

Rational det(const QMat& a) {
    size_t n = a.size();
    if (n != ncols_of(a)) throw InputError("determinant of non-square matrix");
    QMat m = a;
    Rational d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            d = -d;
        }
        d *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return d;
}

QMat intersect_row_spans(const QMat& a, const QMat& b) {
    QMat ra = row_space_basis(a);
    QMat rb = row_space_basis(b);
    if (ra.empty() || rb.empty()) return {};
    size_t cols = ra[0].size();
    if (cols != rb[0].size()) throw InputError("row span dimension mismatch");

    // v in both spans  <=>  v = alpha^T ra = beta^T rb; solve for (alpha,beta)
    // via the null space of columns [ra^T | -rb^T].
    QMat sys(cols, QVec(ra.size() + rb.size(), Rational(0)));
    for (size_t c = 0; c < cols; ++c) {
        for (size_t i = 0; i < ra.size(); ++i) sys[c][i] = ra[i][c];
        for (size_t j = 0; j < rb.size(); ++j) sys[c][ra.size() + j] = -rb[j][c];
    }
    QMat result;
    for (const QVec& ker : null_space(sys)) {
        QVec v(cols, Rational(0));
        for (size_t i = 0; i < ra.size(); ++i)
            for (size_t c = 0; c < cols; ++c) v[c] += ker[i] * ra[i][c];
        result.push_back(std::move(v));
    }
    return row_space_basis(result);
}

QVec mat_vec(const QMat& a, const QVec& x) {
    size_t cols = ncols_of(a);
    if (x.size() != cols) throw InputError("matrix-vector size mismatch");
    QVec y(a.size(), Rational(0));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < cols; ++c) y[r] += a[r][c] * x[c];
    return y;
}

} // namespace fo
