#include "daha/linalg.hpp"

namespace daha {

Matrix Matrix::identity(int n, int p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(p);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) throw DomainError("from_columns: empty");
    int rows = static_cast<int>(cols[0].size());
    int p = cols[0][0].p();
    Matrix m(rows, static_cast<int>(cols.size()), p);
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw DomainError("from_columns: ragged columns");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(int j) const {
    Vector v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CycScalar& y = o.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DomainError("matrix-vector shape mismatch");
    Vector out(rows_, CycScalar::zero(p_));
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const CycScalar& x = at(i, j);
            if (!x.is_zero()) out[i] += x * v[j];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Matrix Matrix::scaled(const CycScalar& c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= c;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return !first_difference(o).has_value();
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> Matrix::first_difference(const Matrix& o) const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(at(i, j) == o.at(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

namespace {

struct Elim {
    // augmented row-major storage
    std::vector<Vector> rows;
    int width;

    // Reduce to RREF using unit pivots only.  The scalar ring can contain
    // zero divisors (when sqrt(2p) lies in the cyclotomic field), so a
    // nonzero entry is usable as a pivot only when its norm is nonzero.
    // If a column offers only non-unit nonzero entries, a row combination
    // is tried to produce a unit before giving up.
    std::vector<int> rref(int active_cols) {
        std::vector<int> pivots;
        int r = 0;
        int nrows = static_cast<int>(rows.size());
        for (int c = 0; c < active_cols && r < nrows; ++c) {
            int piv = -1;
            for (int i = r; i < nrows; ++i) {
                if (!rows[i][c].is_zero() && rows[i][c].is_unit()) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) {
                piv = combine_for_unit(r, c);
                if (piv < 0) {
                    bool any = false;
                    for (int i = r; i < nrows; ++i)
                        if (!rows[i][c].is_zero()) any = true;
                    if (any)
                        throw SingularMatrixError(
                            "no unit pivot available in column " + std::to_string(c));
                    continue;
                }
            }
            std::swap(rows[r], rows[piv]);
            CycScalar inv = rows[r][c].inverse();
            for (auto& x : rows[r]) x *= inv;
            for (int i = 0; i < nrows; ++i) {
                if (i == r || rows[i][c].is_zero()) continue;
                CycScalar f = rows[i][c];
                for (int j = 0; j < width; ++j) {
                    if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int combine_for_unit(int r, int c) {
        int nrows = static_cast<int>(rows.size());
        const int p = rows[0][0].p();
        const CycScalar one = CycScalar::one(p);
        const CycScalar root = CycScalar::sqrt_2p(p);
        for (int i = r; i < nrows; ++i) {
            if (rows[i][c].is_zero()) continue;
            for (int k = r; k < nrows; ++k) {
                if (k == i || rows[k][c].is_zero()) continue;
                for (const CycScalar& m : {one, -one, root, -root}) {
                    CycScalar cand = rows[i][c] + m * rows[k][c];
                    if (!cand.is_zero() && cand.is_unit()) {
                        for (int j = 0; j < width; ++j)
                            rows[i][j] += m * rows[k][j];
                        return i;
                    }
                }
            }
        }
        return -1;
    }
};

}  // namespace

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
    Elim e;
    e.width = 2 * cols_;
    e.rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Vector row;
        row.reserve(e.width);
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        for (int j = 0; j < cols_; ++j)
            row.push_back(i == j ? CycScalar::one(p_) : CycScalar::zero(p_));
        e.rows.push_back(std::move(row));
    }
    auto pivots = e.rref(cols_);
    if (static_cast<int>(pivots.size()) != cols_)
        throw SingularMatrixError("matrix is singular");
    Matrix out(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = e.rows[i][cols_ + j];
    return out;
}

int Matrix::rank() const {
    Elim e;
    e.width = cols_;
    e.rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Vector row;
        row.reserve(cols_);
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        e.rows.push_back(std::move(row));
    }
    return static_cast<int>(e.rref(cols_).size());
}

std::vector<Vector> Matrix::kernel() const {
    Elim e;
    e.width = cols_;
    e.rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Vector row;
        row.reserve(cols_);
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        e.rows.push_back(std::move(row));
    }
    auto pivots = e.rref(cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(cols_, CycScalar::zero(p_));
        v[fc] = CycScalar::one(p_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DomainError("solve: bad rhs");
    Elim e;
    e.width = cols_ + 1;
    e.rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Vector row;
        row.reserve(e.width);
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j));
        row.push_back(b[i]);
        e.rows.push_back(std::move(row));
    }
    auto pivots = e.rref(cols_);
    if (static_cast<int>(pivots.size()) != cols_)
        throw DomainError("solve: matrix does not have full column rank");
    Vector x(cols_, CycScalar::zero(p_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = e.rows[r][cols_];
    for (size_t r = pivots.size(); r < e.rows.size(); ++r)
        if (!e.rows[r][cols_].is_zero()) return std::nullopt;
    return x;
}

}  // namespace daha
