#include "lforge/rational.hpp"

#include <cmath>

namespace lforge {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: dimension mismatch in product");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

bool RatMat::operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatMat RatMat::block(int r0, int c0, int nr, int nc) const {
    RatMat b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Rat RatMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: determinant of non-square matrix");
    RatMat a = *this;
    Rat det = 1;
    const int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rat f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

RatMat RatMat::solve(const RatMat& rhs) const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: solve needs square matrix");
    if (rhs.rows() != rows_) throw std::invalid_argument("RatMat: rhs shape mismatch");
    const int n = rows_, m = rhs.cols();
    RatMat a = *this, b = rhs;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::runtime_error("RatMat: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (int j = 0; j < m; ++j) std::swap(b(pivot, j), b(col, j));
        }
        Rat inv = 1 / a(col, col);
        for (int j = col; j < n; ++j) a(col, j) *= inv;
        for (int j = 0; j < m; ++j) b(col, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < m; ++j) b(r, j) -= f * b(col, j);
        }
    }
    return b;
}

RatMat RatMat::inverse() const { return solve(identity(rows_)); }

Eigen::MatrixXd RatMat::to_double() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
    return m;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RatMat IntMat::to_rational() const {
    RatMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

int hermite_column_reduce(IntMat& m, IntMat& u) {
    const int rows = m.rows(), cols = m.cols();
    u = IntMat::identity(cols);
    auto swap_cols = [&](IntMat& a, int i, int j) {
        for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    };
    auto addmul_col = [&](IntMat& a, int dst, int src, const Int& f) {
        for (int r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
    };
    int rank = 0;
    for (int row = 0; row < rows && rank < cols; ++row) {
        // eliminate to a single nonzero in this row among columns >= rank
        while (true) {
            int best = -1;
            for (int c = rank; c < cols; ++c) {
                if (m(row, c) == 0) continue;
                if (best < 0 || abs(m(row, c)) < abs(m(row, best))) best = c;
            }
            if (best < 0) break;  // row already clear; move to next row
            if (best != rank) { swap_cols(m, rank, best); swap_cols(u, rank, best); }
            bool clean = true;
            for (int c = rank + 1; c < cols; ++c) {
                if (m(row, c) == 0) continue;
                Int q = m(row, c) / m(row, rank);  // truncated division keeps remainders small
                if (q != 0) { addmul_col(m, c, rank, -q); addmul_col(u, c, rank, -q); }
                if (m(row, c) != 0) clean = false;
            }
            if (clean) {
                if (m(row, rank) < 0) {
                    addmul_col(m, rank, rank, Int(-2));
                    addmul_col(u, rank, rank, Int(-2));
                }
                ++rank;
                break;
            }
        }
    }
    return rank;
}

RatMat solve_sparse_spd(std::vector<std::map<int, Rat>> rows, RatMat rhs) {
    const int n = static_cast<int>(rows.size());
    if (rhs.rows() != n) throw std::invalid_argument("solve_sparse_spd: rhs shape mismatch");
    const int m = rhs.cols();

    std::vector<char> eliminated(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pivot = -1;
        size_t best_deg = SIZE_MAX;
        for (int i = 0; i < n; ++i)
            if (!eliminated[i] && rows[i].size() < best_deg) {
                best_deg = rows[i].size();
                pivot = i;
            }
        const Rat diag = rows[pivot].count(pivot) ? rows[pivot][pivot] : Rat(0);
        if (diag == 0) throw std::runtime_error("solve_sparse_spd: zero pivot");
        eliminated[pivot] = 1;
        order.push_back(pivot);
        const std::map<int, Rat> prow = rows[pivot];
        for (const auto& [col, val] : prow) {
            if (col == pivot || eliminated[col]) continue;
            Rat f = rows[col][pivot] / diag;
            if (f == 0) continue;
            for (const auto& [c2, v2] : prow) {
                auto it = rows[col].find(c2);
                if (it == rows[col].end())
                    rows[col][c2] = -f * v2;
                else {
                    it->second -= f * v2;
                    if (it->second == 0 && c2 != pivot) rows[col].erase(it);
                }
            }
            rows[col].erase(pivot);
            for (int j = 0; j < m; ++j) rhs(col, j) -= f * rhs(pivot, j);
        }
    }
    // back substitution in reverse elimination order
    RatMat x(n, m);
    for (int s = n - 1; s >= 0; --s) {
        int i = order[s];
        for (int j = 0; j < m; ++j) {
            Rat acc = rhs(i, j);
            for (auto& [col, val] : rows[i]) {
                if (col == i) continue;
                acc -= val * x(col, j);
            }
            x(i, j) = acc / rows[i][i];
        }
    }
    return x;
}

RatMat schur_complement(const RatMat& a, int d) {
    const int b = a.rows();
    if (a.cols() != b || d < 1 || d > b) throw std::invalid_argument("schur_complement: bad block size");
    if (d == b) return a;
    RatMat a11 = a.block(0, 0, d, d);
    RatMat a12 = a.block(0, d, d, b - d);
    RatMat a21 = a.block(d, 0, b - d, d);
    RatMat a22 = a.block(d, d, b - d, b - d);
    return a11 - a12 * a22.solve(a21);
}

Eigen::MatrixXd cholesky_rows(const Eigen::MatrixXd& b) {
    const int n = static_cast<int>(b.rows());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = b(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) throw std::runtime_error("cholesky: matrix not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

Eigen::MatrixXd cholesky_rows(const RatMat& b) { return cholesky_rows(b.to_double()); }

}  // namespace lforge
