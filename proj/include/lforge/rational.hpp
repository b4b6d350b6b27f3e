#pragma once
// Exact rational / integer linear algebra on top of GMP.
// Small dense matrices only; everything here is deterministic.

#include <gmpxx.h>
#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lforge {

using Rat = mpq_class;
using Int = mpz_class;

class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    RatMat transpose() const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    bool operator==(const RatMat& o) const;

    RatMat block(int r0, int c0, int nr, int nc) const;

    Rat determinant() const;
    RatMat inverse() const;                 // throws on singular
    RatMat solve(const RatMat& rhs) const;  // this * X = rhs

    Eigen::MatrixXd to_double() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    RatMat to_rational() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Column-style Hermite reduction: finds unimodular U with M*U = [H | 0] where H
// has `rank` pivot columns in echelon form. Returns rank.
int hermite_column_reduce(IntMat& m, IntMat& u);

// Exact solve A X = rhs for sparse symmetric positive definite A, given as one
// map of column -> value per row. Minimum-degree pivoting keeps fill low.
RatMat solve_sparse_spd(std::vector<std::map<int, Rat>> rows, RatMat rhs);

// Schur complement A11 - A12 A22^{-1} A21 for the leading d x d block.
RatMat schur_complement(const RatMat& a, int d);

// Lower-triangular L with L L^T = B (rows of L are lattice vectors).
// Throws std::runtime_error if B is not positive definite.
Eigen::MatrixXd cholesky_rows(const RatMat& b);
Eigen::MatrixXd cholesky_rows(const Eigen::MatrixXd& b);

}  // namespace lforge
