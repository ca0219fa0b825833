#pragma once

#include "mckay/exactnum.hpp"

#include <optional>
#include <vector>

namespace mckay {

using QVec = std::vector<Rat>;

// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<QVec>& rows, int cols = -1);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    QVec row(int i) const;
    QVec col(int j) const;
    QMatrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QVec operator*(const QMatrix& a, const QVec& v);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);
int rank(QMatrix m);
// Basis of {v : m v = 0}.
std::vector<QVec> nullspace(QMatrix m);
// Some solution of m x = b, or nullopt.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);
Rat determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
// Exact symmetric pivot test (all leading principal minors alternate sign).
bool is_negative_definite(const QMatrix& q);

// Span bookkeeping: row-reduced basis of a subspace of Q^dim.
class Subspace {
public:
    explicit Subspace(int dim) : dim_(dim) {}
    int ambient_dim() const { return dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    // True if v was new.
    bool add(const QVec& v);
    bool contains(const QVec& v) const;
    const std::vector<QVec>& basis() const { return basis_; }

private:
    QVec reduce(QVec v) const;
    int dim_;
    std::vector<QVec> basis_;
    std::vector<int> pivots_;
};

} // namespace mckay
