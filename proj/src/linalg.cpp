#include "mckay/linalg.hpp"

#include <stdexcept>

namespace mckay {

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, int cols)
{
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    QMatrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

QVec QMatrix::row(int i) const
{
    QVec v(c_);
    for (int j = 0; j < c_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

QVec QMatrix::col(int j) const
{
    QVec v(r_);
    for (int i = 0; i < r_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool QMatrix::is_symmetric() const
{
    if (r_ != c_)
        return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.c_ != b.r_)
        throw std::invalid_argument("matrix shape mismatch");
    QMatrix p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Rat& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (int j = 0; j < b.c_; ++j)
                if (sgn(b(k, j)) != 0)
                    p(i, j) += x * b(k, j);
        }
    return p;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_)
        throw std::invalid_argument("matrix shape mismatch");
    QMatrix s = a;
    for (std::size_t k = 0; k < s.a_.size(); ++k)
        s.a_[k] += b.a_[k];
    return s;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_)
        throw std::invalid_argument("matrix shape mismatch");
    QMatrix s = a;
    for (std::size_t k = 0; k < s.a_.size(); ++k)
        s.a_[k] -= b.a_[k];
    return s;
}

QVec operator*(const QMatrix& a, const QVec& v)
{
    if (static_cast<int>(v.size()) != a.c_)
        throw std::invalid_argument("matrix/vector shape mismatch");
    QVec out(a.r_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j)
            if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0)
                out[i] += a(i, j) * v[j];
    return out;
}

bool operator==(const QMatrix& a, const QMatrix& b)
{
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

std::vector<int> rref(QMatrix& m)
{
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(QMatrix m)
{
    return static_cast<int>(rref(m).size());
}

std::vector<QVec> nullspace(QMatrix m)
{
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<QVec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        QVec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m(static_cast<int>(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    QVec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = aug(static_cast<int>(r), m.cols());
    return x;
}

Rat determinant(QMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            Rat f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<QMatrix> inverse(const QMatrix& m)
{
    const int n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
        return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

bool is_negative_definite(const QMatrix& q)
{
    if (!q.is_symmetric())
        return false;
    // LDL^T without pivoting: -q is positive definite iff every pivot of -q is positive.
    const int n = q.rows();
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = -q(i, j);
    for (int k = 0; k < n; ++k) {
        if (sgn(a(k, k)) <= 0)
            return false;
        for (int i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0)
                continue;
            Rat f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

QVec Subspace::reduce(QVec v) const
{
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Rat& c = v[pivots_[b]];
        if (sgn(c) == 0)
            continue;
        Rat f = c;
        for (int j = 0; j < dim_; ++j)
            if (sgn(basis_[b][j]) != 0)
                v[j] -= f * basis_[b][j];
    }
    return v;
}

bool Subspace::add(const QVec& v)
{
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("vector length mismatch");
    QVec r = reduce(v);
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (sgn(r[j]) != 0) {
            p = j;
            break;
        }
    if (p < 0)
        return false;
    Rat inv = 1 / r[p];
    for (auto& x : r)
        x *= inv;
    // Keep the basis fully reduced against the new pivot.
    for (auto& b : basis_) {
        if (sgn(b[p]) == 0)
            continue;
        Rat f = b[p];
        for (int j = 0; j < dim_; ++j)
            if (sgn(r[j]) != 0)
                b[j] -= f * r[j];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool Subspace::contains(const QVec& v) const
{
    QVec r = reduce(v);
    for (const auto& x : r)
        if (sgn(x) != 0)
            return false;
    return true;
}

} // namespace mckay
