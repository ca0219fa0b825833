#include "mckay/exactnum.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace mckay {

Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+')
        i = 1;
    bool slash = false;
    bool digit = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash || !digit)
                throw std::invalid_argument("bad rational: " + s);
            slash = true;
            digit = false;
        } else if (s[k] >= '0' && s[k] <= '9') {
            digit = true;
        } else {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    if (!digit)
        throw std::invalid_argument("bad rational: " + s);
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rat r;
    if (r.set_str(body, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (slash && r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

Rat make_rat(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

CycloElt::CycloElt(int order) : n_(order), c_(order)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
}

CycloElt::CycloElt(int order, std::vector<Rat> coeffs) : n_(order), c_(std::move(coeffs))
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    if (static_cast<int>(c_.size()) != order)
        throw std::invalid_argument("coefficient count differs from order");
}

CycloElt CycloElt::constant(int order, const Rat& c)
{
    CycloElt e(order);
    e.c_[0] = c;
    return e;
}

CycloElt CycloElt::monomial(int order, long k, const Rat& c)
{
    CycloElt e(order);
    long r = k % order;
    if (r < 0)
        r += order;
    e.c_[r] = c;
    return e;
}

bool CycloElt::is_zero() const
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

CycloElt& CycloElt::operator+=(const CycloElt& o)
{
    if (o.n_ != n_)
        throw OrderMismatch("cyclotomic orders differ");
    for (int k = 0; k < n_; ++k)
        c_[k] += o.c_[k];
    return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o)
{
    if (o.n_ != n_)
        throw OrderMismatch("cyclotomic orders differ");
    for (int k = 0; k < n_; ++k)
        c_[k] -= o.c_[k];
    return *this;
}

CycloElt& CycloElt::operator*=(const Rat& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

CycloElt CycloElt::operator-() const
{
    CycloElt r(*this);
    for (auto& x : r.c_)
        x = -x;
    return r;
}

bool operator==(const CycloElt& a, const CycloElt& b)
{
    if (a.n_ != b.n_)
        return false;
    for (int k = 0; k < a.n_; ++k)
        if (a.c_[k] != b.c_[k])
            return false;
    return true;
}

std::string CycloElt::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < n_; ++k) {
        if (sgn(c_[k]) == 0)
            continue;
        Rat c = c_[k];
        if (!first)
            out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            out << "-";
        first = false;
        Rat a = abs(c);
        if (k == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1)
            out << a.get_str() << "*";
        out << "t";
        if (k > 1)
            out << "^" << k;
    }
    if (first)
        out << "0";
    return out.str();
}

CycloElt cyc_mul(const CycloElt& a, const CycloElt& b)
{
    if (a.order() != b.order())
        throw OrderMismatch("cyclotomic orders differ");
    const int n = a.order();
    std::vector<Rat> out(n);
    std::vector<int> nzb;
    for (int j = 0; j < n; ++j)
        if (sgn(b[j]) != 0)
            nzb.push_back(j);
    for (int i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (int j : nzb) {
            int k = i + j;
            if (k >= n)
                k -= n;
            out[k] += a[i] * b[j];
        }
    }
    return CycloElt(n, std::move(out));
}

CycloElt conjugate(const CycloElt& a)
{
    const int n = a.order();
    std::vector<Rat> out(n);
    for (int k = 0; k < n; ++k)
        out[(n - k) % n] = a[k];
    return CycloElt(n, std::move(out));
}

Rat expect_rational(const CycloElt& a)
{
    for (int k = 1; k < a.order(); ++k)
        if (sgn(a[k]) != 0)
            throw NotRational("non-constant cyclotomic element: " + a.to_string());
    return a[0];
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> div_monic(const std::vector<long>& num, const std::vector<long>& den)
{
    std::vector<long> r = num;
    const std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        long c = r[k];
        q[k - dd] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            r[k - dd + j] -= c * den[j];
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (r[k] != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

} // namespace

const std::vector<long>& cyclotomic_poly(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    if (n < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = div_monic(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

CycloElt primitive_reduce(const CycloElt& a)
{
    const int n = a.order();
    const auto& phi = cyclotomic_poly(n);
    const int d = static_cast<int>(phi.size()) - 1;
    std::vector<Rat> r = a.coeffs();
    for (int k = n - 1; k >= d; --k) {
        if (sgn(r[k]) == 0)
            continue;
        Rat c = r[k];
        for (int j = 0; j <= d; ++j)
            if (phi[j] != 0)
                r[k - d + j] -= c * phi[j];
    }
    return CycloElt(n, std::move(r));
}

Rat primitive_value(const CycloElt& a)
{
    return expect_rational(primitive_reduce(a));
}

} // namespace mckay
