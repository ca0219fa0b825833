#include "mckay/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mckay {

UPoly::UPoly(std::vector<Rat> c) : c_(std::move(c))
{
    trim();
}

void UPoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, int var)
{
    std::vector<Rat> c;
    for (const auto& [e, coef] : p.terms()) {
        for (int k = 0; k < 3; ++k)
            if (k != var && e[k] != 0)
                throw std::invalid_argument("polynomial is not univariate: " + p.to_string());
        if (e[var] < 0)
            throw std::invalid_argument("negative exponent in univariate conversion");
        if (static_cast<int>(c.size()) <= e[var])
            c.resize(e[var] + 1);
        c[e[var]] += coef;
    }
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const
{
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * Rat(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (c_.empty())
        return *this;
    UPoly r(*this);
    const Rat l = lead();
    for (auto& x : r.c_)
        x /= l;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] -= b.c_[i];
    return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const
{
    std::vector<Rat> c = c_;
    Poly p;
    for (std::size_t k = 0; k < c.size(); ++k)
        p.add_term({static_cast<int>(k), 0, 0}, c[k]);
    return p.to_string({var, "", ""});
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {UPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (sgn(r[k]) == 0)
            continue;
        Rat c = r[k] / b.lead();
        q[k - db] = c;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] -= c * b.coeffs()[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<std::pair<UPoly, int>> out;
    const UPoly f = p.monic();
    const UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        UPoly g = gcd(b, d);
        if (g.degree() >= 1)
            out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v)
{
    v = abs(v);
    std::vector<mpz_class> out;
    if (v == 0)
        return out;
    if (v > mpz_class(1000000000))
        throw std::domain_error("coefficient too large for rational root search");
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

} // namespace

std::vector<Rat> rational_roots(const UPoly& p)
{
    std::set<Rat> roots;
    if (p.is_zero())
        throw std::domain_error("every value is a root of the zero polynomial");
    std::vector<Rat> c = p.coeffs();
    std::size_t low = 0;
    while (low < c.size() && sgn(c[low]) == 0)
        ++low;
    if (low > 0)
        roots.insert(Rat(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    if (c.size() >= 2) {
        mpz_class den = 1;
        for (const auto& x : c)
            den = lcm(den, mpz_class(x.get_den()));
        std::vector<mpz_class> z;
        for (const auto& x : c)
            z.push_back(mpz_class(x * den));
        const UPoly q(c);
        for (const auto& num : divisors(z.front()))
            for (const auto& dd : divisors(z.back()))
                for (int s : {1, -1}) {
                    Rat cand(num * s, dd);
                    cand.canonicalize();
                    if (sgn(q.eval(cand)) == 0)
                        roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

} // namespace mckay
