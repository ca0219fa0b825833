#include "mckay/polyring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mckay {

bool GrlexGreater::operator()(const Exp& a, const Exp& b) const
{
    int da = a[0] + a[1] + a[2];
    int db = b[0] + b[1] + b[2];
    if (da != db)
        return da > db;
    if (a[2] != b[2])
        return a[2] > b[2];
    if (a[0] != b[0])
        return a[0] > b[0];
    return a[1] > b[1];
}

bool grlex_less(const Exp& a, const Exp& b)
{
    return GrlexGreater{}(b, a);
}

Poly::Poly(const Rat& c)
{
    if (sgn(c) != 0)
        t_.emplace(Exp{0, 0, 0}, c);
}

Poly Poly::monomial(const Exp& e, const Rat& c)
{
    Poly p;
    if (sgn(c) != 0)
        p.t_.emplace(e, c);
    return p;
}

Poly Poly::var(int k)
{
    Exp e{0, 0, 0};
    e.at(k) = 1;
    return monomial(e);
}

bool Poly::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0, 0});
}

bool Poly::is_polynomial() const
{
    for (const auto& [e, c] : t_)
        if (e[0] < 0 || e[1] < 0 || e[2] < 0)
            return false;
    return true;
}

int Poly::nvars() const
{
    for (const auto& [e, c] : t_)
        if (e[2] != 0)
            return 3;
    return 2;
}

int Poly::total_degree() const
{
    if (t_.empty())
        return -1;
    const Exp& e = t_.begin()->first;
    return e[0] + e[1] + e[2];
}

const Exp& Poly::lead_exp() const
{
    if (t_.empty())
        throw std::domain_error("leading term of zero polynomial");
    return t_.begin()->first;
}

const Rat& Poly::lead_coeff() const
{
    if (t_.empty())
        throw std::domain_error("leading term of zero polynomial");
    return t_.begin()->second;
}

Rat Poly::coeff(const Exp& e) const
{
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
}

Poly& Poly::add_term(const Exp& e, const Rat& c)
{
    if (sgn(c) == 0)
        return *this;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            t_.erase(it);
    }
    return *this;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [e, c] : o.t_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [e, c] : o.t_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (sgn(s) == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly p;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            p.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return p;
}

Poly Poly::operator-() const
{
    Poly p(*this);
    for (auto& [e, c] : p.t_)
        c = -c;
    return p;
}

Poly Poly::pow(int k) const
{
    if (k < 0)
        throw std::invalid_argument("negative polynomial power");
    Poly r(1);
    Poly b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

Poly Poly::monic() const
{
    if (t_.empty())
        return *this;
    Poly p(*this);
    p *= 1 / lead_coeff();
    return p;
}

Poly Poly::swap_xy() const
{
    Poly p;
    for (const auto& [e, c] : t_)
        p.t_.emplace(Exp{e[1], e[0], e[2]}, c);
    return p;
}

Poly Poly::shift(const Exp& s) const
{
    Poly p;
    for (const auto& [e, c] : t_)
        p.t_.emplace(Exp{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
    return p;
}

Poly Poly::eval_var(int k, const Rat& v) const
{
    Poly p;
    for (const auto& [e, c] : t_) {
        if (e[k] < 0 && sgn(v) == 0)
            throw std::domain_error("evaluating a negative power at zero");
        Rat f = c;
        Rat base = e[k] >= 0 ? v : 1 / v;
        for (int i = 0; i < std::abs(e[k]); ++i)
            f *= base;
        Exp r = e;
        r[k] = 0;
        p.add_term(r, f);
    }
    return p;
}

Poly Poly::substitute(const std::array<Poly, 3>& images) const
{
    if (!is_polynomial())
        throw std::domain_error("substitution into a Laurent expression");
    Poly out;
    std::array<std::map<int, Poly>, 3> cache;
    auto power = [&](int k, int d) -> const Poly& {
        auto it = cache[k].find(d);
        if (it != cache[k].end())
            return it->second;
        return cache[k].emplace(d, images[k].pow(d)).first->second;
    };
    for (const auto& [e, c] : t_) {
        Poly term(c);
        for (int k = 0; k < 3; ++k)
            if (e[k] > 0)
                term = term * power(k, e[k]);
        out += term;
    }
    return out;
}

std::string Poly::to_string(const std::array<std::string, 3>& names) const
{
    if (t_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        const bool neg = sgn(c) < 0;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        Rat a = abs(c);
        const bool unit_mono = e == Exp{0, 0, 0};
        bool wrote = false;
        if (a != 1 || unit_mono) {
            out << a.get_str();
            wrote = true;
        }
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0)
                continue;
            if (wrote)
                out << "*";
            out << names[k];
            if (e[k] != 1)
                out << "^" << e[k];
            wrote = true;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    const std::array<std::string, 3>& names;
    std::size_t i = 0;

    void skip()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + what);
    }
    bool at_end()
    {
        skip();
        return i >= s.size();
    }
    std::string digits()
    {
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        return s.substr(b, i - b);
    }
    Rat number()
    {
        std::string num = digits();
        if (num.empty())
            fail("expected digits");
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::string den = digits();
            if (den.empty())
                fail("expected denominator");
            return parse_rat(num + "/" + den);
        }
        return parse_rat(num);
    }
    int variable()
    {
        int best = -1;
        std::size_t len = 0;
        for (int k = 0; k < 3; ++k) {
            const auto& nm = names[k];
            if (!nm.empty() && s.compare(i, nm.size(), nm) == 0 && nm.size() > len) {
                best = k;
                len = nm.size();
            }
        }
        if (best < 0)
            fail("expected variable");
        i += len;
        return best;
    }
    int exponent()
    {
        skip();
        if (i >= s.size() || s[i] != '^')
            return 1;
        ++i;
        skip();
        int sign = 1;
        if (i < s.size() && s[i] == '-') {
            sign = -1;
            ++i;
        }
        std::string d = digits();
        if (d.empty())
            fail("expected exponent");
        return sign * std::stoi(d);
    }
    Poly term(int sign)
    {
        skip();
        Rat c = sign;
        Exp e{0, 0, 0};
        bool need_factor = true;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c *= number();
            need_factor = false;
        }
        for (;;) {
            skip();
            if (!need_factor) {
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip();
                } else {
                    break;
                }
            }
            int v = variable();
            e[v] += exponent();
            need_factor = false;
        }
        return Poly::monomial(e, c);
    }
    Poly parse()
    {
        Poly p;
        skip();
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        p += term(sign);
        while (!at_end()) {
            if (s[i] != '+' && s[i] != '-')
                fail("expected + or -");
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            p += term(sign);
        }
        return p;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::array<std::string, 3>& names)
{
    Parser ps{text, names};
    if (ps.at_end())
        throw std::invalid_argument("empty polynomial");
    return ps.parse();
}

} // namespace mckay
