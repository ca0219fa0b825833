#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

using Rat = mpq_class;

struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotRational : std::domain_error {
    using std::domain_error::domain_error;
};

// "3", "-1/2"; whitespace is not accepted.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
bool is_integer(const Rat& r);
// num/den in lowest terms.
Rat make_rat(long num, long den);

// Element of Q[t]/(t^n - 1).
class CycloElt {
public:
    explicit CycloElt(int order);
    CycloElt(int order, std::vector<Rat> coeffs);

    static CycloElt constant(int order, const Rat& c);
    // c * t^k, k taken mod order.
    static CycloElt monomial(int order, long k, const Rat& c = 1);

    int order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](int k) const { return c_[k]; }
    bool is_zero() const;

    CycloElt& operator+=(const CycloElt& o);
    CycloElt& operator-=(const CycloElt& o);
    CycloElt& operator*=(const Rat& s);

    friend CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
    friend CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
    friend CycloElt operator*(CycloElt a, const Rat& s) { return a *= s; }
    friend CycloElt operator*(const Rat& s, CycloElt a) { return a *= s; }
    CycloElt operator-() const;

    friend bool operator==(const CycloElt& a, const CycloElt& b);

    std::string to_string() const;

private:
    int n_;
    std::vector<Rat> c_;
};

CycloElt cyc_mul(const CycloElt& a, const CycloElt& b);
inline CycloElt operator*(const CycloElt& a, const CycloElt& b) { return cyc_mul(a, b); }

// t -> t^{n-1}
CycloElt conjugate(const CycloElt& a);

// coeffs[0] when every other coefficient vanishes, NotRational otherwise.
Rat expect_rational(const CycloElt& a);

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
// Obtained by exact division of t^n - 1 by the lower cyclotomic factors.
const std::vector<long>& cyclotomic_poly(int n);

// Canonical representative modulo Phi_n: the image of a under evaluation at
// a primitive n-th root of unity. Rational values become constants.
CycloElt primitive_reduce(const CycloElt& a);

// Value at a primitive root; NotRational if that value is irrational.
Rat primitive_value(const CycloElt& a);

} // namespace mckay
