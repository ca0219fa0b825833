#pragma once

#include "mckay/exactnum.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

// Exponents of (x, y, z). Negative entries are tolerated so the same type
// carries Laurent expressions in chart code; ideal operations reject them.
using Exp = std::array<int, 3>;

// Graded lex, z > x > y: larger elements sort first.
struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const;
};

bool grlex_less(const Exp& a, const Exp& b);

class Poly {
public:
    using Terms = std::map<Exp, Rat, GrlexGreater>;

    Poly() = default;
    Poly(const Rat& c);
    Poly(long c) : Poly(Rat(c)) {}
    static Poly monomial(const Exp& e, const Rat& c = 1);
    // 0 = x, 1 = y, 2 = z
    static Poly var(int k);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_polynomial() const;
    int nvars() const; // 3 if z occurs, else 2
    int total_degree() const;

    const Exp& lead_exp() const;
    const Rat& lead_coeff() const;
    Rat coeff(const Exp& e) const;
    Rat constant_term() const { return coeff({0, 0, 0}); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    Poly& add_term(const Exp& e, const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    Poly pow(int k) const;
    Poly monic() const;
    // Exchange the x and y exponents.
    Poly swap_xy() const;
    // Multiply by the Laurent monomial with exponent e.
    Poly shift(const Exp& e) const;
    // Substitute variable k by the value c.
    Poly eval_var(int k, const Rat& c) const;
    // Replace each variable by a polynomial (nonnegative exponents only).
    Poly substitute(const std::array<Poly, 3>& images) const;

    std::string to_string(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

private:
    Terms t_;
};

// Inverse of Poly::to_string: terms `c*x^a*y^b*z^c` joined by + or -.
Poly parse_poly(const std::string& text, const std::array<std::string, 3>& names = {"x", "y", "z"});

struct InfiniteDimensional : std::domain_error {
    using std::domain_error::domain_error;
};

class Ideal {
public:
    // Computes the reduced Groebner basis eagerly; safe to share afterwards.
    explicit Ideal(std::vector<Poly> generators);

    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<Poly>& basis() const { return basis_; }
    int nvars() const { return nvars_; }
    bool contains(const Poly& f) const;
    bool is_unit() const;
    friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis_ == b.basis_; }

private:
    std::vector<Poly> gens_;
    std::vector<Poly> basis_;
    int nvars_;
};

// Reduced grlex basis, monic, sorted by leading term ascending.
std::vector<Poly> buchberger(const std::vector<Poly>& gens);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Poly& f, const Ideal& I);

struct Staircase {
    std::vector<Exp> basis; // grlex ascending
    int dim = 0;
};

Staircase staircase(const Ideal& I);

// Univariate polynomials over Q, low degree first, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> c);
    static UPoly from_poly(const Poly& p, int var);
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }
    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
// Yun: squarefree coprime factors with multiplicities; product equals monic(p).
std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p);
std::vector<Rat> rational_roots(const UPoly& p);

} // namespace mckay
