#include "mckay/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace mckay;

namespace {

Poly P(const std::string& s)
{
    return parse_poly(s);
}

std::vector<Exp> leads(const Ideal& I)
{
    std::vector<Exp> v;
    for (const auto& g : I.basis())
        v.push_back(g.lead_exp());
    std::sort(v.begin(), v.end());
    return v;
}

Poly random_poly(std::mt19937& g, int deg)
{
    std::uniform_int_distribution<int> c(-4, 4), e(0, deg);
    Poly p;
    for (int k = 0; k < 4; ++k)
        p.add_term({e(g), e(g), 0}, Rat(c(g)));
    return p;
}

// Dimension of C[x,y]/I from linear algebra on all monomials of degree <= d:
// rank of the truncated ideal span versus the monomial count.
int truncated_codim(const Ideal& I, int d)
{
    std::vector<Exp> mons;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            mons.push_back({a, b, 0});
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : I.generators())
        for (const auto& m : mons) {
            const Poly h = g * Poly::monomial(m);
            if (h.total_degree() > d)
                continue;
            std::vector<Rat> r;
            for (const auto& mm : mons)
                r.push_back(h.coeff(mm));
            rows.push_back(r);
        }
    // Gaussian elimination rank.
    int rank = 0;
    const int cols = static_cast<int>(mons.size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (sgn(rows[r][c]) != 0)
                piv = r;
        if (piv < 0)
            continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && sgn(rows[r][c]) != 0) {
                const Rat f = rows[r][c] / rows[rank][c];
                for (int k = 0; k < cols; ++k)
                    rows[r][k] -= f * rows[rank][k];
            }
        ++rank;
    }
    return cols - rank;
}

} // namespace

TEST_CASE("parse and print round trip")
{
    for (const std::string s : {"x^2*y - 3/2*y^3 + 1", "-x", "z*x*y + 2", "0"}) {
        const Poly p = P(s);
        CHECK(P(p.to_string()) == p);
    }
    CHECK(P("y + x").to_string() == "x + y");
    CHECK(P("x^2 - y^3").lead_exp() == Exp{0, 3, 0});
    CHECK_THROWS(P("x^"));
}

TEST_CASE("Groebner bases")
{
    CHECK(Ideal({P("x"), P("y")}).basis() == std::vector<Poly>{P("y"), P("x")});
    CHECK(Ideal({P("x - y"), P("y")}) == Ideal({P("x"), P("y")}));
    // I_2(1:1) for n = 5: leading terms y^3, x^3, xy.
    const Ideal I({P("x^2 - y^3"), P("x^3"), P("x*y"), P("y^4")});
    CHECK(leads(I) == std::vector<Exp>{{0, 3, 0}, {1, 1, 0}, {3, 0, 0}});
}

TEST_CASE("normal forms")
{
    const Ideal I({P("x^2 - y^3"), P("x^3"), P("x*y"), P("y^4")});
    CHECK(normal_form(P("x^2"), Ideal({P("x"), P("y")})).is_zero());
    CHECK(normal_form(P("y^3"), I) == P("x^2"));
    CHECK(normal_form(Poly(1), I) == Poly(1));
    std::mt19937 g(3);
    for (int k = 0; k < 50; ++k) {
        const Poly f = random_poly(g, 5), h = random_poly(g, 5);
        const Poly nf = normal_form(f, I);
        CHECK(normal_form(nf, I) == nf);
        CHECK(normal_form(f - nf, I).is_zero());
        CHECK(normal_form(f + h, I) == nf + normal_form(h, I));
        CHECK(normal_form(f * P("x*y"), I).is_zero());
    }
}

TEST_CASE("staircases")
{
    const Staircase s = staircase(Ideal({P("x"), P("y")}));
    CHECK(s.dim == 1);
    const Ideal I({P("x^2 - y^3"), P("x^3"), P("x*y"), P("y^4")});
    const Staircase t = staircase(I);
    CHECK(t.dim == 5);
    CHECK(t.basis == std::vector<Exp>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 2, 0}, {2, 0, 0}});
    CHECK(truncated_codim(I, 6) == 5);
    CHECK_THROWS_AS(staircase(Ideal({P("x^2")})), InfiniteDimensional);
}

TEST_CASE("univariate tools")
{
    const UPoly p = UPoly::from_poly(P("x^3 + 2*x^2 + x"), 0);
    const auto f = squarefree_factors(p);
    UPoly prod({Rat(1)});
    for (const auto& [q, k] : f)
        for (int i = 0; i < k; ++i)
            prod = prod * q;
    CHECK(prod == p.monic());
    CHECK(rational_roots(UPoly::from_poly(P("2*x^2 - 3*x + 1"), 0)) == std::vector<Rat>{Rat(1, 2), Rat(1)});
    CHECK(rational_roots(UPoly::from_poly(P("x^2 + 1"), 0)).empty());
    CHECK(gcd(UPoly::from_poly(P("x^2 - 1"), 0), UPoly::from_poly(P("x^2 + 2*x + 1"), 0)) ==
          UPoly::from_poly(P("x + 1"), 0));
    std::mt19937 g(5);
    std::uniform_int_distribution<int> r(-6, 6);
    for (int k = 0; k < 30; ++k) {
        const Rat a(r(g)), b(r(g));
        const UPoly q = UPoly({-a, Rat(1)}) * UPoly({-b, Rat(1)}) * UPoly({Rat(1), Rat(0), Rat(1)});
        const auto roots = rational_roots(q);
        CHECK(std::find(roots.begin(), roots.end(), a) != roots.end());
        CHECK(std::find(roots.begin(), roots.end(), b) != roots.end());
        for (const auto& x : roots)
            CHECK(sgn(q.eval(x)) == 0);
    }
}
