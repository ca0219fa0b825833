#include "mckay/hilb.hpp"

#include <doctest.h>

#include <random>

using namespace mckay;

namespace {

Poly P(const std::string& s)
{
    return parse_poly(s);
}

// Monomials outside the ideal's leading terms, found by brute force over a box.
int brute_dim(const Ideal& I, int box)
{
    int count = 0;
    for (int a = 0; a <= box; ++a)
        for (int b = 0; b <= box; ++b) {
            bool divisible = false;
            for (const auto& g : I.basis()) {
                const Exp& e = g.lead_exp();
                divisible = divisible || (e[0] <= a && e[1] <= b);
            }
            count += !divisible;
        }
    return count;
}

} // namespace

TEST_CASE("cluster ideals")
{
    CHECK(cluster_ideal(4, ClusterPoint::make(2, 1, -1)) == Ideal({P("x^3"), P("y^3"), P("x*y"), P("x^2 + y^2")}));
    const Ideal I = cluster_ideal(5, ClusterPoint::make(2, 0, 1));
    CHECK(I == Ideal({P("y^3"), P("x^3"), P("x*y")}));
    CHECK(staircase(I).dim == 5);
    for (int n = 3; n <= 9; ++n) {
        const Ideal J = cluster_ideal(n, ClusterPoint::make(1, 1, 0));
        CHECK(J == Ideal({P("x"), Poly::monomial({0, n, 0})}));
        CHECK(staircase(J).dim == n);
    }
    CHECK(ClusterPoint::make(2, 3, -6).to_string() == "I_2(1:-2)");
    CHECK_THROWS(ClusterPoint::make(1, 0, 0));
    CHECK_THROWS(cluster_ideal(4, ClusterPoint::make(4, 1, 1)));
}

TEST_CASE("cluster dimension is n at random points")
{
    std::mt19937 g(17);
    std::uniform_int_distribution<int> c(-9, 9), d(1, 5);
    for (int n = 3; n <= 10; ++n) {
        std::uniform_int_distribution<int> idx(1, n - 1);
        for (int trial = 0; trial < 12; ++trial) {
            Rat a = make_rat(c(g), d(g)), b = make_rat(c(g), d(g));
            if (sgn(a) == 0 && sgn(b) == 0)
                a = 1;
            const Ideal I = cluster_ideal(n, ClusterPoint::make(idx(g), a, b));
            CHECK(staircase(I).dim == n);
            CHECK(brute_dim(I, n + 2) == n);
            const Ideal U = universal_ideal(n, idx(g), make_rat(c(g), d(g)), make_rat(c(g), d(g)));
            CHECK(staircase(U).dim == n);
        }
    }
}

TEST_CASE("the swap action")
{
    CHECK(z2_image(5, ClusterPoint::make(1, 1, 3)) == ClusterPoint::make(4, 3, 1));
    CHECK(z2_image(4, ClusterPoint::make(2, 1, -1)) == ClusterPoint::make(2, 1, -1));
    CHECK(z2_image(5, ClusterPoint::make(2, 0, 1)) == ClusterPoint::make(3, 1, 0));
    CHECK(cluster_ideal(5, ClusterPoint::make(2, 0, 1)) == cluster_ideal(5, ClusterPoint::make(3, 1, 0)));
    for (int n = 3; n <= 10; ++n)
        for (int i = 1; i < n; ++i)
            CHECK(z2_image_certified(n, ClusterPoint::make(i, 2, 5)));
}

TEST_CASE("fixed points")
{
    auto pts = [](int n) {
        std::vector<std::string> v;
        for (const auto& f : fixed_points(n))
            v.push_back(f.point.to_string());
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(pts(3) == std::vector<std::string>{"I_1(0:1)"});
    CHECK(pts(4) == std::vector<std::string>{"I_2(1:-1)", "I_2(1:1)"});
    CHECK(pts(5) == std::vector<std::string>{"I_2(0:1)"});
    for (int n = 3; n <= 16; ++n)
        CHECK(fixed_points(n).size() == (n % 2 ? 1u : 2u));
}

TEST_CASE("invariants")
{
    CHECK(to_invariants(5, P("x^5 + y^5")) == P("y"));
    CHECK(to_invariants(4, P("x^2*y^2")) == P("x^2"));
    CHECK(to_invariants(3, P("x^6 + y^6")) == P("y^2 - 2*x^3"));
    CHECK_THROWS_AS(to_invariants(4, P("x")), std::domain_error);
    CHECK_THROWS_AS(to_invariants(4, P("x^4 - y^4")), std::domain_error);
    CHECK(half_index(7) == 3);
    CHECK(half_index(8) == 4);
    CHECK(x1_divisor(3) == "E~3");
    CHECK(y_divisor(2) == "E2");
}

TEST_CASE("boundary curves")
{
    for (int n = 3; n <= 16; ++n) {
        CHECK(boundary_identity_holds(n));
        const auto b = boundary_equations(n);
        CHECK(b.size() == (n % 2 ? 1u : 2u));
        const int m = half_index(n);
        for (const auto& eq : b) {
            const auto dots = folded_pairing(n, eq.equation);
            for (int a = 0; a < m; ++a)
                CHECK(dots[a] == (a + 1 < m ? 0 : (n % 2 ? 2 : 1)));
        }
    }
    // Strict transforms on the middle chart of X1 (even n): squared lines.
    for (int n : {4, 6, 8}) {
        const int m = n / 2;
        for (const auto& st : boundary_strict_transforms(n)) {
            if (st.chart != "U" + std::to_string(m))
                continue;
            CHECK(st.meets);
            CHECK(st.pullback.strict == (st.label == "B1" ? P("x^2 + 2*x + 1") : P("x^2 - 2*x + 1")));
        }
    }
    for (int n : {3, 5, 7}) {
        for (const auto& st : boundary_strict_transforms(n))
            if (st.chart == "U1") {
                CHECK_FALSE(st.meets);
                CHECK(st.constant_certificate);
                CHECK(st.constant_term == 1);
            }
        CHECK(boundary_named_charts(n) == std::vector<int>{half_index(n), half_index(n) + 1});
    }
}

TEST_CASE("pairings on X1 and Y1")
{
    // x^5 - y^5 passes through the middle of the chain.
    CHECK(x1_pairing(5, P("x^5 - y^5")) == std::vector<int>{0, 1, 1, 0});
    CHECK(x1_pairing(4, P("x^4")) == std::vector<int>{4, 0, 0});
    CHECK(folded_pairing(5, P("x^5 - y^5")) == std::vector<Rat>{0, 1});
    CHECK(y1_atlas(5).size() == 3);
}
