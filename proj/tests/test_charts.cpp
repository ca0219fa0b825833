#include "mckay/charts.hpp"
#include "mckay/hilb.hpp"
#include "mckay/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace mckay;

namespace {

Poly P(const std::string& s)
{
    return parse_poly(s);
}

// Rational transition B A^{-1} between square charts; integral iff a monomial gluing exists.
bool integral_transition(const Chart& a, const Chart& b)
{
    const int d = a.dim();
    QMatrix A(d, d), B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            A(i, j) = a.coords[i][j];
            B(i, j) = b.coords[i][j];
        }
    const auto inv = inverse(A);
    REQUIRE(inv);
    const QMatrix T = B * *inv;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!is_integer(T(i, j)))
                return false;
    return true;
}

} // namespace

TEST_CASE("X1 charts are smooth on the invariant lattice")
{
    for (int n = 2; n <= 12; ++n) {
        const HilbAtlas a = x1_atlas(n);
        REQUIRE(a.charts.size() == static_cast<std::size_t>(n));
        for (const auto& c : a.charts) {
            CHECK(c.lattice_index == n);
            CHECK(abs(chart_det(c)) == n);
            CHECK(chart_is_smooth(c));
        }
        for (int k = 0; k + 1 < n; ++k)
            CHECK(verify_gluing(a.charts[k], a.charts[k + 1]));
        CHECK(verify_gluing(a.charts[0], a.charts[0]));
        if (n >= 3)
            CHECK_FALSE(verify_gluing(a.charts[0], a.charts[2]));
    }
}

TEST_CASE("monomial expression in a chart")
{
    const Chart U2 = x1_atlas(5).charts[1]; // x^2/y^3, y^4/x
    CHECK(U2.coords == IMat{{2, -3}, {-1, 4}});
    CHECK(express_monomial(U2, {2, 2}) == IVec{2, 2});
    CHECK(express_monomial(U2, {5, 0}) == IVec{4, 3});
    CHECK_THROWS_AS(express_monomial(U2, {1, 0}), NoIntegerSolution);
    Chart id;
    id.name = "id";
    id.atoms = plane_atoms();
    id.coords = {{1, 0}, {0, 1}};
    CHECK(express_monomial(id, {3, 7}) == IVec{3, 7});
}

TEST_CASE("pullback and re-expansion are inverse")
{
    std::mt19937 g(9);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    for (int n = 3; n <= 7; ++n)
        for (const auto& ch : x1_atlas(n).charts)
            for (int trial = 0; trial < 8; ++trial) {
                // Z_n-invariant: combinations of (xy)^a x^{nb} y^{nc}
                Poly f;
                for (int k = 0; k < 3; ++k) {
                    const int a = e(g), b = e(g) % 2, cc = e(g) % 2;
                    f.add_term({a + n * b, a + n * cc, 0}, Rat(c(g)));
                }
                if (f.is_zero())
                    continue;
                const Pullback p = pullback_orders(ch, f);
                CHECK(reexpand(ch, p) == f);
            }
    const Chart U1 = x1_atlas(3).charts[0];
    const Pullback p = pullback_orders(U1, P("y^3"));
    CHECK(p.strict == Poly(1));
    CHECK(p.orders.at(1) == 1);
}

TEST_CASE("axis restriction")
{
    const AxisMeeting sq = restrict_to_axis(P("x^2 + 2*x + 1"), 1);
    CHECK(sq.total == 2);
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].multiplicity == 2);
    CHECK(sq.factors[0].rational_points == std::vector<Rat>{Rat(-1)});
    // u^2 - 4s on {s = 0}: tangency at the origin.
    CHECK(order_at_origin(P("x^2 - 4*y"), 1) == 2);
    CHECK(restrict_to_axis(P("x^2 - 4*y"), 1).total == 2);
    CHECK(local_intersection({"c", P("x - 1"), "line"}, 1) == 1);
    // An irreducible quadratic counts as two geometric points.
    const AxisMeeting q = restrict_to_axis(P("x^2 + 1 + y"), 1);
    CHECK(q.total == 2);
    CHECK(q.factors[0].rational_points.empty());
    CHECK_THROWS_AS(restrict_to_axis(P("x*y"), 1), CurveContainsAxis);
}

TEST_CASE("wall shape")
{
    CHECK(wall_axis({{-1, 0}, {2, 1}}) == 0);
    CHECK(wall_axis({{1, 1, 0}, {0, -1, 0}, {0, 1, 1}}) == 1);
    CHECK_FALSE(wall_axis({{1, 0}, {0, 1}}).has_value());
    CHECK(laurent_string({1, -2}, {"x", "y"}) == "x*y^-2");
    CHECK(laurent_string({0, 0}, {"x", "y"}) == "1");
}

TEST_CASE("flop charts: adjacency")
{
    const auto c = flop_charts(5);
    CHECK(verify_gluing(c.at("U2''"), c.at("U3'")));
    CHECK(verify_gluing(c.at("U1''"), c.at("U1''")));
    CHECK_FALSE(verify_gluing(c.at("U1''"), c.at("U3'")));
    // Integral change of coordinates, but not across a single wall.
    CHECK(integral_transition(c.at("U1''"), c.at("U3'")));
    const auto t = monomial_transition(c.at("U1''"), c.at("U3'"));
    REQUIRE(t);
    CHECK_FALSE(wall_axis(*t).has_value());
    CHECK(integral_transition(c.at("U2''"), c.at("U3'")));
}
