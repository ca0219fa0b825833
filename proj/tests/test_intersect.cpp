#include "mckay/intersect.hpp"

#include <doctest.h>

using namespace mckay;

namespace {

// Pullback of E_j along the fold: E~j + E~{n-j}, or E~m alone in the middle of an even chain.
QMatrix fold_oracle(int n)
{
    const int m = n / 2;
    auto pull = [n](int j) {
        std::vector<int> v(n - 1, 0);
        v[j - 1] += 1;
        if (2 * j != n)
            v[n - j - 1] += 1;
        return v;
    };
    auto chain = [](int a, int b) { return a == b ? -2 : (std::abs(a - b) == 1 ? 1 : 0); };
    QMatrix Q(m, m);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            const auto pa = pull(a), pb = pull(b);
            Rat s = 0;
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j)
                    s += pa[i] * pb[j] * chain(i, j);
            Q(a - 1, b - 1) = s / 2;
        }
    return Q;
}

CurveConfig fold(int n)
{
    return z2_fold(an_chain(n - 1), n);
}

} // namespace

TEST_CASE("A_k chains")
{
    CHECK(an_chain(0).size() == 0);
    const CurveConfig c1 = an_chain(1);
    CHECK(c1.Q(0, 0) == -2);
    const CurveConfig c = an_chain(4);
    CHECK(c.labels == std::vector<std::string>{"E~1", "E~2", "E~3", "E~4"});
    for (int i = 0; i < 4; ++i) {
        CHECK(c.K_dot[i] == 0);
        for (int j = 0; j < 4; ++j)
            CHECK(c.Q(i, j) == (i == j ? -2 : (std::abs(i - j) == 1 ? 1 : 0)));
    }
    CHECK(adjunction_holds(c));
}

TEST_CASE("fold intersection matrices")
{
    CHECK(fold(3).Q(0, 0) == -1);
    for (int n : {4, 5}) {
        const CurveConfig f = fold(n);
        REQUIRE(f.size() == 2);
        CHECK(f.Q(0, 0) == -2);
        CHECK(f.Q(0, 1) == 1);
        CHECK(f.Q(1, 1) == -1);
    }
    for (int n = 3; n <= 20; ++n) {
        const CurveConfig f = fold(n);
        const QMatrix want = fold_oracle(n);
        REQUIRE(f.size() == n / 2);
        for (int a = 0; a < f.size(); ++a) {
            for (int b = 0; b < f.size(); ++b)
                CHECK(f.Q(a, b) == want(a, b));
            // adjunction for smooth rational curves
            CHECK(f.K_dot[a] == -2 - f.Q(a, a));
        }
        CHECK(adjunction_holds(f));
    }
}

TEST_CASE("boundary meets only the last curve")
{
    for (int n = 3; n <= 12; ++n) {
        const BoundaryData b = fold_boundary(n);
        CHECK(b.components.size() == (n % 2 ? 1u : 2u));
        for (const auto& c : b.components)
            CHECK(c.coeff == Rat(1, 2));
        const std::string last = "E" + std::to_string(n / 2);
        for (const auto& p : b.points)
            CHECK(p.curves == std::vector<std::string>{last});
        for (const auto& a : solve_discrepancies(fold(n), b))
            CHECK(a == 0);
    }
    CHECK(fold_boundary(4).coeff("B2") == Rat(1, 2));
    CHECK_THROWS(fold_boundary(5).coeff("B1"));
}

TEST_CASE("contractions")
{
    const CurveConfig f = fold(5);
    const CurveConfig g = blow_down(f, f.index_of("E2"));
    REQUIRE(g.size() == 1);
    CHECK(g.labels[0] == "E1");
    CHECK(g.Q(0, 0) == -1);
    CHECK_THROWS_AS(blow_down(f, f.index_of("E1")), NotContractible);
    CHECK_THROWS_AS(blow_down(an_chain(3), 1), NotContractible);
    for (int n = 3; n <= 14; ++n) {
        const DominationChain ch = domination_chain(n);
        CHECK(ch.stages.size() == static_cast<std::size_t>(n / 2 + 1));
        CHECK(ch.unique_choice);
        CHECK(ch.stages.back().size() == 0);
        CHECK(ch.contracted.front() == "E" + std::to_string(n / 2));
        CHECK(ch.contracted.back() == "E1");
    }
}

TEST_CASE("blow-up discrepancies")
{
    const BoundaryData b = fold_boundary(5);
    CHECK(blowup_discrepancy(b, {{"B3", 1}}, {}) == Rat(1, 2));
    CHECK(blowup_discrepancy(b, {}, {}) == 1);
    CHECK(blowup_discrepancy(b, {{"B3", 2}}, {}) == 0);
    CHECK(blowup_discrepancy(b, {{"B3", 1}}, {Rat(0)}) == Rat(1, 2));
    CHECK(blowup_discrepancy(b, {}, {Rat(1, 2), Rat(1, 2)}) == 2);
}

TEST_CASE("maximality")
{
    for (int n = 3; n <= 10; ++n) {
        const CurveConfig f = fold(n);
        const BoundaryData b = fold_boundary(n);
        const auto cert = is_maximal(f, b);
        CHECK(cert.maximal);
        CHECK(cert.discrepancies_in_range);
        CHECK(cert.failures.empty());
        for (const auto& c : cert.candidates)
            CHECK(c.discrepancy > 0);
        CHECK_FALSE(is_maximal(CurveConfig{}, quotient_boundary(n)).maximal);
        const auto [g, gb] = blow_up_boundary_point(f, b, b.components[0].label);
        CHECK(g.size() == f.size() + 1);
        CHECK_FALSE(is_maximal(g, gb).maximal);
    }
}

TEST_CASE("dual graph")
{
    const std::string dot = dual_graph_dot(fold(5));
    CHECK(dot.rfind("graph dual {", 0) == 0);
    CHECK(dot.find("\"E1\" [label=\"E1\\n(0, -2)\"]") != std::string::npos);
    CHECK(dot.find("\"E2\" [label=\"E2\\n(0, -1)\"]") != std::string::npos);
    CHECK(dot.find("\"E1\" -- \"E2\"") != std::string::npos);
}
