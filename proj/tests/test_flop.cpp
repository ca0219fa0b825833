#include "mckay/hilb.hpp"

#include <doctest.h>

using namespace mckay;

TEST_CASE("stage charts follow the union formula")
{
    CHECK(stage_chart_names(5, {1, std::nullopt}) == std::vector<std::string>{"U1''", "U2''", "U3'", "U4"});
    CHECK(stage_chart_names(5, {-1, std::nullopt}) == std::vector<std::string>{"U1'", "U2", "U3", "U4"});
    for (int n = 3; n <= 15; n += 2) {
        const int m = half_index(n);
        CHECK(flop_stages(n).size() == static_cast<std::size_t>(m + 1));
        CHECK(stage_chart_names(n, {m - 1, std::nullopt}).size() == static_cast<std::size_t>(m + 2));
    }
    CHECK_THROWS(stage_chart_names(5, {2, std::nullopt}));
    CHECK_THROWS(stage_chart_names(6, {0, std::nullopt}));
}

TEST_CASE("the flop of E_m replaces two charts")
{
    const auto d = stage_difference(5, {1, std::nullopt}, {0, std::nullopt});
    CHECK(d.first == std::vector<std::string>{"U2''", "U3'"});
    CHECK(d.second == std::vector<std::string>{"U2'", "U3"});
}

TEST_CASE("displayed gluings")
{
    for (int n = 3; n <= 12; ++n) {
        const auto charts = flop_charts(n);
        const auto shown = displayed_gluings(n);
        REQUIRE_FALSE(shown.empty());
        // (u, v, w) -> (uv, 1/v, vw) on U_m'' -> U_{m+1}'
        const LaurentPoly uv{{{1, 1, 0}, Rat(1)}}, vinv{{{0, -1, 0}, Rat(1)}}, vw{{{0, 1, 1}, Rat(1)}};
        CHECK(shown[0].expected == std::vector<LaurentPoly>{uv, vinv, vw});
        for (const auto& g : shown) {
            const auto t = flop_transition(n, charts.at(g.from), charts.at(g.to));
            REQUIRE(t);
            CHECK(t->coords == g.expected);
            CHECK(verify_flop_transition(n, charts.at(g.from), charts.at(g.to), *t));
        }
    }
}

TEST_CASE("odd binomial gluing")
{
    // z^2 = u^2 (v^2 - 4w) on U'_{m+1} -> U_{m+2}
    const auto charts = flop_charts(5);
    const auto t = flop_transition(5, charts.at("U3'"), charts.at("U4"));
    REQUIRE(t);
    CHECK_FALSE(t->monomial);
    const LaurentPoly want{{{2, 2, 0}, Rat(1)}, {{2, 0, 1}, Rat(-4)}};
    CHECK(t->coords[0] == want);
}

TEST_CASE("atlases verify and lose one curve per flop")
{
    for (int n = 3; n <= 10; ++n) {
        const int m = half_index(n);
        std::map<std::pair<int, int>, std::size_t> count;
        for (const auto& s : flop_stages(n)) {
            const FlopAtlas a = build_flop_atlas(n, s);
            CHECK(a.gluings_verified);
            CHECK(a.charts.size() == stage_chart_names(n, s).size());
            count[{s.i, s.j.value_or(0)}] = a.curve_tags.size();
        }
        CHECK(count.at({m - 1, n % 2 ? 0 : -1}) == static_cast<std::size_t>(m));
        for (const auto& [key, k] : count) {
            if (auto it = count.find({key.first - 1, key.second}); it != count.end())
                CHECK(it->second + 1 == k);
            if (auto it = count.find({key.first, key.second + 1}); it != count.end())
                CHECK(it->second == k);
        }
    }
}
