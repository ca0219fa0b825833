#include "mckay/constel.hpp"

#include <doctest.h>

#include <random>

using namespace mckay;

namespace {

RClass cls(std::initializer_list<std::pair<std::string, int>> v)
{
    return RClass(v);
}

// C[x,y]/<xy, x^n + y^n> on the basis 1, x..x^n, y..y^{n-1}.
Constellation coinvariants(int n)
{
    Constellation F;
    F.n = n;
    F.origin = "coinvariants";
    const int d = 2 * n;
    auto xi = [](int k) { return k; };         // x^k, k = 0..n
    auto yi = [n](int k) { return n + k; };     // y^k, k = 1..n-1
    F.labels.push_back("1");
    F.weights.push_back(0);
    for (int k = 1; k <= n; ++k) {
        F.labels.push_back("x^" + std::to_string(k));
        F.weights.push_back(k % n);
    }
    for (int k = 1; k < n; ++k) {
        F.labels.push_back("y^" + std::to_string(k));
        F.weights.push_back(n - k);
    }
    F.x_action = QMatrix(d, d);
    F.y_action = QMatrix(d, d);
    F.tau_action = QMatrix(d, d);
    for (int k = 0; k < n; ++k)
        F.x_action(xi(k + 1), xi(k)) = 1;
    F.y_action(yi(1), 0) = 1;
    for (int k = 1; k + 1 < n; ++k)
        F.y_action(yi(k + 1), yi(k)) = 1;
    F.y_action(xi(n), yi(n - 1)) = -1;
    F.tau_action(0, 0) = 1;
    for (int k = 1; k < n; ++k) {
        F.tau_action(yi(k), xi(k)) = 1;
        F.tau_action(xi(k), yi(k)) = 1;
    }
    F.tau_action(xi(n), xi(n)) = -1;
    return F;
}

std::map<std::string, Rat> zero_theta(int n)
{
    std::map<std::string, Rat> t;
    for (const auto& c : char_table(dihedral(n)).irreps)
        t[c.name] = 0;
    return t;
}

} // namespace

TEST_CASE("witnesses are regular constellations")
{
    for (int n = 3; n <= 8; ++n)
        for (const auto& w : stratum_witnesses(n)) {
            CHECK(w.module.dim() == 2 * n);
            CHECK(structure_check(w.module));
            CHECK(regular_check(w.module));
            if (w.half) {
                CHECK(w.half->dim() == n);
                CHECK(structure_check(*w.half));
            }
        }
}

TEST_CASE("socle table agrees with the expected cases")
{
    for (int n = 3; n <= 10; ++n)
        for (const auto& r : socle_table(n)) {
            CHECK_MESSAGE(r.top_matches, n, " ", r.stratum);
            CHECK_MESSAGE(r.socle_matches, n, " ", r.stratum);
            CHECK(r.regular);
        }
    std::map<std::string, RClass> s4;
    for (const auto& r : socle_table(4))
        s4[r.stratum] = r.socle;
    CHECK(s4.at("E1") == cls({{"rho1", 1}}));
    CHECK(s4.at("E2") == cls({{"rho2", 1}, {"rho2'", 1}}));
    CHECK(s4.at("B1") == cls({{"rho2'", 1}}));
    CHECK(s4.at("B2") == cls({{"rho2", 1}}));
    CHECK(s4.at("off").empty());
    CHECK(socle_table(7, Rat(3)).size() == socle_table(7).size());
    CHECK_THROWS(stratum_witnesses(5, Rat(-1)));
    CHECK_THROWS(stratum_witnesses(5, Rat(0)));
}

TEST_CASE("stacky clusters at the fixed points")
{
    const auto p = ClusterPoint::make(2, 1, -1);
    CHECK(socle(stacky_cluster(4, p, Twist::delta1)) == cls({{"rho2'", 1}}));
    CHECK(socle(stacky_cluster(4, p, Twist::delta0)) == cls({{"rho2", 1}}));
    CHECK(socle(stacky_cluster(4, ClusterPoint::make(2, 1, 1), Twist::delta1)) == cls({{"rho2", 1}}));
    CHECK(stacky_cluster(4, p, Twist::delta1).dim() == 4);
    CHECK_THROWS(stacky_cluster(5, ClusterPoint::make(1, 1, 3), Twist::delta1));
}

TEST_CASE("coinvariant algebra")
{
    for (int n = 3; n <= 9; ++n) {
        const Constellation F = coinvariants(n);
        REQUIRE(structure_check(F));
        CHECK(regular_check(F));
        CHECK(top(F) == cls({{"rho0", 1}}));
        CHECK(socle(F) == cls({{"rho0'", 1}}));
        // Generated by 1: a theta negative only on rho0 cannot be destabilized.
        auto t = zero_theta(n);
        Rat total = 0;
        for (const auto& c : char_table(dihedral(n)).irreps)
            if (c.name != "rho0") {
                t[c.name] = 1;
                total += c.degree();
            }
        t["rho0"] = -total;
        const auto v = theta_check(F, StabilityParam::make(n, t), default_family(F));
        CHECK_FALSE(v.destabilized);
        CHECK(v.checked > 0);
        // The socle line destabilizes once its own weight is negative.
        auto s = zero_theta(n);
        s["rho0'"] = -1;
        s["rho0"] = 1;
        const StabilityParam neg = StabilityParam::make(n, s);
        const auto w = theta_check(F, neg, default_family(F));
        REQUIRE(w.destabilized);
        CHECK(destabilizer_is_sound(F, neg, w));
        CHECK(sgn(w.value) <= 0);
    }
}

TEST_CASE("theta validation")
{
    auto t = zero_theta(5);
    t["rho1"] = 1;
    CHECK_THROWS_AS(StabilityParam::make(5, t), InvalidTheta);
    t["rho0"] = -2;
    CHECK_NOTHROW(StabilityParam::make(5, t));
    CHECK(StabilityParam::make(5, t)(cls({{"rho1", 1}, {"rho0", 1}})) == -1);
    CHECK_THROWS_AS(StabilityParam::make(5, zero_theta(5), true), InvalidTheta);
    CHECK_FALSE(is_generic(StabilityParam::make(5, zero_theta(5))));
    auto missing = zero_theta(5);
    missing.erase("rho2");
    CHECK_THROWS_AS(StabilityParam::make(5, missing), InvalidTheta);
}

TEST_CASE("reported destabilizers are sound")
{
    std::mt19937 g(41);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int n = 3; n <= 7; ++n) {
        const auto irreps = char_table(dihedral(n)).irreps;
        for (const auto& w : stratum_witnesses(n))
            for (int trial = 0; trial < 6; ++trial) {
                std::map<std::string, Rat> t;
                Rat total = 0;
                for (std::size_t k = 1; k < irreps.size(); ++k) {
                    t[irreps[k].name] = c(g);
                    total += t[irreps[k].name] * irreps[k].degree();
                }
                t["rho0"] = -total;
                const StabilityParam th = StabilityParam::make(n, t);
                const auto v = theta_check(w.module, th, default_family(w.module));
                if (v.destabilized) {
                    CHECK(destabilizer_is_sound(w.module, th, v));
                    CHECK(sgn(v.value) <= 0);
                    CHECK(v.closure.basis.size() < static_cast<std::size_t>(w.module.dim()));
                }
            }
    }
}

TEST_CASE("closures are submodules")
{
    const CharTable t = char_table(dihedral(6));
    const auto ws = stratum_witnesses(6);
    for (const auto& w : ws)
        for (const auto& seed : default_family(w.module)) {
            const Closure c = submodule_closure(w.module, seed);
            CHECK(c.basis.size() <= static_cast<std::size_t>(w.module.dim()));
            Rat total = 0;
            for (const auto& [name, k] : c.cls)
                total += k * t.get(name).degree();
            CHECK(total == static_cast<int>(c.basis.size()));
        }
}
