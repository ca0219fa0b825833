#include "mckay/taut.hpp"

#include <doctest.h>

using namespace mckay;

namespace {

DivisorClass D(std::initializer_list<std::pair<const std::string, Rat>> v)
{
    return DivisorClass(v);
}

std::map<std::string, DivisorClass> c1s(const TautLedger& t)
{
    std::map<std::string, DivisorClass> out;
    for (const auto& e : t.entries)
        out[e.rep] = e.c1;
    return out;
}

std::vector<Rat> unit(int m, int k)
{
    std::vector<Rat> v(m, Rat(0));
    v[k - 1] = 1;
    return v;
}

} // namespace

TEST_CASE("coarse ledger")
{
    const auto odd = c1s(build_ledger(5, Space::coarse));
    CHECK(odd.at("rho0").empty());
    CHECK(odd.at("rho0'") == D({{"L", 1}}));
    CHECK(odd.at("rho2") == D({{"D2", 1}, {"L", 1}}));
    const auto even = c1s(build_ledger(6, Space::coarse));
    CHECK(even.at("rho3") == D({{"B1", 1}, {"L", 1}}));
    CHECK(even.at("rho3'") == D({{"B2", 1}, {"L", 1}}));
    for (int n = 3; n <= 12; ++n) {
        const TautLedger t = build_ledger(n, Space::coarse);
        CHECK(t.k == n / 2);
        for (const auto& e : t.entries) {
            CHECK(e.rank == (e.rep == "rho0" || e.rep == "rho0'" || e.c1.count("B1") || e.c1.count("B2") ? 1 : 2));
            if (e.rank == 2)
                CHECK(e.pieces.size() == 2);
        }
    }
}

TEST_CASE("stack ledger")
{
    const auto odd = c1s(build_ledger(5, Space::stack));
    CHECK(odd.at("rho0'") == D({{"B3", Rat(1, 2)}, {"D", -1}}));
    CHECK(odd.at("rho1") == D({{"B3", Rat(1, 2)}, {"D", -1}, {"D1", 1}}));
    const auto even = c1s(build_ledger(4, Space::stack));
    CHECK(even.at("rho0'") == D({{"B1", Rat(1, 2)}, {"B2", Rat(-1, 2)}}));
    CHECK(even.at("rho2") == D({{"B1", Rat(1, 2)}}));
    CHECK(even.at("rho2'") == D({{"B2", Rat(1, 2)}}));
    CHECK(to_string(even.at("rho0'")) == "(1/2)B1 - (1/2)B2");
}

TEST_CASE("two-torsion of the determinant class")
{
    for (int n = 3; n <= 12; ++n) {
        const PairingTable p = pairing_table(n);
        const DivisorClass det = c1s(build_ledger(n, Space::stack)).at("rho0'");
        CHECK(torsion_check(det, p));
        for (int j = 1; j <= n / 2; ++j)
            CHECK_FALSE(torsion_check(D({{"E" + std::to_string(j), 1}}), p));
        // D_j is dual to E_j.
        for (int j = 1; j < (n + 1) / 2; ++j)
            CHECK(pair_with_curves(D({{"D" + std::to_string(j), 1}}), p) == unit(n / 2, j));
        std::vector<Rat> l = unit(n / 2, n / 2);
        l.back() = -1;
        CHECK(pair_with_curves(D({{"L", 1}}), p) == l);
    }
}

TEST_CASE("pushforward identities")
{
    for (int n = 3; n <= 16; ++n)
        for (const auto& l : pushforward_identities(n))
            CHECK_MESSAGE(l.holds, l.text);
}

TEST_CASE("FM images")
{
    auto find = [](const std::vector<FMEntry>& t, const std::string& r) {
        for (const auto& e : t)
            if (e.rep == r)
                return e;
        FAIL("missing " << r);
        return FMEntry{};
    };
    const auto t4 = fm_table(4);
    CHECK(find(t4, "rho0").support == "F");
    CHECK(find(t4, "rho0").shift == 0);
    CHECK(find(t4, "rho1").support == "E1");
    CHECK(find(t4, "rho1").shift == 1);
    CHECK(find(t4, "rho2'").support == "E2");
    CHECK(find(t4, "rho2'").twist == "-B2");
    CHECK(find(t4, "rho2").twist == "-B1");
    const auto t5 = fm_table(5);
    CHECK(find(t5, "rho2").twist == "-B3");
    CHECK(find(t5, "rho0'").twist == "B1-B2");
    for (int n = 3; n <= 12; ++n)
        CHECK(fm_table(n).size() == char_table(dihedral(n)).irreps.size());
    auto bad = fm_table_raw(6);
    for (auto& e : bad)
        if (e.rep == "rho1")
            e.support = "E2";
    CHECK_THROWS_AS(fm_cross_check(6, bad, socle_table(6)), CrossCheckFailure);
}

TEST_CASE("reference divisors")
{
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const auto r = refdivisor_certify(n, k);
            CHECK(r.transversal);
            CHECK(r.pairings == unit(n / 2, k));
            // independent re-derivation through the folded pairing
            const Poly eq = parse_poly(r.equation);
            CHECK(folded_pairing(n, eq) == unit(n / 2, k));
        }
    const auto r = refdivisor_certify(5, 1);
    CHECK(r.equation == "x^5 + y^5 - x*y");
    CHECK(r.boundary_note.has_value());
    CHECK_FALSE(refdivisor_certify(6, 3).boundary_note.has_value());
    CHECK_THROWS(refdivisor_certify(5, 0));
    CHECK_THROWS(refdivisor_certify(5, 3));
}
