#include "mckay/repr.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace mckay;

namespace {

std::complex<double> value(const CycloElt& a)
{
    std::complex<double> s = 0;
    for (int k = 0; k < a.order(); ++k)
        s += a[k].get_d() * std::polar(1.0, 2 * M_PI * k / a.order());
    return s;
}

std::vector<std::string> names(const CharTable& t)
{
    std::vector<std::string> v;
    for (const auto& c : t.irreps)
        v.push_back(c.name);
    return v;
}

} // namespace

TEST_CASE("irreducible lists")
{
    CHECK(names(char_table(dihedral(4))) == std::vector<std::string>{"rho0", "rho0'", "rho1", "rho2", "rho2'"});
    CHECK(names(char_table(dihedral(5))) == std::vector<std::string>{"rho0", "rho0'", "rho1", "rho2"});
    CHECK(names(char_table(cyclic(3))) == std::vector<std::string>{"eps0", "eps1", "eps2"});
    for (int n = 3; n <= 30; ++n)
        CHECK(char_table(dihedral(n)).irreps.size() == static_cast<std::size_t>(n % 2 ? (n + 3) / 2 : n / 2 + 3));
}

TEST_CASE("class structure")
{
    for (int n = 3; n <= 20; ++n) {
        const auto cl = conj_classes(dihedral(n));
        int total = 0, refl = 0;
        for (const auto& c : cl) {
            total += c.size;
            refl += c.kind == ConjClass::tau_class;
        }
        CHECK(total == 2 * n);
        CHECK(refl == (n % 2 ? 1 : 2));
    }
}

TEST_CASE("character values against 2 cos(2 pi j k / n)")
{
    for (int n = 3; n <= 16; ++n) {
        const CharTable t = char_table(dihedral(n));
        for (int j = 1; 2 * j < n; ++j) {
            const Character& chi = t.get(rho_name(j));
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                const auto& cls = t.classes[c];
                double want = 0;
                if (cls.kind == ConjClass::identity)
                    want = 2;
                else if (cls.kind == ConjClass::sigma_power)
                    want = 2 * std::cos(2 * M_PI * j * cls.index / n);
                CHECK(std::abs(value(chi.values[c]) - want) < 1e-9);
            }
        }
    }
}

TEST_CASE("orthonormality and degrees")
{
    for (int n = 3; n <= 24; ++n) {
        const CharTable t = char_table(dihedral(n));
        Rat sq = 0;
        for (std::size_t a = 0; a < t.irreps.size(); ++a) {
            sq += t.irreps[a].degree() * t.irreps[a].degree();
            for (std::size_t b = 0; b < t.irreps.size(); ++b)
                CHECK(inner_product(t.irreps[a], t.irreps[b]) == (a == b ? 1 : 0));
        }
        CHECK(sq == 2 * n);
    }
    const CharTable t5 = char_table(dihedral(5));
    CHECK(inner_product(t5.get("rho1"), t5.get("rho2")) == 0);
}

TEST_CASE("decompositions")
{
    const CharTable t4 = char_table(dihedral(4));
    CHECK(to_string(decompose(regular_character(dihedral(4)))) == "rho0 + rho0' + 2rho1 + rho2 + rho2'");
    for (int n = 3; n <= 12; ++n) {
        const CharTable t = char_table(dihedral(n));
        const Character reg = regular_character(dihedral(n));
        for (const auto& chi : t.irreps)
            CHECK(inner_product(reg, chi) == chi.degree());
    }
    const CharTable t5 = char_table(dihedral(5));
    CHECK(decompose(tensor(t5.get("rho1"), t5.get("rho1"))) ==
          Decomposition{{"rho0", 1}, {"rho0'", 1}, {"rho2", 1}});
    CHECK(decompose(tensor(t4.get("rho0'"), t4.get("rho0'"))) == Decomposition{{"rho0", 1}});
    Character half = t4.get("rho1");
    for (auto& v : half.values)
        v *= Rat(1, 2);
    CHECK_THROWS_AS(decompose(half), NotACharacter);
}

TEST_CASE("restriction and induction")
{
    for (int n = 3; n <= 12; ++n) {
        const CharTable t = char_table(dihedral(n));
        const CharTable c = char_table(cyclic(n));
        for (int j = 1; 2 * j < n; ++j)
            CHECK(decompose(restrict_to_cyclic(t.get(rho_name(j)))) ==
                  Decomposition{{eps_name(j), 1}, {eps_name(n - j), 1}});
        CHECK(decompose(restrict_to_cyclic(t.get("rho0'"))) == Decomposition{{"eps0", 1}});
        CHECK(decompose(induce_to_dihedral(c.get("eps0"))) == Decomposition{{"rho0", 1}, {"rho0'", 1}});
        if (n % 2 == 0) {
            const int m = n / 2;
            CHECK(decompose(restrict_to_cyclic(t.get(rho_name(m)))) == Decomposition{{eps_name(m), 1}});
            CHECK(decompose(induce_to_dihedral(c.get(eps_name(m)))) ==
                  Decomposition{{rho_name(m), 1}, {rho_name(m, true), 1}});
        }
        // Mackey: restrict(induce(eps_i)) = eps_i + eps_{n-i}
        for (int i = 1; i < n; ++i) {
            if (2 * i == n)
                continue;
            const auto d = decompose(restrict_to_cyclic(induce_to_dihedral(c.get(eps_name(i)))));
            CHECK(d == Decomposition{{eps_name(std::min(i, n - i)), 1}, {eps_name(std::max(i, n - i)), 1}});
        }
    }
    const CharTable c5 = char_table(cyclic(5));
    CHECK(decompose(induce_to_dihedral(c5.get("eps1"))) == Decomposition{{"rho1", 1}});
}

TEST_CASE("natural representation has determinant rho0'")
{
    for (int n = 3; n <= 12; ++n) {
        const CharTable t = char_table(dihedral(n));
        const auto d = decompose(tensor(t.get("rho1"), t.get("rho1")));
        bool has = false;
        for (const auto& [name, k] : d)
            has = has || (name == "rho0'" && k == 1);
        CHECK(has);
    }
}

TEST_CASE("McKay quiver")
{
    const Quiver q4 = mckay_quiver(4);
    CHECK(q4.adjacency == std::vector<std::vector<int>>{
                              {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 1, 1}, {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}});
    const Quiver q6 = mckay_quiver(6);
    // rho0, rho0', rho1, rho2, rho3, rho3'
    CHECK(q6.adjacency == std::vector<std::vector<int>>{{0, 0, 1, 0, 0, 0},
                                                        {0, 0, 1, 0, 0, 0},
                                                        {1, 1, 0, 1, 0, 0},
                                                        {0, 0, 1, 0, 1, 1},
                                                        {0, 0, 0, 1, 0, 0},
                                                        {0, 0, 0, 1, 0, 0}});
    const Quiver q5 = mckay_quiver(5);
    CHECK(q5.adjacency == std::vector<std::vector<int>>{{0, 0, 1, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(q5.loops == std::vector<std::string>{"rho2"});
    for (int n = 3; n <= 20; ++n) {
        const Quiver q = mckay_quiver(n);
        const CharTable t = char_table(dihedral(n));
        for (std::size_t i = 0; i < q.vertices.size(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < q.vertices.size(); ++j) {
                CHECK(q.adjacency[i][j] == q.adjacency[j][i]);
                s += q.adjacency[i][j] * t.irreps[j].degree();
            }
            CHECK(s == 2 * t.irreps[i].degree());
        }
        CHECK(q.loops.size() == (n % 2 ? 1u : 0u));
    }
    const std::string dot = quiver_dot(q4);
    CHECK(dot.find("\"rho1\" -- \"rho2'\" [label=\"1\"]") != std::string::npos);
}
