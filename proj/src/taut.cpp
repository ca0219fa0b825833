#include "mckay/taut.hpp"

#include "mckay/charts.hpp"
#include "mckay/hilb.hpp"
#include "mckay/intersect.hpp"

#include <set>
#include <sstream>

namespace mckay {

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b)
{
    DivisorClass out = a;
    for (const auto& [k, v] : b) {
        out[k] += v;
        if (sgn(out[k]) == 0)
            out.erase(k);
    }
    return out;
}

DivisorClass operator*(const Rat& s, const DivisorClass& a)
{
    DivisorClass out;
    if (sgn(s) == 0)
        return out;
    for (const auto& [k, v] : a)
        out[k] = s * v;
    return out;
}

std::string to_string(const DivisorClass& c)
{
    if (c.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [label, v] : c) {
        const Rat a = abs(v);
        if (!first)
            out << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            out << "-";
        first = false;
        if (a != 1)
            out << (is_integer(a) ? a.get_str() : "(" + a.get_str() + ")");
        out << label;
    }
    return out.str();
}

std::string to_string(Space s)
{
    return s == Space::coarse ? "coarse" : "stack";
}

namespace {

DivisorClass unit(const std::string& label, const Rat& c = 1)
{
    return {{label, c}};
}

int resolve_k(int n, int k)
{
    const int m = half_index(n);
    if (k == 0)
        return m;
    if (k < 1 || k > m)
        throw std::invalid_argument("transversal index k must lie in 1.." + std::to_string(m));
    return k;
}

// Number of two-dimensional irreducibles rho_1.. (they carry D_i).
int rank_two_count(int n)
{
    return n % 2 ? half_index(n) : half_index(n) - 1;
}

Poly w_equation(int n, int k)
{
    const Poly x = Poly::var(0), y = Poly::var(1);
    return x.pow(n) + y.pow(n) - (x * y).pow(k);
}

// A D_2n-invariant curve whose preimage meets E~i and E~(n-i) once each.
Poly d_equation(int n, int i)
{
    const Poly x = Poly::var(0), y = Poly::var(1);
    return (x.pow(i) - y.pow(n - i) * Rat(2)) * (y.pow(i) - x.pow(n - i) * Rat(2));
}

} // namespace

TautLedger build_ledger(int n, Space space, int k)
{
    if (n < 3)
        throw std::invalid_argument("ledger needs n >= 3");
    k = resolve_k(n, k);
    const int m = half_index(n);
    const bool even = n % 2 == 0;
    const Rat half = make_rat(1, 2);
    TautLedger t{n, space, k, {}};
    auto line = [&](const std::string& rep, const std::string& desc, const DivisorClass& c1) {
        t.entries.push_back({rep, 1, desc, c1, {}, "line bundle"});
    };
    if (space == Space::coarse) {
        const DivisorClass L = unit("L");
        line(rho_name(0), "O", {});
        line(rho_name(0, true), "O(L)", L);
        for (int i = 1; i <= rank_two_count(n); ++i) {
            const DivisorClass q = unit("D" + std::to_string(i)) + L;
            t.entries.push_back({rho_name(i), 2, "O + O(" + to_string(q) + ")", q, {{}, q}, "split"});
        }
        if (even) {
            line(rho_name(m), "O(B1 + L)", unit("B1") + L);
            line(rho_name(m, true), "O(B2 + L)", unit("B2") + L);
        }
        return t;
    }
    const DivisorClass C = even ? unit("B1", half) + unit("B2", -half) : unit("B3", half) + unit("D", -1);
    line(rho_name(0), "O", {});
    line(rho_name(0, true), "O(" + to_string(C) + ")", C);
    for (int i = 1; i <= rank_two_count(n); ++i) {
        const DivisorClass q = unit("D" + std::to_string(i)) + C;
        t.entries.push_back({rho_name(i), 2, "0 -> O -> R -> O(" + to_string(q) + ") -> 0", q, {{}, q},
                             "unique non-trivial"});
    }
    if (even) {
        line(rho_name(m), "O((1/2)B1)", unit("B1", half));
        line(rho_name(m, true), "O((1/2)B2)", unit("B2", half));
    }
    return t;
}

std::string ledger_markdown(const TautLedger& t)
{
    std::ostringstream out;
    out << "| rep | rank | description | c1 | extension |\n|---|---|---|---|---|\n";
    for (const auto& e : t.entries)
        out << "| " << e.rep << " | " << e.rank << " | " << e.description << " | " << to_string(e.c1) << " | "
            << e.extension << " |\n";
    return out.str();
}

PairingTable pairing_table(int n, int k)
{
    k = resolve_k(n, k);
    const int m = half_index(n);
    PairingTable t{n, k, {}, {}};
    const CurveConfig fold = z2_fold(an_chain(n - 1), n);
    for (int a = 0; a < m; ++a) {
        t.curves.push_back(fold.labels[a]);
        t.dots[fold.labels[a]] = fold.Q.row(a);
    }
    QVec L(m);
    for (const auto& eq : boundary_equations(n)) {
        t.dots[eq.label] = folded_pairing(n, eq.equation);
        for (int a = 0; a < m; ++a)
            L[a] -= t.dots[eq.label][a] * make_rat(1, 2);
    }
    t.dots["L"] = L;
    for (int i = 1; i <= rank_two_count(n); ++i)
        t.dots["D" + std::to_string(i)] = folded_pairing(n, d_equation(n, i));
    t.dots["D"] = folded_pairing(n, w_equation(n, k));
    return t;
}

std::vector<Rat> pair_with_curves(const DivisorClass& c, const PairingTable& t)
{
    std::vector<Rat> out(t.curves.size());
    for (const auto& [label, coeff] : c) {
        auto it = t.dots.find(label);
        if (it == t.dots.end())
            throw std::out_of_range("no pairing data for " + label);
        for (std::size_t a = 0; a < out.size(); ++a)
            out[a] += coeff * it->second[a];
    }
    return out;
}

bool torsion_check(const DivisorClass& c, const PairingTable& t)
{
    for (const auto& v : pair_with_curves(Rat(2) * c, t))
        if (sgn(v) != 0)
            return false;
    return true;
}

std::vector<IdentityLine> pushforward_identities(int n)
{
    const CharTable dt = char_table(dihedral(n));
    const CharTable zt = char_table(cyclic(n));
    std::vector<IdentityLine> out;
    auto check = [&](const std::string& text, bool ok) {
        out.push_back({text, ok});
        if (!ok)
            throw IdentityViolation(text);
    };
    for (int i = 1; 2 * i < n; ++i) {
        const Decomposition res = decompose(restrict_to_cyclic(dt.get(rho_name(i))));
        const Decomposition want{{eps_name(i), 1}, {eps_name(n - i), 1}};
        check("Res " + rho_name(i) + " = " + eps_name(i) + " + " + eps_name(n - i), res == want);
        check("Ind " + eps_name(i) + " = " + rho_name(i),
              decompose(induce_to_dihedral(zt.get(eps_name(i)))) == Decomposition{{rho_name(i), 1}});
    }
    check("Ind " + eps_name(0) + " = " + rho_name(0) + " + " + rho_name(0, true),
          decompose(induce_to_dihedral(zt.get(eps_name(0)))) ==
              Decomposition{{rho_name(0), 1}, {rho_name(0, true), 1}});
    if (n % 2 == 0) {
        const int h = n / 2;
        check("Ind " + eps_name(h) + " = " + rho_name(h) + " + " + rho_name(h, true),
              decompose(induce_to_dihedral(zt.get(eps_name(h)))) ==
                  Decomposition{{rho_name(h), 1}, {rho_name(h, true), 1}});
    }
    return out;
}

std::vector<FMEntry> fm_table_raw(int n)
{
    if (n < 3)
        throw std::invalid_argument("fm table needs n >= 3");
    const int m = half_index(n);
    const bool even = n % 2 == 0;
    std::vector<FMEntry> out;
    out.push_back({rho_name(0), "F", "none", 0});
    out.push_back({rho_name(0, true), "F", "B1-B2", 0});
    for (int j = 1; j <= rank_two_count(n); ++j) {
        if (!even && j == m)
            out.push_back({rho_name(j), y_divisor(j), "-B3", 1});
        else
            out.push_back({rho_name(j), y_divisor(j), "none", 1});
    }
    if (even) {
        out.push_back({rho_name(m), y_divisor(m), "-B1", 1});
        out.push_back({rho_name(m, true), y_divisor(m), "-B2", 1});
    }
    return out;
}

namespace {

std::set<int> stratum_curves(const std::string& stratum, int m)
{
    if (stratum == "B1" || stratum == "B2")
        return {m};
    std::set<int> out;
    std::size_t pos = 0;
    while ((pos = stratum.find('E', pos)) != std::string::npos) {
        std::size_t end = pos + 1;
        while (end < stratum.size() && std::isdigit(static_cast<unsigned char>(stratum[end])))
            ++end;
        out.insert(std::stoi(stratum.substr(pos + 1, end - pos - 1)));
        pos = end;
    }
    return out;
}

bool contains(const RClass& c, const std::string& rep)
{
    for (const auto& [name, mult] : c)
        if (name == rep && mult > 0)
            return true;
    return false;
}

} // namespace

void fm_cross_check(int n, const std::vector<FMEntry>& table, const std::vector<SocleRow>& socles)
{
    const int m = half_index(n);
    for (const auto& e : table) {
        std::vector<const SocleRow*> rows;
        for (const auto& r : socles)
            if (contains(r.socle, e.rep))
                rows.push_back(&r);
        if (rows.empty())
            for (const auto& r : socles)
                if (r.stratum != "off" && contains(r.top, e.rep))
                    rows.push_back(&r);
        std::set<int> closure;
        for (const auto* r : rows)
            if (r->stratum.rfind('E', 0) == 0 && stratum_curves(r->stratum, m).size() == 1)
                closure.insert(*stratum_curves(r->stratum, m).begin());
        for (const auto* r : rows) {
            bool on_closure = false;
            for (int c : stratum_curves(r->stratum, m))
                on_closure = on_closure || closure.count(c);
            if (!on_closure)
                throw CrossCheckFailure(e.rep + ": stratum " + r->stratum + " lies off the support closure");
        }
        std::set<int> support;
        if (e.support == "F")
            for (int j = 1; j <= m; ++j)
                support.insert(j);
        else
            support = stratum_curves(e.support, m);
        if (support != closure)
            throw CrossCheckFailure(e.rep + ": support " + e.support + " differs from the socle strata");
        if (e.twist == "-B1" || e.twist == "-B2") {
            const std::string own = e.twist.substr(1);
            const std::string other = own == "B1" ? "B2" : "B1";
            for (const auto& r : socles) {
                if (r.stratum == own && contains(r.socle, e.rep))
                    throw CrossCheckFailure(e.rep + ": twist " + e.twist + " but " + own + " carries it in the socle");
                if (r.stratum == other && !contains(r.socle, e.rep))
                    throw CrossCheckFailure(e.rep + ": " + other + " socle does not contain it");
            }
        }
    }
}

std::vector<FMEntry> fm_table(int n)
{
    auto t = fm_table_raw(n);
    fm_cross_check(n, t, socle_table(n));
    return t;
}

RefDivCertificate refdivisor_certify(int n, int k)
{
    const int m = half_index(n);
    if (k < 1 || k > m)
        throw std::invalid_argument("k must lie in 1.." + std::to_string(m));
    const Poly w = w_equation(n, k);
    RefDivCertificate cert{n, k, w.to_string(), folded_pairing(n, w), true, {}, std::nullopt};
    for (int j = 1; j <= m; ++j)
        if (cert.pairings[j - 1] != (j == k ? 1 : 0))
            cert.transversal = false;
    const HilbAtlas h = x1_atlas(n);
    for (const auto& c : h.charts) {
        const Poly strict = pullback_orders(c, w).strict;
        for (const auto& [axis, divisor] : c.exceptional_axes) {
            const AxisMeeting meet = restrict_to_axis(strict, axis);
            if (meet.total == 0)
                continue;
            std::ostringstream s;
            s << c.name << ": " << divisor << " x" << meet.total;
            for (const auto& f : meet.factors)
                for (const auto& r : f.rational_points)
                    s << " at " << (axis == 0 ? "(0, " + r.get_str() + ")" : "(" + r.get_str() + ", 0)");
            cert.meetings.push_back(s.str());
        }
    }
    // Where D meets the boundary in the last Y1 chart, which contains every
    // point of E_m except E_(m-1) ^ E_m.
    std::ostringstream note;
    const Chart last = y1_atlas(n).back();
    const Poly d = pullback_orders(last, to_invariants(n, w)).strict;
    for (const auto& eq : boundary_equations(n)) {
        const Poly b = pullback_orders(last, to_invariants(n, eq.equation)).strict;
        const Ideal I({d, b});
        if (I.is_unit())
            continue;
        const UPoly g = gcd(UPoly::from_poly(d.eval_var(0, 0), 1), UPoly::from_poly(b.eval_var(0, 0), 1));
        note << (note.tellp() > 0 ? "; " : "") << "D meets " << eq.label << " on " << last.name << " with length "
             << staircase(I).dim << (g.degree() > 0 ? ", on " : ", off ") << last.exceptional_axes.at(0);
    }
    if (note.tellp() > 0)
        cert.boundary_note = note.str();
    return cert;
}

} // namespace mckay
