#include "mckay/hilb.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mckay {

namespace {

// Exponent of (xy)^N in the relation f1^2 - f2^2 = 4 (xy)^N.
int relation_degree(int n)
{
    return n % 2 ? n : n / 2;
}

std::string prime(int k)
{
    return std::string(static_cast<std::size_t>(k), '\'');
}

std::string uname(int i, int primes = 0)
{
    return "U" + std::to_string(i) + prime(primes);
}

std::string vname(int i, int primes)
{
    return "V" + std::to_string(i) + prime(primes);
}

IVec add(IVec a, const IVec& b, int scale = 1)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] += scale * b[k];
    return a;
}

IVec image_exponent(const Chart& a, const IVec& gamma)
{
    IVec e(a.atoms.size(), 0);
    for (int k = 0; k < a.dim(); ++k)
        e = add(e, a.coords[k], gamma[k]);
    return e;
}

std::optional<IVec> try_express(const Chart& c, const IVec& m)
{
    try {
        return express_monomial(c, m);
    } catch (const NoIntegerSolution&) {
        return std::nullopt;
    }
}

long binom(int k, int r)
{
    long b = 1;
    for (int i = 1; i <= r; ++i)
        b = b * (k - r + i) / i;
    return b;
}

// Express the atom monomial `row` on chart a, allowing one use of the
// relation f2^2 = f1^2 - 4(xy)^N (or its mirror) raised to the k-th power.
std::optional<LaurentPoly> solve_coordinate(const Chart& a, const IVec& row, int N)
{
    if (auto g = try_express(a, row))
        return LaurentPoly{{*g, Rat(1)}};
    struct Rewrite {
        IVec replaced, other;
        int sign;
    };
    const Rewrite rewrites[] = {{{0, 0, 0, 2}, {0, 0, 2, 0}, -1}, {{0, 0, 2, 0}, {0, 0, 0, 2}, 1}};
    for (const auto& rw : rewrites)
        for (int k = 1; k <= 3; ++k) {
            auto base = try_express(a, add(row, rw.replaced, -k));
            if (!base)
                continue;
            LaurentPoly out;
            bool ok = true;
            for (int r = 0; r <= k && ok; ++r) {
                IVec g = add(IVec(4, 0), rw.other, r);
                g[0] += (k - r) * N;
                auto gr = try_express(a, g);
                if (!gr) {
                    ok = false;
                    break;
                }
                mpz_class c = binom(k, r);
                for (int e = 0; e < k - r; ++e)
                    c *= 4 * rw.sign;
                IVec key = add(*base, *gr);
                out[key] += Rat(c);
                if (sgn(out[key]) == 0)
                    out.erase(key);
            }
            if (ok)
                return out;
        }
    return std::nullopt;
}

class AtomPowers {
public:
    explicit AtomPowers(int n) : atoms_(flop_atoms(n)) {}
    Poly eval(const IVec& e)
    {
        auto it = cache_.find(e);
        if (it != cache_.end())
            return it->second;
        Poly p(1);
        for (int k = 0; k < atoms_.size(); ++k) {
            if (e[k] < 0)
                throw std::logic_error("negative atom power in polynomial identity");
            if (e[k] > 0)
                p = p * atoms_.exprs[k].pow(e[k]);
        }
        return cache_.emplace(e, p).first->second;
    }

private:
    AtomSet atoms_;
    std::map<IVec, Poly> cache_;
};

bool verify_with(AtomPowers& pw, const Chart& a, const Chart& b, const FlopTransition& t)
{
    if (static_cast<int>(t.coords.size()) != b.dim())
        return false;
    for (int r = 0; r < b.dim(); ++r) {
        std::vector<std::pair<IVec, Rat>> terms;
        IVec lo = b.coords[r];
        for (const auto& [gamma, c] : t.coords[r]) {
            IVec e = image_exponent(a, gamma);
            for (std::size_t k = 0; k < e.size(); ++k)
                lo[k] = std::min(lo[k], e[k]);
            terms.emplace_back(std::move(e), c);
        }
        IVec mu(lo.size());
        for (std::size_t k = 0; k < lo.size(); ++k)
            mu[k] = std::max(0, -lo[k]);
        Poly lhs;
        for (const auto& [e, c] : terms)
            lhs += pw.eval(add(e, mu)) * c;
        if (!(lhs == pw.eval(add(b.coords[r], mu))))
            return false;
    }
    return true;
}

std::string atom_power(const std::string& name, int e)
{
    const bool paren = name.size() > 1 && name != "f1" && name != "f2";
    if (e == 1)
        return name;
    return (paren ? "(" + name + ")" : name) + "^" + std::to_string(e);
}

std::string tag_string(const IVec& v, const std::vector<std::string>& names)
{
    auto side = [&](int sign) {
        std::string s;
        // f1, f2 first, then xy, then z.
        for (int k : {2, 3, 0, 1}) {
            int e = sign * v[k];
            if (e <= 0)
                continue;
            if (!s.empty())
                s += "*";
            s += atom_power(names[k], e);
        }
        return s.empty() ? std::string("1") : s;
    };
    return "(" + side(1) + " : " + side(-1) + ")";
}

IVec normalize_tag(IVec v)
{
    bool flip = false;
    if (v[2] != 0)
        flip = v[2] < 0;
    else if (v[3] != 0)
        flip = v[3] < 0;
    else
        flip = v[0] < 0;
    if (flip)
        for (auto& x : v)
            x = -x;
    return v;
}

} // namespace

std::string FlopStage::label() const
{
    if (!j)
        return "X(" + std::to_string(i) + ")";
    return "X(" + std::to_string(i) + "," + std::to_string(*j) + ")";
}

AtomSet flop_atoms(int n)
{
    const int N = relation_degree(n);
    const Poly x = Poly::monomial({N, 0, 0});
    const Poly y = Poly::monomial({0, N, 0});
    return {{"xy", "z", "f1", "f2"}, {Poly::monomial({1, 1, 0}), Poly::var(2), x + y, x - y}};
}

std::map<std::string, Chart> flop_charts(int n)
{
    if (n < 3)
        throw std::invalid_argument("flop atlases need n >= 3");
    const int m = half_index(n);
    const AtomSet atoms = flop_atoms(n);
    std::map<std::string, Chart> out;
    auto put = [&](const std::string& name, IMat rows) {
        Chart c;
        c.name = name;
        c.atoms = atoms;
        c.coords = std::move(rows);
        for (const auto& r : c.coords)
            c.coord_names.push_back(laurent_string(r, atoms.names));
        out.emplace(name, std::move(c));
    };
    if (n % 2 == 1) {
        for (int i = 1; i <= m + 1; ++i) {
            put(uname(i, 1), {{i - 1, 1, 0, -1}, {-(i - 1), 0, 1, 0}, {1, 0, 0, 0}});
            put(uname(i), {{i - 1, 1, 0, -1}, {-(i - 2), -1, 0, 1}, {0, 1, 1, -1}});
        }
        for (int i = 1; i <= m; ++i)
            put(uname(i, 2), {{0, 1, 1, -1}, {i, 0, -1, 0}, {-(i - 1), 0, 1, 0}});
        put(uname(m + 2), {{0, 2, 0, 0}, {-m, 0, 1, 0}, {-m, -1, 0, 1}});
        return out;
    }
    for (int i = 1; i <= m; ++i) {
        put(uname(i), {{i - 1, 1, -1, -1}, {-(i - 2), -1, 1, 1}, {0, 1, 1, -1}});
        put(uname(i, 1), {{i - 1, 1, -1, -1}, {-(i - 1), 0, 2, 0}, {1, 0, 0, 0}});
        put(vname(i, 1), {{i - 2, 2, 0, -2}, {1, 0, 0, 0}, {-(i - 2), -1, 1, 1}});
    }
    put(uname(m + 1), {{0, 1, -1, 1}, {-(m - 1), -1, 1, 1}, {0, 1, 1, -1}});
    put(uname(m + 1, 1), {{0, 1, -1, 1}, {0, 0, 2, -2}, {-(m - 1), 0, 0, 2}});
    for (int i = 1; i < m; ++i)
        put(uname(i, 2), {{0, 1, 1, -1}, {i, 0, -2, 0}, {-(i - 1), 0, 2, 0}});
    put(uname(m, 2), {{0, 1, 1, -1}, {0, 0, -2, 2}, {-(m - 1), 0, 2, 0}});
    put(vname(m + 1, 1), {{m - 1, 2, 0, -2}, {-(m - 1), 0, 0, 2}, {-(m - 1), -1, 1, 1}});
    put(vname(m + 2, 1), {{0, 2, 0, 0}, {-(m - 1), 0, 0, 2}, {0, -1, 1, -1}});
    for (int i = 1; i <= m + 1; ++i)
        put(vname(i, 2), {{i - 2, 2, 0, -2}, {-(i - 3), -2, 0, 2}, {0, 1, 1, -1}});
    put(vname(m + 2, 2), {{0, 2, 0, 0}, {-(m - 1), -2, 0, 2}, {0, 1, 1, -1}});
    put(vname(m + 3, 2), {{0, 2, 0, 0}, {-(m - 1), 0, 2, 0}, {0, -1, -1, 1}});
    return out;
}

std::vector<FlopStage> flop_stages(int n)
{
    const int m = half_index(n);
    std::vector<FlopStage> out;
    if (n % 2 == 1) {
        for (int i = m - 1; i >= -1; --i)
            out.push_back({i, std::nullopt});
        return out;
    }
    for (int i = m - 1; i >= -1; --i)
        for (int j = -1; i + j <= m - 2; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<std::string> stage_chart_names(int n, const FlopStage& s)
{
    const int m = half_index(n);
    std::vector<std::string> out;
    for (int k = 1; k <= s.i + 1; ++k)
        out.push_back(uname(k, 2));
    out.push_back(uname(s.i + 2, 1));
    if (n % 2 == 1) {
        if (s.j)
            throw std::invalid_argument("odd stages take a single index");
        if (s.i < -1 || s.i > m - 1)
            throw std::invalid_argument("stage index out of range");
        for (int k = s.i + 3; k <= m + 2; ++k)
            out.push_back(uname(k));
        return out;
    }
    if (!s.j || s.i < -1 || *s.j < -1 || s.i + *s.j > m - 2)
        throw std::invalid_argument("even stages need (i, j) with i, j >= -1 and i + j <= m - 2");
    const int j = *s.j;
    for (int k = s.i + 3; k <= m - j; ++k)
        out.push_back(uname(k));
    out.push_back(vname(m - j + 1, 1));
    for (int k = m - j + 2; k <= m + 3; ++k)
        out.push_back(vname(k, 2));
    return out;
}

std::string laurent_poly_string(const LaurentPoly& p, const std::vector<std::string>& names)
{
    if (p.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p) {
        const bool neg = sgn(c) < 0;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const Rat a = abs(c);
        const std::string mono = laurent_string(e, names);
        if (mono == "1")
            out << a.get_str();
        else if (a == 1)
            out << mono;
        else
            out << a.get_str() << "*" << mono;
    }
    return out.str();
}

std::optional<FlopTransition> flop_transition(int n, const Chart& a, const Chart& b)
{
    const int N = relation_degree(n);
    FlopTransition t{a.name, b.name, {}, true, std::nullopt};
    IMat mono;
    for (const auto& row : b.coords) {
        auto lp = solve_coordinate(a, row, N);
        if (!lp)
            return std::nullopt;
        if (lp->size() == 1 && lp->begin()->second == 1)
            mono.push_back(lp->begin()->first);
        else
            t.monomial = false;
        t.coords.push_back(std::move(*lp));
    }
    if (t.monomial)
        t.wall = wall_axis(mono);
    return t;
}

bool verify_flop_transition(int n, const Chart& a, const Chart& b, const FlopTransition& t)
{
    AtomPowers pw(n);
    return verify_with(pw, a, b, t);
}

FlopAtlas build_flop_atlas(int n, const FlopStage& s)
{
    const auto all = flop_charts(n);
    FlopAtlas atlas{n, s, {}, {}, true, {}, {}};
    for (const auto& name : stage_chart_names(n, s))
        atlas.charts.push_back(all.at(name));
    AtomPowers pw(n);
    for (std::size_t k = 0; k + 1 < atlas.charts.size(); ++k) {
        const Chart& a = atlas.charts[k];
        const Chart& b = atlas.charts[k + 1];
        auto t = flop_transition(n, a, b);
        if (!t || !verify_with(pw, a, b, *t)) {
            atlas.gluings_verified = false;
            if (t)
                atlas.gluings.push_back(*t);
            continue;
        }
        atlas.gluings.push_back(*t);
    }
    std::set<IVec> tags;
    for (std::size_t p = 0; p < atlas.charts.size(); ++p)
        for (std::size_t q = 0; q < atlas.charts.size(); ++q) {
            if (p == q)
                continue;
            const Chart& a = atlas.charts[p];
            auto t = flop_transition(n, a, atlas.charts[q]);
            if (!t)
                continue;
            if (p < q)
                atlas.adjacency.emplace_back(a.name, atlas.charts[q].name);
            for (const auto& lp : t->coords) {
                if (lp.size() != 1 || lp.begin()->second != 1)
                    continue;
                const IVec& e = lp.begin()->first;
                int k = -1;
                bool inverse = true;
                for (std::size_t c = 0; c < e.size(); ++c) {
                    if (e[c] == -1 && k < 0)
                        k = static_cast<int>(c);
                    else if (e[c] != 0)
                        inverse = false;
                }
                // The inverted coordinate cuts out the curve; z-dependent walls
                // are surfaces in the threefold.
                if (inverse && k >= 0 && a.coords[k][1] == 0)
                    tags.insert(normalize_tag(a.coords[k]));
            }
        }
    for (const auto& v : tags)
        atlas.curve_tags.push_back(tag_string(v, atlas.charts.front().atoms.names));
    return atlas;
}

std::vector<DisplayedGluing> displayed_gluings(int n)
{
    const int m = half_index(n);
    const LaurentPoly uv{{{1, 1, 0}, Rat(1)}};
    const LaurentPoly vinv{{{0, -1, 0}, Rat(1)}};
    const LaurentPoly vw{{{0, 1, 1}, Rat(1)}};
    std::vector<DisplayedGluing> out;
    out.push_back({uname(m, 2), uname(m + 1, 1), {uv, vinv, vw}, true});
    if (n % 2 == 1) {
        // z^2 = u^2 (v^2 - 4w) on U'_{m+1} -> U_{m+2}.
        LaurentPoly z2{{{2, 2, 0}, Rat(1)}, {{2, 0, 1}, Rat(-4)}};
        out.push_back({uname(m + 1, 1), uname(m + 2), {z2, {{{0, 1, 0}, Rat(1)}}, {{{-1, 0, 0}, Rat(1)}}}, false});
    } else if (m >= 2) {
        LaurentPoly mid{{{0, 0, 0}, Rat(1)}, {{0, 2, 1}, Rat(-4)}};
        out.push_back({uname(m - 1, 2), uname(m, 2), {{{{1, 0, 0}, Rat(1)}}, mid, vinv}, false});
    }
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> stage_difference(int n, const FlopStage& from,
                                                                              const FlopStage& to)
{
    const auto a = stage_chart_names(n, from);
    const auto b = stage_chart_names(n, to);
    std::pair<std::vector<std::string>, std::vector<std::string>> d;
    for (const auto& c : a)
        if (std::find(b.begin(), b.end(), c) == b.end())
            d.first.push_back(c);
    for (const auto& c : b)
        if (std::find(a.begin(), a.end(), c) == a.end())
            d.second.push_back(c);
    return d;
}

} // namespace mckay
