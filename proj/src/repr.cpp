#include "mckay/repr.hpp"

#include <sstream>
#include <stdexcept>

namespace mckay {

GroupSpec cyclic(int n)
{
    if (n < 2)
        throw std::invalid_argument("group order parameter must be at least 2");
    return {GroupKind::cyclic, n};
}

GroupSpec dihedral(int n)
{
    if (n < 2)
        throw std::invalid_argument("group order parameter must be at least 2");
    return {GroupKind::dihedral, n};
}

std::string ConjClass::label() const
{
    switch (kind) {
    case identity:
        return "1";
    case sigma_power:
        return "sigma^" + std::to_string(index);
    case tau_class:
        return index == 0 ? "tau" : "tau*sigma";
    }
    return "?";
}

std::vector<ConjClass> conj_classes(const GroupSpec& g)
{
    std::vector<ConjClass> out;
    const int n = g.n;
    out.push_back({ConjClass::identity, 0, 1});
    if (g.kind == GroupKind::cyclic) {
        for (int i = 1; i < n; ++i)
            out.push_back({ConjClass::sigma_power, i, 1});
        return out;
    }
    for (int i = 1; i <= n / 2; ++i)
        out.push_back({ConjClass::sigma_power, i, 2 * i == n ? 1 : 2});
    if (n % 2 == 1) {
        out.push_back({ConjClass::tau_class, 0, n});
    } else {
        out.push_back({ConjClass::tau_class, 0, n / 2});
        out.push_back({ConjClass::tau_class, 1, n / 2});
    }
    return out;
}

int sigma_class_index(const GroupSpec& g, long k)
{
    const int n = g.n;
    long r = k % n;
    if (r < 0)
        r += n;
    if (g.kind == GroupKind::cyclic)
        return static_cast<int>(r);
    long m = std::min(r, n - r);
    return static_cast<int>(m); // identity sits at 0, sigma^i at i
}

int tau_class_index(const GroupSpec& g, long k)
{
    if (g.kind != GroupKind::dihedral)
        throw std::invalid_argument("tau classes exist only in the dihedral group");
    const int n = g.n;
    const int base = n / 2 + 1;
    if (n % 2 == 1)
        return base;
    long r = k % 2;
    if (r < 0)
        r += 2;
    return base + static_cast<int>(r);
}

Rat Character::degree() const
{
    return expect_rational(values.at(0));
}

const Character& CharTable::get(const std::string& name) const
{
    return irreps.at(index_of(name));
}

int CharTable::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].name == name)
            return static_cast<int>(i);
    throw std::out_of_range("no irreducible named " + name);
}

std::string rho_name(int j, bool prime)
{
    return "rho" + std::to_string(j) + (prime ? "'" : "");
}

std::string eps_name(int j)
{
    return "eps" + std::to_string(j);
}

namespace {

CycloElt cst(int n, long c)
{
    return CycloElt::constant(n, c);
}

} // namespace

CharTable char_table(const GroupSpec& g)
{
    CharTable t{g, conj_classes(g), {}};
    const int n = g.n;
    if (g.kind == GroupKind::cyclic) {
        for (int j = 0; j < n; ++j) {
            Character c{g, {}, eps_name(j)};
            for (const auto& cl : t.classes)
                c.values.push_back(CycloElt::monomial(n, static_cast<long>(cl.index) * j));
            t.irreps.push_back(std::move(c));
        }
        return t;
    }

    auto make = [&](const std::string& name, auto&& value_at) {
        Character c{g, {}, name};
        for (const auto& cl : t.classes)
            c.values.push_back(value_at(cl));
        t.irreps.push_back(std::move(c));
    };
    const bool even = n % 2 == 0;
    make(rho_name(0), [&](const ConjClass&) { return cst(n, 1); });
    make(rho_name(0, true), [&](const ConjClass& cl) {
        return cst(n, cl.kind == ConjClass::tau_class ? -1 : 1);
    });
    const int top = even ? n / 2 - 1 : (n - 1) / 2;
    for (int j = 1; j <= top; ++j) {
        make(rho_name(j), [&](const ConjClass& cl) {
            if (cl.kind == ConjClass::tau_class)
                return CycloElt(n);
            long e = static_cast<long>(cl.index) * j;
            return CycloElt::monomial(n, e) + CycloElt::monomial(n, -e);
        });
    }
    if (even) {
        const int h = n / 2;
        for (int prime = 0; prime < 2; ++prime) {
            make(rho_name(h, prime == 1), [&](const ConjClass& cl) {
                if (cl.kind == ConjClass::tau_class) {
                    long s = cl.index == 0 ? 1 : -1;
                    return cst(n, prime == 1 ? -s : s);
                }
                return cst(n, cl.index % 2 == 0 ? 1 : -1);
            });
        }
    }
    return t;
}

Rat inner_product(const Character& a, const Character& b)
{
    if (!(a.group == b.group))
        throw std::invalid_argument("inner product across different groups");
    const auto classes = conj_classes(a.group);
    const int n = a.group.n;
    // sum_k |C_k| a_k conj(b_k), accumulated term by term on the sparse supports
    std::vector<Rat> acc(n);
    std::vector<int> nz;
    Rat prod;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& av = a.values[k].coeffs();
        const auto& bv = b.values[k].coeffs();
        nz.clear();
        for (int j = 0; j < n; ++j)
            if (sgn(bv[j]) != 0)
                nz.push_back(j);
        for (int i = 0; i < n; ++i) {
            if (sgn(av[i]) == 0)
                continue;
            for (int j : nz) {
                prod = av[i] * bv[j];
                prod *= classes[k].size;
                acc[(i - j + n) % n] += prod;
            }
        }
    }
    CycloElt s(n, std::move(acc));
    s *= Rat(1, a.group.order());
    return primitive_value(s);
}

Decomposition decompose(const Character& chi)
{
    const CharTable t = char_table(chi.group);
    Decomposition d;
    for (const auto& rho : t.irreps) {
        Rat m = inner_product(chi, rho);
        if (!is_integer(m) || sgn(m) < 0)
            throw NotACharacter("multiplicity of " + rho.name + " is " + m.get_str());
        if (sgn(m) != 0)
            d.emplace_back(rho.name, static_cast<int>(m.get_num().get_si()));
    }
    if (!same_character(compose(chi.group, d), chi))
        throw NotACharacter("class function is not a combination of irreducibles");
    return d;
}

Character compose(const GroupSpec& g, const Decomposition& d)
{
    const CharTable t = char_table(g);
    Character c{g, std::vector<CycloElt>(t.classes.size(), CycloElt(g.n)), to_string(d)};
    for (const auto& [name, mult] : d) {
        const auto& rho = t.get(name);
        for (std::size_t k = 0; k < c.values.size(); ++k)
            c.values[k] += rho.values[k] * Rat(mult);
    }
    return c;
}

std::string to_string(const Decomposition& d)
{
    if (d.empty())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            out << " + ";
        if (d[i].second != 1)
            out << d[i].second;
        out << d[i].first;
    }
    return out.str();
}

Character tensor(const Character& a, const Character& b)
{
    if (!(a.group == b.group))
        throw std::invalid_argument("tensor across different groups");
    Character c{a.group, {}, a.name + "*" + b.name};
    for (std::size_t k = 0; k < a.values.size(); ++k)
        c.values.push_back(cyc_mul(a.values[k], b.values[k]));
    return c;
}

Character char_sum(const Character& a, const Character& b)
{
    if (!(a.group == b.group))
        throw std::invalid_argument("sum across different groups");
    Character c{a.group, {}, a.name + "+" + b.name};
    for (std::size_t k = 0; k < a.values.size(); ++k)
        c.values.push_back(a.values[k] + b.values[k]);
    return c;
}

Character regular_character(const GroupSpec& g)
{
    Character c{g, {}, "reg"};
    for (const auto& cl : conj_classes(g))
        c.values.push_back(CycloElt::constant(g.n, cl.kind == ConjClass::identity ? g.order() : 0));
    return c;
}

bool same_character(const Character& a, const Character& b)
{
    if (!(a.group == b.group) || a.values.size() != b.values.size())
        return false;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        if (!primitive_reduce(a.values[k] - b.values[k]).is_zero())
            return false;
    return true;
}

Character restrict_to_cyclic(const Character& chi)
{
    if (chi.group.kind != GroupKind::dihedral)
        throw std::invalid_argument("restriction expects a dihedral character");
    const GroupSpec z = cyclic(chi.group.n);
    Character r{z, {}, "Res(" + chi.name + ")"};
    for (int i = 0; i < z.n; ++i)
        r.values.push_back(chi.values[sigma_class_index(chi.group, i)]);
    return r;
}

Character induce_to_dihedral(const Character& eps)
{
    if (eps.group.kind != GroupKind::cyclic)
        throw std::invalid_argument("induction expects a cyclic character");
    const GroupSpec d = dihedral(eps.group.n);
    const int n = d.n;
    Character r{d, {}, "Ind(" + eps.name + ")"};
    // Index-2 normal subgroup: Ind(f)(sigma^i) = f(sigma^i) + f(sigma^-i), zero off it.
    for (const auto& cl : conj_classes(d)) {
        if (cl.kind == ConjClass::tau_class) {
            r.values.emplace_back(n);
            continue;
        }
        int i = cl.index;
        r.values.push_back(eps.values[i % n] + eps.values[(n - i) % n]);
    }
    return r;
}

Quiver mckay_quiver(int n)
{
    if (n < 3)
        throw std::invalid_argument("quiver needs n >= 3");
    const CharTable t = char_table(dihedral(n));
    const Character& nat = t.get(rho_name(1));
    Quiver q{n, {}, {}, {}};
    const int k = static_cast<int>(t.irreps.size());
    for (const auto& rho : t.irreps)
        q.vertices.push_back(rho.name);
    q.adjacency.assign(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        Character prod = tensor(nat, t.irreps[i]);
        for (int j = 0; j < k; ++j) {
            Rat m = inner_product(prod, t.irreps[j]);
            q.adjacency[i][j] = static_cast<int>(m.get_num().get_si());
        }
        if (q.adjacency[i][i] > 0)
            q.loops.push_back(t.irreps[i].name);
    }
    return q;
}

std::string quiver_dot(const Quiver& q)
{
    std::ostringstream out;
    out << "graph mckay_D" << 2 * q.n << " {\n";
    for (const auto& v : q.vertices)
        out << "  \"" << v << "\";\n";
    const std::size_t k = q.vertices.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            int m = q.adjacency[i][j];
            if (m == 0)
                continue;
            out << "  \"" << q.vertices[i] << "\" -- \"" << q.vertices[j] << "\" [label=\"" << m << "\"";
            if (i == j)
                out << ", color=red";
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace mckay
