#include "mckay/constel.hpp"

#include <deque>
#include <stdexcept>

namespace mckay {

std::string to_string(Twist t)
{
    switch (t) {
    case Twist::delta0:
        return "delta0";
    case Twist::delta1:
        return "delta1";
    default:
        return "none";
    }
}

namespace {

int mod(long a, int n)
{
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// Quotient k[x,y(,z)]/I with its standard monomial basis.
struct Quotient {
    const Ideal& I;
    Staircase st;
    std::map<Exp, int> index;

    explicit Quotient(const Ideal& ideal) : I(ideal), st(staircase(ideal))
    {
        for (int k = 0; k < st.dim; ++k)
            index[st.basis[k]] = k;
    }

    QVec coords(const Poly& f) const
    {
        QVec v(st.dim);
        const Poly r = normal_form(f, I);
        for (const auto& [e, c] : r.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                throw std::logic_error("normal form left the staircase");
            v[it->second] = c;
        }
        return v;
    }

    QMatrix times(const Poly& g) const
    {
        QMatrix m(st.dim, st.dim);
        for (int k = 0; k < st.dim; ++k) {
            const QVec v = coords(g * Poly::monomial(st.basis[k]));
            for (int r = 0; r < st.dim; ++r)
                m(r, k) = v[r];
        }
        return m;
    }
};

int sign_of(Twist t)
{
    if (t == Twist::none)
        throw std::invalid_argument("a fixed cluster needs a twist");
    return t == Twist::delta1 ? 1 : -1;
}

bool is_fixed(int n, const ClusterPoint& p)
{
    return cluster_ideal(n, p) == cluster_ideal(n, z2_image(n, p));
}

Poly flip_z(const Poly& f)
{
    Poly out;
    for (const auto& [e, c] : f.terms())
        out.add_term(e, e[2] % 2 ? Rat(-c) : c);
    return out;
}

// tau acts on the quotient by f(x,y,z) -> sign * f(y,x,-z).
Constellation twisted_quotient(int n, const Ideal& I, int sign, int expected_dim, const std::string& origin,
                               Twist twist)
{
    Quotient q(I);
    if (q.st.dim != expected_dim)
        throw WrongDimension(origin + " has dimension " + std::to_string(q.st.dim) + ", expected " +
                             std::to_string(expected_dim));
    Constellation F;
    F.n = n;
    F.twist = twist;
    F.origin = origin;
    F.x_action = q.times(Poly::var(0));
    F.y_action = q.times(Poly::var(1));
    F.tau_action = QMatrix(q.st.dim, q.st.dim);
    for (int k = 0; k < q.st.dim; ++k) {
        const Exp& e = q.st.basis[k];
        F.labels.push_back(Poly::monomial(e).to_string());
        F.weights.push_back(mod(e[0] - e[1], n));
        const QVec v = q.coords(flip_z(Poly::monomial(e).swap_xy()) * Rat(sign));
        for (int r = 0; r < q.st.dim; ++r)
            F.tau_action(r, k) = v[r];
    }
    return F;
}

Ideal fixed_thickening(int n, const ClusterPoint& p)
{
    const int m = half_index(n);
    const Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
    if (n % 2 == 0) {
        if (p.i != m || sgn(p.a) == 0)
            throw std::invalid_argument(p.to_string() + " is not a fixed cluster");
        const Rat s = p.b / p.a;
        return Ideal({x.pow(m) - (Poly(s) + z) * y.pow(m), y.pow(m + 1), x * y, z * z});
    }
    if (!(cluster_ideal(n, p) == Ideal({x.pow(m + 1), y.pow(m + 1), x * y})))
        throw std::invalid_argument(p.to_string() + " is not a fixed cluster");
    return Ideal({x.pow(m + 1) - z * y.pow(m), y.pow(m + 1) + z * x.pow(m), x * y, z * z});
}

CycloElt tau_trace_on(const Constellation& F, const std::vector<QVec>& basis)
{
    // Trace of tau on span(basis), which tau preserves.
    Rat tr = 0;
    if (basis.empty())
        return CycloElt::constant(F.n, 0);
    QMatrix B(F.dim(), static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int r = 0; r < F.dim(); ++r)
            B(r, static_cast<int>(j)) = basis[j][r];
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = solve(B, F.tau_action * basis[j]);
        if (!c)
            throw std::logic_error("subspace is not tau-stable");
        tr += (*c)[j];
    }
    return CycloElt::constant(F.n, tr);
}

int weight_of(const Constellation& F, const QVec& v)
{
    int w = -1;
    for (int k = 0; k < F.dim(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        if (w >= 0 && F.weights[k] != w)
            throw std::invalid_argument("vector is not weight-homogeneous");
        w = F.weights[k];
    }
    return w;
}

Character difference(const Character& a, const Character& b)
{
    Character c = a;
    for (std::size_t k = 0; k < c.values.size(); ++k)
        c.values[k] -= b.values[k];
    return c;
}

QVec unit(int d, int k)
{
    QVec v(d);
    v[k] = 1;
    return v;
}

} // namespace

Constellation doubled_constellation(int n, const Ideal& I, const std::string& origin)
{
    if (I.nvars() != 2)
        throw std::invalid_argument("clusters live in k[x,y]");
    Quotient q(I);
    if (q.st.dim != n)
        throw WrongDimension(origin + " has dimension " + std::to_string(q.st.dim) + ", expected " + std::to_string(n));
    const QMatrix mx = q.times(Poly::var(0));
    const QMatrix my = q.times(Poly::var(1));
    const int d = 2 * n;
    Constellation F;
    F.n = n;
    F.origin = origin;
    F.x_action = QMatrix(d, d);
    F.y_action = QMatrix(d, d);
    F.tau_action = QMatrix(d, d);
    F.labels.resize(d);
    F.weights.resize(d);
    for (int k = 0; k < n; ++k) {
        const Exp& e = q.st.basis[k];
        F.labels[k] = "[p] " + Poly::monomial(e).to_string();
        F.labels[n + k] = "[tau p] " + Poly::monomial(e).swap_xy().to_string();
        F.weights[k] = mod(e[0] - e[1], n);
        F.weights[n + k] = mod(e[1] - e[0], n);
        F.tau_action(n + k, k) = 1;
        F.tau_action(k, n + k) = 1;
        for (int r = 0; r < n; ++r) {
            F.x_action(r, k) = mx(r, k);
            F.y_action(r, k) = my(r, k);
            F.x_action(n + r, n + k) = my(r, k);
            F.y_action(n + r, n + k) = mx(r, k);
        }
    }
    return F;
}

Constellation constellation_from_cluster(int n, const ClusterPoint& p, Twist twist)
{
    if (!is_fixed(n, p))
        return doubled_constellation(n, cluster_ideal(n, p), p.to_string());
    return twisted_quotient(n, fixed_thickening(n, p), sign_of(twist), 2 * n, p.to_string() + " " + to_string(twist),
                            twist);
}

Constellation stacky_cluster(int n, const ClusterPoint& p, Twist twist)
{
    if (!is_fixed(n, p))
        throw std::invalid_argument(p.to_string() + " is not Z2-fixed");
    return twisted_quotient(n, cluster_ideal(n, p), sign_of(twist), n, p.to_string() + " " + to_string(twist), twist);
}

std::vector<QVec> weight_components(const Constellation& F, const QVec& v)
{
    std::map<int, QVec> parts;
    for (int k = 0; k < F.dim(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        auto [it, fresh] = parts.try_emplace(F.weights[k], QVec(F.dim()));
        it->second[k] = v[k];
    }
    std::vector<QVec> out;
    for (auto& [w, p] : parts)
        out.push_back(std::move(p));
    return out;
}

Character subspace_character(const Constellation& F, const std::vector<QVec>& homogeneous)
{
    const GroupSpec g = dihedral(F.n);
    std::map<int, std::vector<QVec>> by_weight;
    for (const auto& v : homogeneous) {
        const int w = weight_of(F, v);
        if (w >= 0)
            by_weight[w].push_back(v);
    }
    Character chi{g, {}, F.origin};
    const CycloElt t0 = tau_trace_on(F, by_weight[0]);
    const CycloElt th = F.n % 2 == 0 ? tau_trace_on(F, by_weight[F.n / 2]) : CycloElt::constant(F.n, 0);
    for (const auto& cl : conj_classes(g)) {
        CycloElt val(F.n);
        switch (cl.kind) {
        case ConjClass::identity:
            val = CycloElt::constant(F.n, static_cast<long>(homogeneous.size()));
            break;
        case ConjClass::sigma_power:
            for (const auto& [w, vs] : by_weight)
                val += CycloElt::monomial(F.n, static_cast<long>(cl.index) * w, static_cast<long>(vs.size()));
            break;
        case ConjClass::tau_class:
            val = cl.index == 0 ? t0 + th : t0 - th;
            break;
        }
        chi.values.push_back(val);
    }
    return chi;
}

Character character(const Constellation& F)
{
    std::vector<QVec> basis;
    for (int k = 0; k < F.dim(); ++k)
        basis.push_back(unit(F.dim(), k));
    return subspace_character(F, basis);
}

bool regular_check(const Constellation& F)
{
    return same_character(character(F), regular_character(dihedral(F.n)));
}

bool structure_check(const Constellation& F)
{
    const int d = F.dim();
    const QMatrix& X = F.x_action;
    const QMatrix& Y = F.y_action;
    const QMatrix& T = F.tau_action;
    if (!(X * Y == Y * X) || !(T * T == QMatrix::identity(d)) || !(T * X * T == Y))
        return false;
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) {
            if (sgn(X(r, c)) != 0 && F.weights[r] != mod(F.weights[c] + 1, F.n))
                return false;
            if (sgn(Y(r, c)) != 0 && F.weights[r] != mod(F.weights[c] - 1, F.n))
                return false;
            if (sgn(T(r, c)) != 0 && F.weights[r] != mod(-F.weights[c], F.n))
                return false;
        }
    return true;
}

std::vector<QVec> socle_vectors(const Constellation& F)
{
    const int d = F.dim();
    std::map<int, std::vector<int>> cols;
    for (int k = 0; k < d; ++k)
        cols[F.weights[k]].push_back(k);
    std::vector<QVec> out;
    for (const auto& [w, cs] : cols) {
        QMatrix m(2 * d, static_cast<int>(cs.size()));
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (int r = 0; r < d; ++r) {
                m(r, static_cast<int>(j)) = F.x_action(r, cs[j]);
                m(d + r, static_cast<int>(j)) = F.y_action(r, cs[j]);
            }
        for (const auto& kv : nullspace(m)) {
            QVec v(d);
            for (std::size_t j = 0; j < cs.size(); ++j)
                v[cs[j]] = kv[j];
            out.push_back(std::move(v));
        }
    }
    return out;
}

RClass socle(const Constellation& F)
{
    return decompose(subspace_character(F, socle_vectors(F)));
}

RClass top(const Constellation& F)
{
    Subspace image(F.dim());
    for (int k = 0; k < F.dim(); ++k) {
        image.add(F.x_action.col(k));
        image.add(F.y_action.col(k));
    }
    return decompose(difference(character(F), subspace_character(F, image.basis())));
}

Closure submodule_closure(const Constellation& F, const std::vector<QVec>& seeds)
{
    Subspace S(F.dim());
    std::deque<QVec> queue;
    for (const auto& s : seeds)
        for (auto& part : weight_components(F, s))
            queue.push_back(std::move(part));
    while (!queue.empty()) {
        QVec v = std::move(queue.front());
        queue.pop_front();
        if (!S.add(v))
            continue;
        queue.push_back(F.x_action * v);
        queue.push_back(F.y_action * v);
        queue.push_back(F.tau_action * v);
    }
    return {S.basis(), decompose(subspace_character(F, S.basis()))};
}

StabilityParam StabilityParam::make(int n, std::map<std::string, Rat> theta, bool require_generic)
{
    const CharTable t = char_table(dihedral(n));
    Rat total = 0;
    for (const auto& rho : t.irreps) {
        auto it = theta.find(rho.name);
        if (it == theta.end())
            throw InvalidTheta("theta has no value on " + rho.name);
        total += it->second * rho.degree();
    }
    if (theta.size() != t.irreps.size())
        throw InvalidTheta("theta names an unknown representation");
    if (sgn(total) != 0)
        throw InvalidTheta("theta(C[G]) = " + total.get_str() + ", expected 0");
    StabilityParam p{n, std::move(theta)};
    if (require_generic && !is_generic(p))
        throw InvalidTheta("theta vanishes on a proper class");
    return p;
}

Rat StabilityParam::operator()(const RClass& c) const
{
    Rat v = 0;
    for (const auto& [name, mult] : c)
        v += theta.at(name) * mult;
    return v;
}

bool is_generic(const StabilityParam& theta)
{
    const CharTable t = char_table(dihedral(theta.n));
    std::vector<int> deg;
    std::vector<Rat> val;
    double count = 1;
    for (const auto& rho : t.irreps) {
        deg.push_back(static_cast<int>(rho.degree().get_num().get_si()));
        val.push_back(theta.theta.at(rho.name));
        count *= deg.back() + 1;
    }
    if (count > double(1 << 22)) {
        for (const auto& v : val)
            if (sgn(v) == 0)
                return false;
        return true;
    }
    std::vector<int> c(deg.size(), 0);
    while (true) {
        std::size_t k = 0;
        while (k < c.size() && c[k] == deg[k])
            c[k++] = 0;
        if (k == c.size())
            return true;
        ++c[k];
        if (c == deg)
            continue;
        Rat s = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j])
                s += val[j] * c[j];
        if (sgn(s) == 0)
            return false;
    }
}

SeedFamily default_family(const Constellation& F)
{
    const int d = F.dim();
    SeedFamily fam;
    for (int k = 0; k < d; ++k)
        fam.push_back({unit(d, k)});
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) {
            if (F.weights[u] != F.weights[v] && F.weights[u] != mod(-F.weights[v], F.n))
                continue;
            for (int s : {1, -1}) {
                QVec e = unit(d, u);
                e[v] = s;
                fam.push_back({e});
            }
        }
    return fam;
}

ThetaVerdict theta_check(const Constellation& F, const StabilityParam& theta, const SeedFamily& family)
{
    ThetaVerdict out;
    for (std::size_t k = 0; k < family.size(); ++k) {
        Closure c = submodule_closure(F, family[k]);
        const int dim = static_cast<int>(c.basis.size());
        if (dim == 0 || dim == F.dim())
            continue;
        ++out.checked;
        const Rat v = theta(c.cls);
        if (sgn(v) <= 0) {
            out.destabilized = true;
            out.seed_index = k;
            out.closure = std::move(c);
            out.value = v;
            return out;
        }
    }
    return out;
}

bool destabilizer_is_sound(const Constellation& F, const StabilityParam& theta, const ThetaVerdict& v)
{
    if (!v.destabilized)
        return true;
    const auto& B = v.closure.basis;
    if (B.empty() || static_cast<int>(B.size()) >= F.dim())
        return false;
    Subspace S(F.dim());
    for (const auto& b : B)
        if (!S.add(b))
            return false;
    for (const auto& b : B)
        if (!S.contains(F.x_action * b) || !S.contains(F.y_action * b) || !S.contains(F.tau_action * b))
            return false;
    const RClass cls = decompose(subspace_character(F, S.basis()));
    return cls == v.closure.cls && theta(cls) == v.value && sgn(v.value) <= 0;
}

// ---- strata ----

std::vector<Witness> stratum_witnesses(int n, const Rat& alpha)
{
    if (n < 3)
        throw std::invalid_argument("strata need n >= 3");
    if (sgn(alpha) == 0 || alpha * alpha == 1)
        throw std::invalid_argument("alpha must be nonzero and different from +-1");
    const int m = half_index(n);
    const bool even = n % 2 == 0;
    std::vector<Witness> out;
    auto doubled = [&](const std::string& stratum, const ClusterPoint& p) {
        Witness w{stratum, p.to_string() + " + image", doubled_constellation(n, cluster_ideal(n, p), p.to_string()),
                  std::nullopt, true};
        out.push_back(std::move(w));
    };
    const int last_generic = even ? m - 1 : m;
    for (int i = 1; i <= last_generic; ++i)
        doubled(y_divisor(i), ClusterPoint::make(i, 1, alpha));
    for (int i = 1; i <= m - 1; ++i)
        doubled(y_divisor(i) + "^" + y_divisor(i + 1), ClusterPoint::make(i, 0, 1));
    if (even) {
        doubled(y_divisor(m), ClusterPoint::make(m, 1, alpha));
        const std::pair<const char*, int> stacky[] = {{"B1", -1}, {"B2", 1}};
        for (const auto& [label, b] : stacky) {
            const ClusterPoint p = ClusterPoint::make(m, 1, b);
            out.push_back({label, p.to_string() + " " + to_string(Twist::delta1),
                           constellation_from_cluster(n, p, Twist::delta1), stacky_cluster(n, p, Twist::delta1), true});
        }
    }
    const std::string off = "J_1(1," + alpha.get_str() + ")";
    out.push_back({"off", off + " + image", doubled_constellation(n, universal_ideal(n, 1, 1, alpha), off),
                   std::nullopt, false});
    return out;
}

namespace {

RClass make_class(int n, const std::map<std::string, int>& counts)
{
    RClass out;
    for (const auto& rho : char_table(dihedral(n)).irreps) {
        auto it = counts.find(rho.name);
        if (it != counts.end() && it->second)
            out.emplace_back(rho.name, it->second);
    }
    return out;
}

} // namespace

std::vector<ExpectedRow> expected_socle_table(int n)
{
    const int m = half_index(n);
    const bool even = n % 2 == 0;
    const RClass top0 = make_class(n, {{rho_name(0), 1}, {rho_name(0, true), 1}});
    std::vector<ExpectedRow> out;
    for (int i = 1; i <= (even ? m - 1 : m); ++i)
        out.push_back({y_divisor(i), top0, make_class(n, {{rho_name(i), 1}}), false});
    for (int i = 1; i <= m - 1; ++i) {
        std::map<std::string, int> s{{rho_name(i), 1}, {rho_name(i + 1), 1}};
        if (even && i == m - 1)
            s[rho_name(m, true)] = 1;
        out.push_back({y_divisor(i) + "^" + y_divisor(i + 1), top0, make_class(n, s), false});
    }
    if (even) {
        out.push_back({y_divisor(m), top0, make_class(n, {{rho_name(m), 1}, {rho_name(m, true), 1}}), false});
        out.push_back({"B1", top0, make_class(n, {{rho_name(m, true), 1}}), true});
        out.push_back({"B2", top0, make_class(n, {{rho_name(m), 1}}), true});
    }
    out.push_back({"off", {}, {}, false});
    return out;
}

std::vector<SocleRow> socle_table(int n, const Rat& alpha)
{
    const auto expected = expected_socle_table(n);
    std::vector<SocleRow> out;
    for (const auto& w : stratum_witnesses(n, alpha)) {
        SocleRow r;
        r.stratum = w.stratum;
        r.witness = w.description;
        r.top = top(w.module);
        r.socle = socle(w.half ? *w.half : w.module);
        r.regular = regular_check(w.module);
        bool found = false;
        for (const auto& e : expected)
            if (e.stratum == w.stratum) {
                r.expected_top = e.top;
                r.expected_socle = e.socle;
                found = true;
            }
        if (!found)
            throw std::logic_error("no expected row for " + w.stratum);
        r.top_matches = r.top == r.expected_top;
        r.socle_matches = r.socle == r.expected_socle;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace mckay
