#include "mckay/hilb.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

int half_index(int n)
{
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    return n % 2 ? (n - 1) / 2 : n / 2;
}

ClusterPoint ClusterPoint::make(int i, const Rat& a, const Rat& b)
{
    if (sgn(a) == 0 && sgn(b) == 0)
        throw std::invalid_argument("projective pair (0:0)");
    if (sgn(a) != 0)
        return {i, Rat(1), b / a};
    return {i, Rat(0), Rat(1)};
}

std::string ClusterPoint::to_string() const
{
    return "I_" + std::to_string(i) + "(" + a.get_str() + ":" + b.get_str() + ")";
}

namespace {

Poly xpow(int k)
{
    return Poly::monomial({k, 0, 0});
}

Poly ypow(int k)
{
    return Poly::monomial({0, k, 0});
}

Poly xy(int k = 1)
{
    return Poly::monomial({k, k, 0});
}

void check_index(int n, int i)
{
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("cluster index out of range 1..n-1");
}

} // namespace

Ideal cluster_ideal(int n, const ClusterPoint& p)
{
    check_index(n, p.i);
    return Ideal({xpow(p.i) * p.a - ypow(n - p.i) * p.b, xpow(p.i + 1), xy(), ypow(n + 1 - p.i)});
}

ClusterPoint z2_image(int n, const ClusterPoint& p)
{
    check_index(n, p.i);
    return ClusterPoint::make(n - p.i, p.b, p.a);
}

bool z2_image_certified(int n, const ClusterPoint& p)
{
    const Ideal I = cluster_ideal(n, p);
    std::vector<Poly> swapped;
    for (const auto& g : I.generators())
        swapped.push_back(g.swap_xy());
    return Ideal(swapped) == cluster_ideal(n, z2_image(n, p));
}

Ideal universal_ideal(int n, int i, const Rat& xi, const Rat& eta)
{
    check_index(n, i);
    return Ideal({xpow(i) - ypow(n - i) * xi, ypow(n + 1 - i) - xpow(i - 1) * eta, xy() - Poly(xi * eta)});
}

std::vector<FixedPoint> fixed_points(int n)
{
    if (n < 3)
        throw std::invalid_argument("fixed points need n >= 3");
    std::vector<FixedPoint> out;
    for (int i = 1; i <= n - 1; ++i) {
        const int j = n - i;
        if (j < i - 1 || j > i + 1)
            continue;
        // (a:b) ~ (b:a) forces a^2 - b^2 = 0 on the affine patch b = 1.
        std::vector<ClusterPoint> cands{ClusterPoint::make(i, 0, 1), ClusterPoint::make(i, 1, 0)};
        for (const auto& r : rational_roots(UPoly({Rat(-1), Rat(0), Rat(1)})))
            cands.push_back(ClusterPoint::make(i, r, 1));
        for (const auto& p : cands) {
            const ClusterPoint img = z2_image(n, p);
            const Ideal I = cluster_ideal(n, p);
            if (!(I == cluster_ideal(n, img)))
                continue;
            bool seen = false;
            for (const auto& f : out)
                seen = seen || f.basis == I.basis();
            if (!seen)
                out.push_back({p, img, I.basis()});
        }
    }
    return out;
}

std::string x1_divisor(int k)
{
    return "E~" + std::to_string(k);
}

std::string y_divisor(int k)
{
    return "E" + std::to_string(k);
}

HilbAtlas x1_atlas(int n)
{
    if (n < 2)
        throw std::invalid_argument("X1 needs n >= 2");
    HilbAtlas h{n, {}, {}};
    for (int i = 1; i <= n; ++i) {
        Chart c;
        c.name = "U" + std::to_string(i);
        c.atoms = plane_atoms();
        c.coords = {{i, -(n - i)}, {-(i - 1), n + 1 - i}};
        c.coord_names = {laurent_string(c.coords[0], c.atoms.names), laurent_string(c.coords[1], c.atoms.names)};
        c.lattice_index = n;
        if (i >= 2)
            c.exceptional_axes[0] = x1_divisor(i - 1);
        if (i <= n - 1)
            c.exceptional_axes[1] = x1_divisor(i);
        h.charts.push_back(std::move(c));
    }
    for (int i = 1; i <= n - 1; ++i)
        h.divisor_tags.push_back("(x^" + std::to_string(i) + " : y^" + std::to_string(n - i) + ")");
    return h;
}

std::vector<Chart> y1_atlas(int n)
{
    const int m = half_index(n);
    AtomSet atoms{{"s", "t"}, {xy(), xpow(n) + ypow(n)}};
    std::vector<Chart> out;
    for (int j = 1; j <= m + 1; ++j) {
        Chart c;
        c.name = "Y" + std::to_string(j);
        c.atoms = atoms;
        if (j <= m)
            c.coords = {{j, -1}, {-(j - 1), 1}};
        else
            c.coords = {{1, 0}, {-m, 1}};
        c.coord_names = {laurent_string(c.coords[0], atoms.names), laurent_string(c.coords[1], atoms.names)};
        if (j >= 2)
            c.exceptional_axes[0] = y_divisor(j - 1);
        if (j <= m)
            c.exceptional_axes[1] = y_divisor(j);
        out.push_back(std::move(c));
    }
    return out;
}

Poly to_invariants(int n, const Poly& f)
{
    const Poly s = xy();
    const Poly t = xpow(n) + ypow(n);
    Poly rest = f;
    Poly out;
    while (!rest.is_zero()) {
        const Exp e = rest.lead_exp();
        if (e[2] != 0 || e[0] < e[1] || (e[0] - e[1]) % n != 0)
            throw std::domain_error("not an invariant polynomial: " + f.to_string());
        const int a = e[1];
        const int b = (e[0] - e[1]) / n;
        const Rat c = rest.lead_coeff();
        rest -= s.pow(a) * t.pow(b) * c;
        out.add_term({a, b, 0}, c);
    }
    return out;
}

std::vector<int> x1_pairing(int n, const Poly& f)
{
    const HilbAtlas h = x1_atlas(n);
    std::vector<int> out;
    for (int k = 1; k <= n - 1; ++k) {
        const Pullback here = pullback_orders(h.charts[k - 1], f);
        const Pullback next = pullback_orders(h.charts[k], f);
        out.push_back(restrict_to_axis(here.strict, 1).total + order_at_origin(next.strict, 0));
    }
    return out;
}

std::vector<int> y1_pairing(int n, const Poly& g)
{
    const auto charts = y1_atlas(n);
    const int m = half_index(n);
    std::vector<int> out;
    for (int k = 1; k <= m; ++k) {
        const Pullback here = pullback_orders(charts[k - 1], g);
        const Pullback next = pullback_orders(charts[k], g);
        out.push_back(restrict_to_axis(here.strict, 1).total + order_at_origin(next.strict, 0));
    }
    return out;
}

std::vector<Rat> folded_pairing(int n, const Poly& f)
{
    const auto tilde = x1_pairing(n, f);
    const int m = half_index(n);
    std::vector<Rat> out;
    for (int a = 1; a <= m; ++a) {
        int sum = tilde[a - 1];
        if (2 * a != n)
            sum += tilde[n - a - 1];
        out.push_back(make_rat(sum, 2));
    }
    return out;
}

std::vector<BoundaryEquation> boundary_equations(int n)
{
    const int m = half_index(n);
    std::vector<BoundaryEquation> out;
    if (n % 2 == 0) {
        Poly b1 = xpow(m) + ypow(m);
        Poly b2 = xpow(m) - ypow(m);
        out.push_back({"B1", b1, b1 * b1});
        out.push_back({"B2", b2, b2 * b2});
    } else {
        Poly b3 = xpow(n) - ypow(n);
        out.push_back({"B3", b3, b3 * b3});
    }
    return out;
}

namespace {

std::vector<StrictTransform> strict_records(const std::string& label, const Poly& f, const std::vector<Chart>& charts)
{
    std::vector<StrictTransform> out;
    for (std::size_t ci = 0; ci < charts.size(); ++ci) {
        const Chart& c = charts[ci];
        StrictTransform st;
        st.label = label;
        st.chart = c.name;
        st.chart_index = static_cast<int>(ci) + 1;
        st.pullback = pullback_orders(c, f);
        st.constant_term = st.pullback.strict.constant_term();
        bool axes_constant = true;
        for (const auto& [axis, divisor] : c.exceptional_axes) {
            const Poly r = st.pullback.strict.eval_var(axis, 0);
            AxisRecord rec{axis, divisor, r.to_string({c.coord_label(0), c.coord_label(1), ""}),
                           restrict_to_axis(st.pullback.strict, axis)};
            if (rec.meeting.total > 0)
                st.meets = true;
            if (!r.is_constant())
                axes_constant = false;
            st.axes.push_back(std::move(rec));
        }
        st.constant_certificate = sgn(st.constant_term) != 0 && axes_constant;
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace

std::vector<StrictTransform> boundary_strict_transforms(int n)
{
    const HilbAtlas h = x1_atlas(n);
    std::vector<StrictTransform> out;
    for (const auto& b : boundary_equations(n)) {
        auto recs = strict_records(b.label, b.equation, h.charts);
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

std::vector<int> boundary_named_charts(int n)
{
    const int m = half_index(n);
    return {m, m + 1};
}

std::vector<StrictTransform> y1_boundary_transforms(int n)
{
    const auto charts = y1_atlas(n);
    std::vector<StrictTransform> out;
    for (const auto& b : boundary_equations(n)) {
        auto recs = strict_records(b.label, to_invariants(n, b.equation), charts);
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

bool boundary_identity_holds(int n)
{
    const int m = half_index(n);
    const Poly t = xpow(n) + ypow(n);
    if (n % 2 == 1)
        return t * t - xy(n) * Rat(4) == (xpow(n) - ypow(n)).pow(2);
    const Poly f1 = xpow(m) + ypow(m);
    const Poly f2 = xpow(m) - ypow(m);
    return f1 * f1 - f2 * f2 == xy(m) * Rat(4) && f1 * f1 == t + xy(m) * Rat(2) &&
           (f1 * f2).pow(2) == t * t - xy(n) * Rat(4);
}

} // namespace mckay
