#include "mckay/charts.hpp"

#include "mckay/linalg.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace mckay {

AtomSet plane_atoms()
{
    return {{"x", "y"}, {Poly::var(0), Poly::var(1)}};
}

std::string laurent_string(const IVec& e, const std::vector<std::string>& names)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0)
            continue;
        if (!first)
            out << "*";
        first = false;
        out << names[k];
        if (e[k] != 1)
            out << "^" << e[k];
    }
    return first ? "1" : out.str();
}

std::string Chart::coord_label(int k) const
{
    if (k < static_cast<int>(coord_names.size()) && !coord_names[k].empty())
        return coord_names[k];
    return laurent_string(coords.at(k), atoms.names);
}

namespace {

QMatrix exponent_matrix(const Chart& c)
{
    QMatrix m(c.dim(), c.atoms.size());
    for (int r = 0; r < c.dim(); ++r)
        for (int k = 0; k < c.atoms.size(); ++k)
            m(r, k) = c.coords[r].at(k);
    return m;
}

IVec to_ivec(const Exp& e, int len)
{
    IVec v(len, 0);
    for (int k = 0; k < 3; ++k) {
        if (k < len)
            v[k] = e[k];
        else if (e[k] != 0)
            throw std::invalid_argument("polynomial uses more variables than the chart has atoms");
    }
    return v;
}

Exp to_exp(const IVec& v)
{
    if (v.size() > 3)
        throw std::invalid_argument("at most three chart coordinates are supported");
    Exp e{0, 0, 0};
    for (std::size_t k = 0; k < v.size(); ++k)
        e[k] = v[k];
    return e;
}

std::array<std::string, 3> atom_names3(const Chart& c)
{
    std::array<std::string, 3> n{"", "", ""};
    for (int k = 0; k < std::min(3, c.atoms.size()); ++k)
        n[k] = c.atoms.names[k];
    return n;
}

} // namespace

int chart_rank(const Chart& c)
{
    return rank(exponent_matrix(c));
}

Rat chart_det(const Chart& c)
{
    if (c.dim() != c.atoms.size())
        throw std::invalid_argument("determinant of a non-square chart");
    return determinant(exponent_matrix(c));
}

bool chart_is_smooth(const Chart& c)
{
    if (c.dim() == c.atoms.size())
        return abs(chart_det(c)) == c.lattice_index;
    return chart_rank(c) == c.dim();
}

IVec express_monomial(const Chart& c, const IVec& m)
{
    if (static_cast<int>(m.size()) != c.atoms.size())
        throw std::invalid_argument("monomial length differs from atom count");
    QVec rhs(m.begin(), m.end());
    auto sol = solve(exponent_matrix(c).transpose(), rhs);
    if (!sol)
        throw NoIntegerSolution(laurent_string(m, c.atoms.names) + " is not a monomial on " + c.name);
    IVec out;
    for (const auto& v : *sol) {
        if (!is_integer(v))
            throw NoIntegerSolution(laurent_string(m, c.atoms.names) + " has fractional exponents on " + c.name);
        out.push_back(static_cast<int>(v.get_num().get_si()));
    }
    return out;
}

Pullback pullback_orders(const Chart& c, const Poly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("pullback of the zero polynomial");
    const int d = c.dim();
    std::vector<std::pair<IVec, Rat>> terms;
    for (const auto& [e, coef] : f.terms())
        terms.emplace_back(express_monomial(c, to_ivec(e, c.atoms.size())), coef);
    Pullback out;
    IVec shift(d, 0);
    for (const auto& [axis, label] : c.exceptional_axes) {
        int lo = INT_MAX;
        for (const auto& t : terms)
            lo = std::min(lo, t.first[axis]);
        out.orders[axis] = lo;
        shift[axis] = lo;
    }
    for (auto& [alpha, coef] : terms) {
        for (int k = 0; k < d; ++k) {
            alpha[k] -= shift[k];
            if (alpha[k] < 0)
                throw NotInChart(f.to_string(atom_names3(c)) + " has a pole along " + c.coord_label(k) + " on " + c.name);
        }
        out.strict.add_term(to_exp(alpha), coef);
    }
    return out;
}

Poly reexpand(const Chart& c, const Pullback& p)
{
    Poly out;
    for (const auto& [e, coef] : p.strict.terms()) {
        IVec atom(c.atoms.size(), 0);
        for (int k = 0; k < c.dim(); ++k) {
            int power = e[k];
            auto it = p.orders.find(k);
            if (it != p.orders.end())
                power += it->second;
            for (int j = 0; j < c.atoms.size(); ++j)
                atom[j] += power * c.coords[k][j];
        }
        out.add_term(to_exp(atom), coef);
    }
    return out;
}

AxisMeeting restrict_to_axis(const Poly& equation, int axis)
{
    if (axis < 0 || axis > 1)
        throw std::invalid_argument("axis restriction needs a 2-dimensional chart");
    Poly r = equation.eval_var(axis, 0);
    if (r.is_zero())
        throw CurveContainsAxis("curve " + equation.to_string() + " contains the axis");
    const UPoly u = UPoly::from_poly(r, 1 - axis);
    AxisMeeting m;
    for (auto& [factor, mult] : squarefree_factors(u)) {
        AxisFactor af{factor, mult, rational_roots(factor)};
        m.total += factor.degree() * mult;
        m.factors.push_back(std::move(af));
    }
    return m;
}

int local_intersection(const LocalCurve& curve, int axis)
{
    return restrict_to_axis(curve.equation, axis).total;
}

int order_at_origin(const Poly& equation, int axis)
{
    Poly r = equation.eval_var(axis, 0);
    if (r.is_zero())
        throw CurveContainsAxis("curve " + equation.to_string() + " contains the axis");
    const UPoly u = UPoly::from_poly(r, 1 - axis);
    int k = 0;
    while (sgn(u.coeffs()[k]) == 0)
        ++k;
    return k;
}

std::optional<IMat> monomial_transition(const Chart& a, const Chart& b)
{
    if (a.atoms.names != b.atoms.names)
        throw std::invalid_argument("charts over different atoms");
    IMat t;
    for (const auto& row : b.coords) {
        try {
            t.push_back(express_monomial(a, row));
        } catch (const NoIntegerSolution&) {
            return std::nullopt;
        }
    }
    return t;
}

std::optional<int> wall_axis(const IMat& t)
{
    const int d = static_cast<int>(t.size());
    for (int k = 0; k < d; ++k) {
        IVec inv(d, 0);
        inv[k] = -1;
        int inv_rows = 0;
        for (const auto& row : t)
            if (row == inv)
                ++inv_rows;
        if (inv_rows != 1)
            continue;
        std::vector<bool> used(d, false);
        bool ok = true;
        for (const auto& row : t) {
            if (row == inv)
                continue;
            int hit = -1;
            for (int j = 0; j < d && ok; ++j) {
                if (j == k || row[j] == 0)
                    continue;
                if (row[j] != 1 || hit >= 0)
                    ok = false;
                hit = j;
            }
            if (!ok || hit < 0 || used[hit]) {
                ok = false;
                break;
            }
            used[hit] = true;
        }
        if (ok)
            return k;
    }
    return std::nullopt;
}

bool verify_gluing(const Chart& a, const Chart& b)
{
    if (a.atoms.names != b.atoms.names)
        return false;
    if (a.coords == b.coords)
        return true;
    auto t = monomial_transition(a, b);
    return t && wall_axis(*t).has_value();
}

} // namespace mckay
