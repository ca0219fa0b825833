#include "mckay/intersect.hpp"

#include "mckay/hilb.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace mckay {

int CurveConfig::index_of(const std::string& label) const
{
    for (int k = 0; k < size(); ++k)
        if (labels[k] == label)
            return k;
    throw std::out_of_range("no curve " + label);
}

Rat BoundaryData::coeff(const std::string& label) const
{
    for (const auto& c : components)
        if (c.label == label)
            return c.coeff;
    throw std::out_of_range("no boundary component " + label);
}

CurveConfig an_chain(int k)
{
    if (k < 0)
        throw std::invalid_argument("chain length must be nonnegative");
    CurveConfig c;
    c.Q = QMatrix(k, k);
    for (int i = 0; i < k; ++i) {
        c.labels.push_back(x1_divisor(i + 1));
        c.Q(i, i) = -2;
        if (i + 1 < k) {
            c.Q(i, i + 1) = 1;
            c.Q(i + 1, i) = 1;
        }
        c.K_dot.push_back(0);
        c.boundary_dot.emplace_back();
        c.discrepancy.push_back(0);
    }
    return c;
}

namespace {

const Rat half = make_rat(1, 2);

int order_of(const Poly& f)
{
    int lo = INT_MAX;
    for (const auto& [e, c] : f.terms())
        lo = std::min(lo, e[0] + e[1] + e[2]);
    return lo;
}

std::string point_name(const StrictTransform& st, const AxisRecord& ax, const Rat& r)
{
    const std::string at = ax.axis == 0 ? "(0, " + r.get_str() + ")" : "(" + r.get_str() + ", 0)";
    return st.chart + ": " + st.label + " ^ " + ax.divisor + " at " + at;
}

} // namespace

BoundaryData fold_boundary(int n)
{
    BoundaryData b;
    for (const auto& eq : boundary_equations(n))
        b.components.push_back({eq.label, half});
    // Keep, per (component, curve), the meetings seen in the highest-index
    // chart: consecutive Y1 charts show the same boundary points twice.
    std::map<std::pair<std::string, std::string>, std::vector<BoundaryPoint>> seen;
    for (const auto& st : y1_boundary_transforms(n)) {
        for (const auto& ax : st.axes) {
            if (ax.meeting.total == 0)
                continue;
            std::vector<BoundaryPoint> pts;
            for (const auto& f : ax.meeting.factors) {
                if (f.rational_points.empty()) {
                    pts.push_back({st.chart + ": " + st.label + " ^ " + ax.divisor + " along " + f.factor.to_string(),
                                   {{st.label, 1}},
                                   {ax.divisor}});
                    continue;
                }
                for (const auto& r : f.rational_points) {
                    std::array<Poly, 3> img{Poly::var(0), Poly::var(1), Poly()};
                    img[1 - ax.axis] = Poly::var(1 - ax.axis) + Poly(r);
                    const int mult = order_of(st.pullback.strict.substitute(img));
                    pts.push_back({point_name(st, ax, r), {{st.label, mult}}, {ax.divisor}});
                }
            }
            seen[{st.label, ax.divisor}] = std::move(pts);
        }
    }
    for (auto& [key, pts] : seen)
        for (auto& p : pts)
            b.points.push_back(std::move(p));
    return b;
}

BoundaryData quotient_boundary(int n)
{
    BoundaryData b;
    BoundaryPoint origin{"origin", {}, {}};
    for (const auto& eq : boundary_equations(n)) {
        b.components.push_back({eq.label, half});
        // C^2/G = Spec Q[s, t] is smooth; the order is taken in (s, t).
        origin.mult[eq.label] = order_of(to_invariants(n, eq.equation));
    }
    b.points.push_back(std::move(origin));
    return b;
}

CurveConfig z2_fold(const CurveConfig& chain, int n)
{
    if (!(chain.Q == an_chain(n - 1).Q))
        throw std::invalid_argument("fold expects the A_{n-1} chain");
    const int m = half_index(n);
    std::vector<QVec> pull;
    for (int i = 1; i <= m; ++i) {
        QVec v(n - 1);
        v[i - 1] += 1;
        if (2 * i != n)
            v[n - i - 1] += 1;
        pull.push_back(std::move(v));
    }
    CurveConfig c;
    c.Q = QMatrix(m, m);
    for (int a = 0; a < m; ++a) {
        c.labels.push_back(y_divisor(a + 1));
        const QVec qa = chain.Q * pull[a];
        for (int b = 0; b < m; ++b) {
            Rat s = 0;
            for (int k = 0; k < n - 1; ++k)
                s += qa[k] * pull[b][k];
            c.Q(a, b) = s * half;
        }
    }
    c.boundary_dot.assign(m, {});
    c.K_dot.assign(m, 0);
    for (const auto& eq : boundary_equations(n)) {
        const auto dots = folded_pairing(n, eq.equation);
        for (int a = 0; a < m; ++a) {
            c.boundary_dot[a][eq.label] = dots[a];
            // K_Y1 = L with 2L = -(reduced boundary).
            c.K_dot[a] -= dots[a] * half;
        }
    }
    c.discrepancy = solve_discrepancies(c, fold_boundary(n));
    return c;
}

std::vector<Rat> solve_discrepancies(const CurveConfig& c, const BoundaryData& b)
{
    const int k = c.size();
    if (k == 0)
        return {};
    QVec rhs(k);
    for (int j = 0; j < k; ++j) {
        rhs[j] = c.K_dot[j];
        for (const auto& [label, dot] : c.boundary_dot[j])
            rhs[j] += b.coeff(label) * dot;
    }
    auto a = solve(c.Q, rhs);
    if (!a)
        throw std::domain_error("degenerate intersection matrix");
    return *a;
}

bool adjunction_holds(const CurveConfig& c)
{
    for (int i = 0; i < c.size(); ++i)
        if (c.K_dot[i] + c.Q(i, i) != -2)
            return false;
    return true;
}

CurveConfig blow_down(const CurveConfig& c, int curve)
{
    if (curve < 0 || curve >= c.size())
        throw std::out_of_range("curve index out of range");
    if (c.Q(curve, curve) != -1 || c.K_dot[curve] != -1)
        throw NotContractible(c.labels[curve] + " has E^2 = " + c.Q(curve, curve).get_str() +
                              ", K.E = " + c.K_dot[curve].get_str());
    std::vector<int> keep;
    for (int i = 0; i < c.size(); ++i)
        if (i != curve)
            keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    CurveConfig out;
    out.Q = QMatrix(k, k);
    for (int a = 0; a < k; ++a) {
        const int i = keep[a];
        const Rat& qi = c.Q(i, curve);
        out.labels.push_back(c.labels[i]);
        for (int b = 0; b < k; ++b)
            out.Q(a, b) = c.Q(i, keep[b]) + qi * c.Q(keep[b], curve);
        out.K_dot.push_back(c.K_dot[i] + qi * c.K_dot[curve]);
        auto bd = c.boundary_dot[i];
        for (const auto& [label, dot] : c.boundary_dot[curve])
            bd[label] += qi * dot;
        out.boundary_dot.push_back(std::move(bd));
        out.discrepancy.push_back(c.discrepancy[i]);
    }
    return out;
}

DominationChain domination_chain(int n)
{
    DominationChain ch;
    ch.stages.push_back(z2_fold(an_chain(n - 1), n));
    while (ch.stages.back().size() > 0) {
        const CurveConfig& cur = ch.stages.back();
        std::vector<int> cands;
        for (int i = 0; i < cur.size(); ++i)
            if (cur.Q(i, i) == -1 && cur.K_dot[i] == -1)
                cands.push_back(i);
        if (cands.size() != 1)
            ch.unique_choice = false;
        if (cands.empty())
            throw NotContractible("no (-1)-curve left in a nonempty configuration");
        ch.contracted.push_back(cur.labels[cands.front()]);
        CurveConfig next = blow_down(cur, cands.front());
        ch.stages.push_back(std::move(next));
    }
    return ch;
}

Rat blowup_discrepancy(const BoundaryData& b, const std::map<std::string, int>& mult, const std::vector<Rat>& prior)
{
    Rat a = 1;
    for (const auto& p : prior)
        a += p;
    for (const auto& [label, k] : mult)
        a -= b.coeff(label) * k;
    return a;
}

MaximalityCertificate is_maximal(const CurveConfig& c, const BoundaryData& b)
{
    MaximalityCertificate cert;
    cert.discrepancies_in_range = true;
    for (int i = 0; i < c.size(); ++i)
        if (!(c.discrepancy[i] > -1 && c.discrepancy[i] <= 0)) {
            cert.discrepancies_in_range = false;
            cert.failures.push_back("a(" + c.labels[i] + ") = " + c.discrepancy[i].get_str() + " outside (-1, 0]");
        }
    for (int i = 0; i < c.size(); ++i)
        cert.candidates.push_back({"general point of " + c.labels[i], blowup_discrepancy(b, {}, {c.discrepancy[i]})});
    for (const auto& comp : b.components)
        cert.candidates.push_back({"general point of " + comp.label, blowup_discrepancy(b, {{comp.label, 1}}, {})});
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (sgn(c.Q(i, j)) != 0)
                cert.candidates.push_back({c.labels[i] + " ^ " + c.labels[j],
                                           blowup_discrepancy(b, {}, {c.discrepancy[i], c.discrepancy[j]})});
    for (const auto& p : b.points) {
        std::vector<Rat> prior;
        for (const auto& cv : p.curves)
            prior.push_back(c.discrepancy[c.index_of(cv)]);
        cert.candidates.push_back({p.where, blowup_discrepancy(b, p.mult, prior)});
    }
    for (const auto& cand : cert.candidates)
        if (sgn(cand.discrepancy) <= 0)
            cert.failures.push_back("blow-up at " + cand.center + " gives a = " + cand.discrepancy.get_str());
    cert.maximal = cert.failures.empty();
    return cert;
}

std::pair<CurveConfig, BoundaryData> blow_up_boundary_point(const CurveConfig& c, const BoundaryData& b,
                                                            const std::string& component)
{
    const int k = c.size();
    CurveConfig out = c;
    out.Q = QMatrix(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.Q(i, j) = c.Q(i, j);
    out.Q(k, k) = -1;
    const std::string label = "G" + std::to_string(k + 1);
    out.labels.push_back(label);
    out.K_dot.push_back(-1);
    std::map<std::string, Rat> bd;
    for (const auto& comp : b.components)
        bd[comp.label] = comp.label == component ? 1 : 0;
    out.boundary_dot.push_back(std::move(bd));
    out.discrepancy.push_back(blowup_discrepancy(b, {{component, 1}}, {}));
    BoundaryData nb = b;
    nb.points.push_back({component + " ^ " + label, {{component, 1}}, {label}});
    return {out, nb};
}

std::string dual_graph_dot(const CurveConfig& c)
{
    std::ostringstream out;
    out << "graph dual {\n";
    for (int i = 0; i < c.size(); ++i)
        out << "  \"" << c.labels[i] << "\" [label=\"" << c.labels[i] << "\\n(" << c.discrepancy[i].get_str() << ", "
            << c.Q(i, i).get_str() << ")\"];\n";
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (sgn(c.Q(i, j)) != 0)
                out << "  \"" << c.labels[i] << "\" -- \"" << c.labels[j] << "\" [label=\"" << c.Q(i, j).get_str()
                    << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace mckay
