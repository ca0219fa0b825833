#include "mckay/report.hpp"

#include "mckay/hilb.hpp"
#include "mckay/repr.hpp"

#include <sstream>

namespace mckay {

namespace {

using Row = std::vector<std::string>;

std::string md_table(const Row& head, const std::vector<Row>& rows)
{
    std::ostringstream out;
    auto line = [&](const Row& r) {
        out << "|";
        for (const auto& c : r)
            out << " " << c << " |";
        out << "\n";
    };
    line(head);
    out << "|";
    for (std::size_t k = 0; k < head.size(); ++k)
        out << "---|";
    out << "\n";
    for (const auto& r : rows)
        line(r);
    return out.str();
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? sep : "") + v[k];
    return s;
}

std::string rat_list(const std::vector<Rat>& v)
{
    std::vector<std::string> s;
    for (const auto& r : v)
        s.push_back(to_string(r));
    return "(" + join(s, ", ") + ")";
}

Json rat_array(const std::vector<Rat>& v)
{
    Json a = Json::array();
    for (const auto& r : v)
        a.push_back(to_json(r));
    return a;
}

Json chart_json(const Chart& c)
{
    Json axes = Json::object();
    for (const auto& [k, label] : c.exceptional_axes)
        axes[c.coord_label(k)] = label;
    return {{"name", c.name},
            {"atoms", c.atoms.names},
            {"coords", c.coords},
            {"coord_names", c.coord_names},
            {"exceptional_axes", axes},
            {"lattice_index", c.lattice_index}};
}

Json atlas_json(const std::vector<Chart>& charts, std::vector<Row>& rows)
{
    Json cs = Json::array();
    Json glue = Json::array();
    for (std::size_t k = 0; k < charts.size(); ++k) {
        cs.push_back(chart_json(charts[k]));
        Row r{charts[k].name, join(charts[k].coord_names, ", "), std::to_string(charts[k].lattice_index)};
        std::string ax;
        for (const auto& [i, label] : charts[k].exceptional_axes)
            ax += (ax.empty() ? "" : ", ") + label + " = {" + charts[k].coord_label(i) + " = 0}";
        r.push_back(ax.empty() ? "-" : ax);
        rows.push_back(std::move(r));
        if (k + 1 < charts.size())
            glue.push_back({{"from", charts[k].name},
                            {"to", charts[k + 1].name},
                            {"verified", verify_gluing(charts[k], charts[k + 1])}});
    }
    return {{"charts", cs}, {"gluings", glue}};
}

Json strict_json(const StrictTransform& st)
{
    Json axes = Json::array();
    for (const auto& ax : st.axes) {
        Json fs = Json::array();
        for (const auto& f : ax.meeting.factors)
            fs.push_back({{"factor", f.factor.to_string()},
                          {"multiplicity", f.multiplicity},
                          {"rational_points", rat_array(f.rational_points)}});
        axes.push_back({{"divisor", ax.divisor},
                        {"restriction", ax.restriction},
                        {"total", ax.meeting.total},
                        {"factors", fs}});
    }
    return {{"curve", st.label},
            {"chart", st.chart},
            {"strict", st.pullback.strict.to_string({"u", "v", "w"})},
            {"meets", st.meets},
            {"constant_certificate", st.constant_certificate},
            {"constant_term", to_json(st.constant_term)},
            {"axes", axes}};
}

Json config_json(const CurveConfig& c)
{
    Json bd = Json::array();
    for (const auto& m : c.boundary_dot) {
        Json o = Json::object();
        for (const auto& [k, v] : m)
            o[k] = to_json(v);
        bd.push_back(o);
    }
    return {{"curves", c.labels},
            {"Q", to_json(c.Q)},
            {"K_dot", rat_array(c.K_dot)},
            {"boundary_dot", bd},
            {"discrepancy", rat_array(c.discrepancy)}};
}

Json boundary_json(const BoundaryData& b)
{
    Json comps = Json::array();
    for (const auto& c : b.components)
        comps.push_back({{"label", c.label}, {"coeff", to_json(c.coeff)}});
    Json pts = Json::array();
    for (const auto& p : b.points)
        pts.push_back({{"where", p.where}, {"mult", p.mult}, {"curves", p.curves}});
    return {{"components", comps}, {"points", pts}};
}

Json certificate_json(const MaximalityCertificate& m)
{
    Json cands = Json::array();
    for (const auto& c : m.candidates)
        cands.push_back({{"center", c.center}, {"discrepancy", to_json(c.discrepancy)}});
    return {{"maximal", m.maximal},
            {"discrepancies_in_range", m.discrepancies_in_range},
            {"candidates", cands},
            {"failures", m.failures}};
}

std::string config_table(const CurveConfig& c)
{
    std::vector<Row> rows;
    for (int i = 0; i < c.size(); ++i) {
        Row r{c.labels[i], to_string(c.Q(i, i)), to_string(c.K_dot[i]), to_string(c.discrepancy[i])};
        std::vector<std::string> b;
        for (const auto& [k, v] : c.boundary_dot[i])
            b.push_back(k + ":" + to_string(v));
        r.push_back(b.empty() ? "-" : join(b, " "));
        rows.push_back(std::move(r));
    }
    return md_table({"curve", "E^2", "K.E", "a", "B.E"}, rows);
}

Json ledger_json(const TautLedger& t)
{
    Json rows = Json::array();
    for (const auto& e : t.entries) {
        Json pieces = Json::array();
        for (const auto& p : e.pieces)
            pieces.push_back(to_json(p));
        rows.push_back({{"rep", e.rep},
                        {"rank", e.rank},
                        {"description", e.description},
                        {"c1", to_json(e.c1)},
                        {"c1_text", to_string(e.c1)},
                        {"pieces", pieces},
                        {"extension", e.extension}});
    }
    return {{"space", to_string(t.space)}, {"k", t.k}, {"entries", rows}};
}

Json verdict_json(const ThetaVerdict& v, bool sound)
{
    Json j{{"destabilized", v.destabilized}, {"checked", v.checked}};
    if (v.destabilized) {
        j["seed_index"] = v.seed_index;
        j["class"] = to_json(v.closure.cls);
        j["value"] = to_json(v.value);
        j["sound"] = sound;
    }
    return j;
}

std::vector<QVec> parse_seed(const Constellation& F, const std::vector<std::string>& terms)
{
    QVec v(F.dim());
    for (const auto& t : terms) {
        std::string label = t;
        Rat c = 1;
        if (const auto at = t.find('@'); at != std::string::npos) {
            c = parse_rat(t.substr(0, at));
            label = t.substr(at + 1);
        }
        int k = -1;
        for (int i = 0; i < F.dim(); ++i)
            if (F.labels[i] == label)
                k = i;
        if (k < 0)
            return {};
        v[k] += c;
    }
    return {v};
}

} // namespace

Json to_json(const Rat& r)
{
    Rat c = r;
    c.canonicalize();
    return to_string(c);
}

Json to_json(const Decomposition& d)
{
    Json o = Json::object();
    for (const auto& [name, k] : d)
        o[name] = k;
    return o;
}

Json to_json(const DivisorClass& c)
{
    Json o = Json::object();
    for (const auto& [name, v] : c)
        if (sgn(v) != 0)
            o[name] = to_json(v);
    return o;
}

Json to_json(const QMatrix& q)
{
    Json rows = Json::array();
    for (int i = 0; i < q.rows(); ++i)
        rows.push_back(rat_array(q.row(i)));
    return rows;
}

Json envelope(const Report& r)
{
    return {{"anchor", r.anchor}, {"n", r.n}, {"payload", r.payload}};
}

Report chartable_report(int n)
{
    const CharTable t = char_table(dihedral(n));
    Report r{"dihedral character table", n, Json::object(), "", ""};
    Json classes = Json::array();
    Row head{"irrep"};
    for (const auto& c : t.classes) {
        classes.push_back({{"label", c.label()}, {"size", c.size}});
        head.push_back(c.label() + " (" + std::to_string(c.size) + ")");
    }
    Json irreps = Json::array();
    std::vector<Row> rows;
    for (const auto& chi : t.irreps) {
        Json vals = Json::array();
        Row row{chi.name};
        for (const auto& v : chi.values) {
            vals.push_back(v.to_string());
            row.push_back(v.to_string());
        }
        irreps.push_back({{"name", chi.name}, {"degree", to_json(chi.degree())}, {"values", vals}});
        rows.push_back(std::move(row));
    }
    r.payload = {{"group_order", 2 * n}, {"root_of_unity", "t = exp(2 pi i / n)"}, {"classes", classes},
                 {"irreps", irreps}};
    r.table = md_table(head, rows);
    return r;
}

Report quiver_report(int n)
{
    const Quiver q = mckay_quiver(n);
    Report r{"McKay quiver of the natural representation", n, Json::object(), "", quiver_dot(q)};
    Json edges = Json::array();
    std::vector<Row> rows;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        Row row{q.vertices[i]};
        for (std::size_t j = 0; j < q.vertices.size(); ++j) {
            row.push_back(std::to_string(q.adjacency[i][j]));
            if (j >= i && q.adjacency[i][j] != 0)
                edges.push_back({{"a", q.vertices[i]}, {"b", q.vertices[j]}, {"multiplicity", q.adjacency[i][j]}});
        }
        rows.push_back(std::move(row));
    }
    Row head{""};
    head.insert(head.end(), q.vertices.begin(), q.vertices.end());
    r.payload = {{"vertices", q.vertices}, {"edges", edges}, {"loops", q.loops},
                 {"loop_flag", q.loops.empty() ? "" : "loop computed at " + join(q.loops, ", ") +
                                                          "; the drawn odd diagram shows a plain chain end"}};
    r.table = md_table(head, rows);
    return r;
}

Report hilb_atlas_report(int n)
{
    Report r{"Z_n-Hilb and its Z_2 quotient: chart atlases", n, Json::object(), "", ""};
    const HilbAtlas x1 = x1_atlas(n);
    std::vector<Row> rows;
    Json jx = atlas_json(x1.charts, rows);
    jx["divisor_tags"] = x1.divisor_tags;
    const std::string tx = md_table({"chart", "coordinates", "index", "exceptional axes"}, rows);
    rows.clear();
    Json jy = atlas_json(y1_atlas(n), rows);
    const std::string ty = md_table({"chart", "coordinates", "index", "exceptional axes"}, rows);
    Json stages = Json::array();
    rows.clear();
    for (const auto& s : flop_stages(n)) {
        const FlopAtlas a = build_flop_atlas(n, s);
        Json names = Json::array();
        for (const auto& c : a.charts)
            names.push_back(c.name);
        Json glue = Json::array();
        for (const auto& g : a.gluings) {
            std::vector<std::string> coords;
            for (const auto& p : g.coords)
                coords.push_back(laurent_poly_string(p, {"u", "v", "w"}));
            glue.push_back({{"from", g.from}, {"to", g.to}, {"coords", coords}, {"monomial", g.monomial}});
        }
        stages.push_back({{"stage", s.label()},
                          {"charts", names},
                          {"gluings", glue},
                          {"gluings_verified", a.gluings_verified},
                          {"curve_tags", a.curve_tags}});
        rows.push_back({s.label(), std::to_string(a.charts.size()), std::to_string(a.curve_tags.size()),
                        a.curve_tags.empty() ? "-" : join(a.curve_tags, " "), a.gluings_verified ? "yes" : "NO"});
    }
    const std::string tf = md_table({"stage", "charts", "curves", "tags", "verified"}, rows);
    r.payload = {{"X1", jx}, {"Y1", jy}, {"flop_stages", stages}};
    r.table = "X1\n" + tx + "\nY1\n" + ty + "\nflop stages\n" + tf;
    return r;
}

Report fixed_points_report(int n)
{
    Report r{"Z_2-fixed points of Z_n-Hilb", n, Json::array(), "", ""};
    std::vector<Row> rows;
    for (const auto& f : fixed_points(n)) {
        std::vector<std::string> basis;
        for (const auto& g : f.basis)
            basis.push_back(g.to_string());
        const bool cert = z2_image_certified(n, f.point);
        r.payload.push_back({{"point", f.point.to_string()},
                             {"image", f.image.to_string()},
                             {"basis", basis},
                             {"certified", cert}});
        rows.push_back({f.point.to_string(), f.image.to_string(), join(basis, ", "), cert ? "yes" : "NO"});
    }
    r.table = md_table({"point", "swap image", "reduced basis", "certified"}, rows);
    return r;
}

Report strict_transforms_report(int n)
{
    Report r{"boundary strict transforms", n, Json::object(), "", ""};
    Json x1 = Json::array();
    Json y1 = Json::array();
    std::vector<Row> rows;
    auto add = [&](Json& into, const std::string& space, const StrictTransform& st) {
        into.push_back(strict_json(st));
        std::string where = st.meets ? "" : (st.constant_certificate ? "constant term " + to_string(st.constant_term)
                                                                     : "-");
        for (const auto& ax : st.axes)
            if (ax.meeting.total > 0)
                where += (where.empty() ? "" : "; ") + ax.divisor + ": " + ax.restriction;
        rows.push_back({space, st.label, st.chart, st.pullback.strict.to_string({"u", "v", "w"}),
                        st.meets ? "meets" : "misses", where});
    };
    for (const auto& st : boundary_strict_transforms(n))
        add(x1, "X1", st);
    for (const auto& st : y1_boundary_transforms(n))
        add(y1, "Y1", st);
    std::vector<std::string> named;
    for (int i : boundary_named_charts(n))
        named.push_back("U" + std::to_string(i));
    r.payload = {{"named_charts", named},
                 {"identity_holds", boundary_identity_holds(n)},
                 {"X1", x1},
                 {"Y1", y1}};
    r.table = md_table({"space", "curve", "chart", "strict transform", "", "restriction / certificate"}, rows);
    return r;
}

Report fold_report(int n)
{
    const CurveConfig c = z2_fold(an_chain(n - 1), n);
    const BoundaryData b = fold_boundary(n);
    Report r{"Z_2-fold of the A_{n-1} chain", n, Json::object(), "", dual_graph_dot(c)};
    r.payload = {{"config", config_json(c)},
                 {"negative_definite", is_negative_definite(c.Q)},
                 {"adjunction", adjunction_holds(c)},
                 {"boundary", boundary_json(b)},
                 {"maximality", certificate_json(is_maximal(c, b))}};
    r.table = config_table(c);
    return r;
}

Report chain_report(int n)
{
    const DominationChain ch = domination_chain(n);
    Report r{"blow-down chain of the fold", n, Json::object(), "", ""};
    Json stages = Json::array();
    std::ostringstream t;
    for (std::size_t k = 0; k < ch.stages.size(); ++k) {
        stages.push_back(config_json(ch.stages[k]));
        t << "stage " << k;
        if (k < ch.contracted.size())
            t << " (contract " << ch.contracted[k] << ")";
        t << "\n" << (ch.stages[k].size() ? config_table(ch.stages[k]) : "(empty)\n") << "\n";
    }
    r.payload = {{"length", ch.contracted.size()},
                 {"contracted", ch.contracted},
                 {"unique_choice", ch.unique_choice},
                 {"stages", stages}};
    r.table = t.str();
    std::ostringstream dot;
    dot << "digraph chain {\n";
    for (std::size_t k = 0; k < ch.stages.size(); ++k)
        dot << "  s" << k << " [label=\"" << ch.stages[k].size() << (ch.stages[k].size() == 1 ? " curve" : " curves") << "\"];\n";
    for (std::size_t k = 0; k < ch.contracted.size(); ++k)
        dot << "  s" << k << " -> s" << k + 1 << " [label=\"" << ch.contracted[k] << "\"];\n";
    dot << "}\n";
    r.dot = dot.str();
    return r;
}

Report socle_table_report(int n, const Rat& alpha)
{
    Report r{"tops and socles of D_2n-constellations", n, Json::array(), "", ""};
    std::vector<Row> rows;
    for (const auto& s : socle_table(n, alpha)) {
        r.payload.push_back({{"stratum", s.stratum},
                             {"witness", s.witness},
                             {"top", to_json(s.top)},
                             {"socle", to_json(s.socle)},
                             {"expected_top", to_json(s.expected_top)},
                             {"expected_socle", to_json(s.expected_socle)},
                             {"top_matches", s.top_matches},
                             {"socle_matches", s.socle_matches},
                             {"regular", s.regular}});
        rows.push_back({s.stratum, s.witness, to_string(s.top), to_string(s.socle),
                        s.top_matches && s.socle_matches ? "yes" : "NO"});
    }
    r.table = md_table({"stratum", "witness", "top", "socle", "matches"}, rows);
    return r;
}

Report taut_table_report(int n, int k)
{
    Report r{"tautological bundles", n, Json::object(), "", ""};
    const TautLedger coarse = build_ledger(n, Space::coarse, k);
    const TautLedger stack = build_ledger(n, Space::stack, k);
    const PairingTable pt = pairing_table(n, k);
    Json dots = Json::object();
    for (const auto& [name, v] : pt.dots)
        dots[name] = rat_array(v);
    Json torsion = Json::object();
    torsion["stack rho0'"] = torsion_check(stack.entries[1].c1, pt);
    for (const auto& c : pt.curves)
        torsion[c] = torsion_check({{c, Rat(1)}}, pt);
    Json ids = Json::array();
    for (const auto& l : pushforward_identities(n))
        ids.push_back({{"identity", l.text}, {"holds", l.holds}});
    r.payload = {{"coarse", ledger_json(coarse)},
                 {"stack", ledger_json(stack)},
                 {"pairings", {{"curves", pt.curves}, {"dots", dots}}},
                 {"torsion", torsion},
                 {"pushforward", ids}};
    r.table = "coarse\n" + ledger_markdown(coarse) + "\nstack\n" + ledger_markdown(stack);
    return r;
}

Report fm_table_report(int n)
{
    Report r{"Fourier-Mukai images of the irreducibles", n, Json::array(), "", ""};
    std::vector<Row> rows;
    for (const auto& e : fm_table(n)) {
        r.payload.push_back({{"rep", e.rep}, {"support", e.support}, {"twist", e.twist}, {"shift", e.shift}});
        rows.push_back({e.rep, e.support, e.twist, std::to_string(e.shift)});
    }
    r.table = md_table({"rep", "support", "twist", "shift"}, rows);
    return r;
}

Report refdiv_report(int n, int k)
{
    const RefDivCertificate c = refdivisor_certify(n, k);
    Report r{"reference divisor transversal to one exceptional curve", n, Json::object(), "", ""};
    r.payload = {{"k", c.k},
                 {"equation", c.equation},
                 {"pairings", rat_array(c.pairings)},
                 {"transversal", c.transversal},
                 {"meetings", c.meetings}};
    if (c.boundary_note)
        r.payload["boundary_note"] = *c.boundary_note;
    std::ostringstream t;
    t << "D: " << c.equation << " = 0\nD.E = " << rat_list(c.pairings) << (c.transversal ? " (transversal)" : "")
      << "\n";
    for (const auto& m : c.meetings)
        t << "  " << m << "\n";
    if (c.boundary_note)
        t << *c.boundary_note << "\n";
    r.table = t.str();
    return r;
}

Report stability_report(int n, const StabilityParam& theta, const Rat& alpha,
                        const std::vector<std::vector<std::string>>& extra_seeds)
{
    Report r{"theta checks on stratum witnesses", n, Json::object(), "", ""};
    Json th = Json::object();
    for (const auto& [name, v] : theta.theta)
        th[name] = to_json(v);
    Json rows = Json::array();
    std::vector<Row> trows;
    for (const auto& w : stratum_witnesses(n, alpha)) {
        SeedFamily fam;
        if (extra_seeds.empty()) {
            fam = default_family(w.module);
        } else {
            for (const auto& s : extra_seeds)
                if (auto seed = parse_seed(w.module, s); !seed.empty())
                    fam.push_back(std::move(seed));
        }
        const ThetaVerdict v = theta_check(w.module, theta, fam);
        const bool sound = !v.destabilized || destabilizer_is_sound(w.module, theta, v);
        Json j = verdict_json(v, sound);
        j["stratum"] = w.stratum;
        j["witness"] = w.description;
        j["family_size"] = fam.size();
        rows.push_back(j);
        trows.push_back({w.stratum, w.description, std::to_string(fam.size()),
                         v.destabilized ? "destabilized by " + to_string(v.closure.cls) + " (" + to_string(v.value) + ")"
                                        : "no violation in family"});
    }
    r.payload = {{"theta", th}, {"generic", is_generic(theta)}, {"witnesses", rows}};
    r.table = md_table({"stratum", "witness", "seeds", "verdict"}, trows);
    return r;
}

} // namespace mckay
