#include "mckay/hilb.hpp"
#include "mckay/report.hpp"
#include "mckay/repr.hpp"
#include "mckay/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace mckay;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    std::string range;
    std::string format = "table";
    std::string out;
    std::string alpha = "1/2";
    std::string theta;
    std::string family = "default";
    int k = 0;
    std::uint64_t seed = VerifyOptions{}.seed;
};

std::pair<int, int> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("--n-range: expected A..B, got '" + s + "'");
    try {
        std::size_t used = 0;
        const int a = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(s);
        const std::string rest = s.substr(dots + 2);
        const int b = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument(s);
        if (a < 3 || b < a)
            throw UsageError("--n-range: need 3 <= A <= B, got '" + s + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--n-range: expected A..B, got '" + s + "'");
    }
}

std::vector<int> selected_ns(const Options& o)
{
    if (o.n != 0 && !o.range.empty())
        throw UsageError("--n and --n-range are exclusive");
    if (!o.range.empty()) {
        const auto [a, b] = parse_range(o.range);
        std::vector<int> ns;
        for (int n = a; n <= b; ++n)
            ns.push_back(n);
        return ns;
    }
    if (o.n == 0)
        throw UsageError("--n: required (or --n-range)");
    if (o.n < 3)
        throw UsageError("--n: need n >= 3, got " + std::to_string(o.n));
    return {o.n};
}

Rat parse_alpha(const std::string& s)
{
    Rat a;
    try {
        a = parse_rat(s);
    } catch (const std::exception&) {
        throw UsageError("--alpha: not a rational number: '" + s + "'");
    }
    if (sgn(a) == 0 || a == 1 || a == -1)
        throw UsageError("--alpha: must be nonzero and different from 1 and -1");
    return a;
}

StabilityParam parse_theta(int n, const std::string& csv)
{
    const CharTable t = char_table(dihedral(n));
    std::map<std::string, Rat> th;
    std::stringstream in(csv);
    std::string item;
    std::size_t k = 0;
    while (std::getline(in, item, ',')) {
        if (k >= t.irreps.size())
            throw UsageError("--theta: expected " + std::to_string(t.irreps.size()) + " values for n = " +
                             std::to_string(n));
        try {
            th[t.irreps[k].name] = parse_rat(item);
        } catch (const std::exception&) {
            throw UsageError("--theta: not a rational number: '" + item + "'");
        }
        ++k;
    }
    if (k != t.irreps.size())
        throw UsageError("--theta: expected " + std::to_string(t.irreps.size()) + " values for n = " +
                         std::to_string(n));
    try {
        return StabilityParam::make(n, th);
    } catch (const InvalidTheta& e) {
        throw UsageError(std::string("--theta: ") + e.what());
    }
}

// One seed per line: terms "label" or "c@label" separated by '|'.
std::vector<std::vector<std::string>> read_family(const std::string& path)
{
    if (path == "default")
        return {};
    std::ifstream in(path);
    if (!in)
        throw UsageError("--family: cannot read seeds file '" + path + "'");
    std::vector<std::vector<std::string>> seeds;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> terms;
        std::stringstream ls(line);
        std::string term;
        while (std::getline(ls, term, '|')) {
            const auto a = term.find_first_not_of(" \t");
            if (a == std::string::npos)
                continue;
            terms.push_back(term.substr(a, term.find_last_not_of(" \t") - a + 1));
        }
        if (!terms.empty())
            seeds.push_back(std::move(terms));
    }
    if (seeds.empty())
        throw UsageError("--family: seeds file '" + path + "' is empty");
    return seeds;
}

// True if the report carries a failed certificate.
bool report_failed(const std::string& cmd, const Report& r)
{
    const Json& p = r.payload;
    if (cmd == "fixed-points") {
        for (const auto& f : p)
            if (!f["certified"].get<bool>())
                return true;
    } else if (cmd == "socle-table" && p.contains("witnesses")) {
        for (const auto& w : p["witnesses"])
            if (w["destabilized"].get<bool>() && !w["sound"].get<bool>())
                return true;
    } else if (cmd == "socle-table") {
        for (const auto& row : p)
            if (!row["top_matches"].get<bool>() || !row["socle_matches"].get<bool>() || !row["regular"].get<bool>())
                return true;
    } else if (cmd == "fold") {
        return !p["adjunction"].get<bool>() || !p["negative_definite"].get<bool>() ||
               !p["maximality"]["maximal"].get<bool>();
    } else if (cmd == "refdiv") {
        return !p["transversal"].get<bool>();
    } else if (cmd == "strict-transforms") {
        return !p["identity_holds"].get<bool>();
    }
    return false;
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw UsageError("--out: cannot write '" + o.out + "'");
    f << text;
}

int run_reports(const std::string& cmd, const Options& o,
                const std::function<std::vector<Report>(int)>& make)
{
    const auto ns = selected_ns(o);
    std::vector<Report> reports;
    for (int n : ns)
        for (auto& r : make(n))
            reports.push_back(std::move(r));
    bool failed = false;
    for (const auto& r : reports)
        failed = failed || report_failed(cmd, r);
    std::string text;
    if (o.format == "json") {
        Json j = Json::array();
        for (const auto& r : reports)
            j.push_back(envelope(r));
        text = (j.size() == 1 ? j[0] : j).dump(2) + "\n";
    } else if (o.format == "dot") {
        for (const auto& r : reports) {
            if (r.dot.empty())
                throw UsageError("--format: dot output is not available for " + cmd);
            text += r.dot;
        }
    } else {
        for (const auto& r : reports)
            text += (reports.size() > 1 ? "## n = " + std::to_string(r.n) + "\n" : "") + r.table +
                    (reports.size() > 1 ? "\n" : "");
    }
    emit(o, text);
    return failed ? 2 : 0;
}

int run_verify(const Options& o)
{
    VerifyOptions vo;
    vo.seed = o.seed;
    if (o.n != 0 || !o.range.empty()) {
        const auto ns = selected_ns(o);
        vo.n_range = {ns.front(), ns.back()};
    }
    if (o.format == "dot")
        throw UsageError("--format: dot output is not available for verify");
    std::vector<CriterionResult> results;
    bool ok = true;
    long checks = 0;
    int passed = 0;
    std::ostringstream lines;
    for (int id = 1; id <= criterion_count; ++id) {
        results.push_back(run_criterion(id, vo));
        const auto& r = results.back();
        ok = ok && r.passed;
        checks += r.checks;
        passed += r.passed;
        lines << summary_line(r) << "\n";
        for (const auto& f : r.failures)
            lines << "    failure: " << f << "\n";
        for (const auto& note : r.notes)
            lines << "    note: " << note << "\n";
    }
    lines << "summary: " << passed << "/" << criterion_count << " criteria passed, " << checks << " checks\n";
    if (o.format == "json") {
        Json rs = Json::array();
        for (const auto& r : results)
            rs.push_back(to_json(r));
        Json n = vo.n_range ? Json::array({vo.n_range->first, vo.n_range->second}) : Json();
        Json j{{"anchor", "acceptance criteria"},
               {"n", n},
               {"payload", {{"passed", ok}, {"criteria_passed", passed}, {"checks", checks}, {"criteria", rs}}}};
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, lines.str());
    }
    return ok ? 0 : 2;
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact computations for the dihedral McKay correspondence"};
    app.require_subcommand(1);
    Options o;
    std::string cmd;

    auto common = [&](CLI::App* s) {
        s->add_option("--n", o.n, "group parameter (D_2n has order 2n)");
        s->add_option("--n-range", o.range, "inclusive range A..B");
        s->add_option("--format", o.format, "json | dot | table")
            ->check(CLI::IsMember({"json", "dot", "table"}));
        s->add_option("--out", o.out, "output file (default: standard output)");
        s->callback([&, s] { cmd = s->get_name(); });
    };
    const std::vector<std::pair<std::string, std::string>> subs{
        {"chartable", "character table of D_2n"},
        {"quiver", "McKay quiver of the natural representation"},
        {"hilb-atlas", "chart atlases of Z_n-Hilb, its quotient and the flop stages"},
        {"fixed-points", "Z_2-fixed points of Z_n-Hilb"},
        {"strict-transforms", "strict transforms of the boundary curves"},
        {"fold", "folded intersection data, discrepancies and maximality"},
        {"chain", "blow-down chain of the fold"},
        {"socle-table", "tops and socles per stratum; with --theta, stability checks"},
        {"taut-table", "tautological bundle ledgers"},
        {"fm-table", "Fourier-Mukai table"},
        {"refdiv", "reference divisor certificates"},
        {"verify", "run every acceptance check"},
    };
    for (const auto& [name, help] : subs) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        if (name == "socle-table") {
            s->add_option("--alpha", o.alpha, "generic witness parameter I_i(1:alpha)");
            s->add_option("--theta", o.theta, "comma-separated theta values in irreducible order");
            s->add_option("--family", o.family, "default | path to a seeds file");
        }
        if (name == "taut-table" || name == "refdiv")
            s->add_option("--k", o.k, "reference divisor index (default: all for refdiv, m for taut-table)");
        if (name == "verify")
            s->add_option("--seed", o.seed, "seed for the randomized checks");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd == "verify")
            return run_verify(o);
        const auto k_in_range = [&](int n) {
            if (o.k < 0 || o.k > half_index(n))
                throw UsageError("--k: need 1 <= k <= " + std::to_string(half_index(n)));
        };
        std::function<Report(int)> one;
        if (cmd == "chartable")
            one = chartable_report;
        else if (cmd == "quiver")
            one = quiver_report;
        else if (cmd == "hilb-atlas")
            one = hilb_atlas_report;
        else if (cmd == "fixed-points")
            one = fixed_points_report;
        else if (cmd == "strict-transforms")
            one = strict_transforms_report;
        else if (cmd == "fold")
            one = fold_report;
        else if (cmd == "chain")
            one = chain_report;
        else if (cmd == "fm-table")
            one = fm_table_report;
        else if (cmd == "taut-table")
            one = [&](int n) {
                k_in_range(n);
                return taut_table_report(n, o.k);
            };
        else if (cmd == "socle-table") {
            const Rat alpha = parse_alpha(o.alpha);
            if (o.theta.empty()) {
                if (o.family != "default")
                    throw UsageError("--family: only used together with --theta");
                one = [alpha](int n) { return socle_table_report(n, alpha); };
            } else {
                const auto seeds = read_family(o.family);
                one = [&, alpha, seeds](int n) { return stability_report(n, parse_theta(n, o.theta), alpha, seeds); };
            }
        } else if (cmd == "refdiv") {
            return run_reports(cmd, o, [&](int n) {
                k_in_range(n);
                std::vector<Report> rs;
                for (int k = o.k ? o.k : 1; k <= (o.k ? o.k : half_index(n)); ++k)
                    rs.push_back(refdiv_report(n, k));
                return rs;
            });
        }
        return run_reports(cmd, o, [&](int n) { return std::vector<Report>{one(n)}; });
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j{{"anchor", "failure"}, {"n", o.n}, {"payload", {{"command", cmd}, {"error", e.what()}}}};
        std::cout << j.dump(2) << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
