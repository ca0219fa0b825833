#pragma once

#include "mckay/charts.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

// m = (n-1)/2 for odd n, n/2 for even n.
int half_index(int n);

// I_i(a:b), stored with the first nonzero of (a, b) scaled to 1.
struct ClusterPoint {
    int i;
    Rat a, b;
    static ClusterPoint make(int i, const Rat& a, const Rat& b);
    std::string to_string() const; // "I_2(1:-1)"
    friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

Ideal cluster_ideal(int n, const ClusterPoint& p);
ClusterPoint z2_image(int n, const ClusterPoint& p);
// Swap x and y in the generators, recompute the basis, compare with the image.
bool z2_image_certified(int n, const ClusterPoint& p);

// Universal family over chart U_i of X1 at (xi, eta).
Ideal universal_ideal(int n, int i, const Rat& xi, const Rat& eta);

struct FixedPoint {
    ClusterPoint point;
    ClusterPoint image;
    std::vector<Poly> basis; // shared reduced basis of both ideals
};

std::vector<FixedPoint> fixed_points(int n);

// X1 = Z_n-Hilb(C^2): charts U_1..U_n over the atoms (x, y).
struct HilbAtlas {
    int n;
    std::vector<Chart> charts;
    std::vector<std::string> divisor_tags; // "(x^i : y^(n-i))", i = 1..n-1
};

HilbAtlas x1_atlas(int n);
std::string x1_divisor(int k); // "E~k"

// Y1 over the invariants s = xy, t = x^n + y^n: charts 1..m and a final one.
std::vector<Chart> y1_atlas(int n);
std::string y_divisor(int k); // "Ek"

// Rewrite a D_2n-invariant polynomial in (s, t); std::domain_error if not invariant.
Poly to_invariants(int n, const Poly& f);

// Etilde_k . C for the strict transform of the Z_n-invariant curve f = 0, k = 1..n-1.
std::vector<int> x1_pairing(int n, const Poly& f);
// E_k . C on Y1 for a curve given in (s, t), k = 1..m.
std::vector<int> y1_pairing(int n, const Poly& g);
// E_k . C via the projection formula from X1: f is the invariant equation of
// the preimage divisor, so C . E_k = 1/2 Ctilde . p^*E_k.
std::vector<Rat> folded_pairing(int n, const Poly& f);

struct BoundaryEquation {
    std::string label;  // "B1", "B2", "B3"
    Poly reduced;       // x^m + y^m etc.
    Poly equation;      // the invariant square
};

std::vector<BoundaryEquation> boundary_equations(int n);

struct AxisRecord {
    int axis;
    std::string divisor;
    std::string restriction;
    AxisMeeting meeting;
};

struct StrictTransform {
    std::string label;
    std::string chart;
    int chart_index;
    Pullback pullback;
    std::vector<AxisRecord> axes;
    bool meets = false;
    // Nonzero constant term and constant restriction to every exceptional axis.
    bool constant_certificate = false;
    Rat constant_term;
};

std::vector<StrictTransform> boundary_strict_transforms(int n);
// Indices of X1 charts where the boundary strict transforms may meet the axes.
std::vector<int> boundary_named_charts(int n);

// Y1 final chart: strict transforms of the boundaries against E_m.
std::vector<StrictTransform> y1_boundary_transforms(int n);

// Verify f1^2 - 4(xy)^n = (x^n - y^n)^2 and the even analogues by expansion.
bool boundary_identity_holds(int n);

// ---- flop atlases over the atoms (xy, z, f1, f2) ----

struct FlopStage {
    int i;
    std::optional<int> j; // even n only
    std::string label() const;
    friend bool operator==(const FlopStage&, const FlopStage&) = default;
};

AtomSet flop_atoms(int n);
std::map<std::string, Chart> flop_charts(int n);
std::vector<FlopStage> flop_stages(int n);
std::vector<std::string> stage_chart_names(int n, const FlopStage& s);

// Laurent polynomial in the source chart coordinates.
using LaurentPoly = std::map<IVec, Rat>;
std::string laurent_poly_string(const LaurentPoly& p, const std::vector<std::string>& names);

struct FlopTransition {
    std::string from, to;
    std::vector<LaurentPoly> coords; // one per target coordinate
    bool monomial = false;
    std::optional<int> wall;
};

std::optional<FlopTransition> flop_transition(int n, const Chart& a, const Chart& b);
// Cross-multiplied identity of every coordinate as polynomials in x, y, z.
bool verify_flop_transition(int n, const Chart& a, const Chart& b, const FlopTransition& t);

struct FlopAtlas {
    int n;
    FlopStage stage;
    std::vector<Chart> charts;
    std::vector<FlopTransition> gluings; // consecutive pairs
    bool gluings_verified = true;
    std::vector<std::pair<std::string, std::string>> adjacency; // all solvable ordered pairs
    std::vector<std::string> curve_tags;
};

FlopAtlas build_flop_atlas(int n, const FlopStage& s);

struct DisplayedGluing {
    std::string from, to;
    std::vector<LaurentPoly> expected;
    bool from_text; // shown in the source; otherwise derived here
};

std::vector<DisplayedGluing> displayed_gluings(int n);

// Charts removed and added between two stages.
std::pair<std::vector<std::string>, std::vector<std::string>> stage_difference(int n, const FlopStage& from,
                                                                              const FlopStage& to);

} // namespace mckay
