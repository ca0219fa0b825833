#pragma once

#include "mckay/polyring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

// Named generators of a monomial lattice, each with an ambient expression in
// x, y, z. Chart coordinates are Laurent monomials in the atoms.
struct AtomSet {
    std::vector<std::string> names;
    std::vector<Poly> exprs;
    int size() const { return static_cast<int>(names.size()); }
};

AtomSet plane_atoms(); // (x, y)

struct Chart {
    std::string name;
    AtomSet atoms;
    IMat coords; // one exponent row per coordinate
    std::vector<std::string> coord_names;
    std::map<int, std::string> exceptional_axes;
    // |det coords| for square charts; X1 charts live on an index-n lattice.
    int lattice_index = 1;

    int dim() const { return static_cast<int>(coords.size()); }
    std::string coord_label(int k) const;
};

struct NoIntegerSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInChart : std::domain_error {
    using std::domain_error::domain_error;
};
struct CurveContainsAxis : std::domain_error {
    using std::domain_error::domain_error;
};

// Laurent monomial over names, e.g. "x^2*y^-3"; "1" for the zero vector.
std::string laurent_string(const IVec& e, const std::vector<std::string>& names);

int chart_rank(const Chart& c);
// Determinant of a square chart's exponent matrix.
Rat chart_det(const Chart& c);
// Square charts: |det| equals lattice_index. Non-square charts: full row rank.
bool chart_is_smooth(const Chart& c);

// Exponents alpha with prod coord_k^alpha_k = atoms^m.
IVec express_monomial(const Chart& c, const IVec& m);

struct Pullback {
    Poly strict;             // variables are chart coordinate slots
    std::map<int, int> orders; // exceptional axis -> vanishing order
};

// f is a polynomial in the atom variables (slot k = atom k).
Pullback pullback_orders(const Chart& c, const Poly& f);
// Rebuild f from a pullback (inverse of pullback_orders).
Poly reexpand(const Chart& c, const Pullback& p);

struct LocalCurve {
    std::string chart;
    Poly equation; // in chart coordinate slots
    std::string label;
};

struct AxisFactor {
    UPoly factor; // monic, squarefree
    int multiplicity;
    std::vector<Rat> rational_points;
};

struct AxisMeeting {
    int total = 0; // geometric points counted with multiplicity
    std::vector<AxisFactor> factors;
};

// Restrict a curve in a 2-dimensional chart to {coord_axis = 0}.
AxisMeeting restrict_to_axis(const Poly& equation, int axis);
int local_intersection(const LocalCurve& curve, int axis);
// Vanishing order at the chart origin of the curve restricted to the axis.
int order_at_origin(const Poly& equation, int axis);

// Integer matrix T with b.coords[r] = sum_k T[r][k] a.coords[k], if it exists.
std::optional<IMat> monomial_transition(const Chart& a, const Chart& b);
// One row is -e_k; every other row is e_j + c e_k with distinct j != k.
std::optional<int> wall_axis(const IMat& t);
bool verify_gluing(const Chart& a, const Chart& b);

} // namespace mckay
