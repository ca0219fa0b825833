#pragma once

#include "mckay/exactnum.hpp"
#include "mckay/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace mckay {

struct CurveConfig {
    std::vector<std::string> labels;
    QMatrix Q;
    std::vector<Rat> K_dot;
    std::vector<std::map<std::string, Rat>> boundary_dot;
    std::vector<Rat> discrepancy;
    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
};

struct BoundaryComponent {
    std::string label; // "B1", "B2", "B3"
    Rat coeff;         // (m_j - 1)/m_j with m_j = 2
};

// A point where the reduced boundary meets the exceptional curves or is singular.
struct BoundaryPoint {
    std::string where;
    std::map<std::string, int> mult; // multiplicity of each boundary component
    std::vector<std::string> curves; // exceptional curves through the point
};

struct BoundaryData {
    std::vector<BoundaryComponent> components;
    std::vector<BoundaryPoint> points;
    Rat coeff(const std::string& label) const;
};

struct NotContractible : std::domain_error {
    using std::domain_error::domain_error;
};

CurveConfig an_chain(int k);

// Boundary components on Y1 with their meeting points on E_1..E_m, read off
// from the strict transforms in the Y1 charts.
BoundaryData fold_boundary(int n);
// The quotient C^2/G itself: no curves, the boundary through the origin.
BoundaryData quotient_boundary(int n);

// E_a . E_b = 1/2 (p^*E_a).(p^*E_b); K_dot from K_Y1 = L on the fold and
// boundary pairings from the chart computation.
CurveConfig z2_fold(const CurveConfig& chain, int n);

// Discrepancies solving (K + sum coeff B) . E_j = sum a_i E_i . E_j.
std::vector<Rat> solve_discrepancies(const CurveConfig& c, const BoundaryData& b);

bool adjunction_holds(const CurveConfig& c);

CurveConfig blow_down(const CurveConfig& c, int curve);

struct DominationChain {
    std::vector<CurveConfig> stages; // fold first, empty configuration last
    std::vector<std::string> contracted;
    bool unique_choice = true; // exactly one contractible curve at every stage
};

DominationChain domination_chain(int n);

// a = 1 + sum of prior discrepancies at the center - sum coeff_j * mult_j.
Rat blowup_discrepancy(const BoundaryData& b, const std::map<std::string, int>& mult, const std::vector<Rat>& prior);

struct Candidate {
    std::string center;
    Rat discrepancy;
};

struct MaximalityCertificate {
    bool maximal = false;
    bool discrepancies_in_range = false;
    std::vector<Candidate> candidates;
    std::vector<std::string> failures;
};

MaximalityCertificate is_maximal(const CurveConfig& c, const BoundaryData& b);

// Blow up a general point of one boundary component (one new (-1)-curve).
std::pair<CurveConfig, BoundaryData> blow_up_boundary_point(const CurveConfig& c, const BoundaryData& b,
                                                            const std::string& component);

// Vertices labelled "(a_i, E_i^2)".
std::string dual_graph_dot(const CurveConfig& c);

} // namespace mckay
