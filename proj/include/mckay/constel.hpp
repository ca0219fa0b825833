#pragma once

#include "mckay/hilb.hpp"
#include "mckay/linalg.hpp"
#include "mckay/repr.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

// How tau acts on a Z_2-fixed cluster: delta1 is the bare swap x <-> y,
// delta0 its negative.
enum class Twist { none, delta0, delta1 };
std::string to_string(Twist t);

struct Constellation {
    int n = 0;
    std::vector<std::string> labels;
    QMatrix x_action, y_action, tau_action;
    std::vector<int> weights; // sigma acts on basis vector v by eps^weights[v]
    Twist twist = Twist::none;
    std::string origin;
    int dim() const { return static_cast<int>(labels.size()); }
};

struct WrongDimension : std::domain_error {
    using std::domain_error::domain_error;
};

// C[x,y]/I_p (+) C[x,y]/I_{tau p} with tau swapping the summands.
Constellation doubled_constellation(int n, const Ideal& I, const std::string& origin);
// Fixed p with a twist: the 2n-dimensional thickening C[x,y,z]/J, z of
// weight 0 and tau(z) = -z. Non-fixed p: the doubled module.
Constellation constellation_from_cluster(int n, const ClusterPoint& p, Twist twist = Twist::none);
// The n-dimensional Z_2-invariant cluster O_Z with tau = (twist sign) * swap.
Constellation stacky_cluster(int n, const ClusterPoint& p, Twist twist);

using RClass = Decomposition;

Character character(const Constellation& F);
bool regular_check(const Constellation& F);
// Axiom checks: [x,y] = 0, tau^2 = 1, tau x tau = y, weight grading.
bool structure_check(const Constellation& F);

// Character of a tau-stable subspace spanned by weight-homogeneous vectors.
Character subspace_character(const Constellation& F, const std::vector<QVec>& homogeneous);
// Weight components of a vector (nonzero ones only).
std::vector<QVec> weight_components(const Constellation& F, const QVec& v);

std::vector<QVec> socle_vectors(const Constellation& F);
RClass top(const Constellation& F);
RClass socle(const Constellation& F);

struct Closure {
    std::vector<QVec> basis;
    RClass cls;
};

Closure submodule_closure(const Constellation& F, const std::vector<QVec>& seeds);

// ---- stability ----

struct InvalidTheta : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StabilityParam {
    int n;
    std::map<std::string, Rat> theta; // every irreducible name present
    // Throws InvalidTheta unless theta(C[G]) = 0 and, if requested, generic.
    static StabilityParam make(int n, std::map<std::string, Rat> theta, bool require_generic = false);
    Rat operator()(const RClass& c) const;
};

// No proper nonzero class c (0 <= c_rho <= deg rho) with theta(c) = 0.
bool is_generic(const StabilityParam& theta);

using SeedFamily = std::vector<std::vector<QVec>>;
// Single basis vectors and e_u +/- e_v for weights w_u = +/- w_v.
SeedFamily default_family(const Constellation& F);

struct ThetaVerdict {
    bool destabilized = false;
    std::size_t seed_index = 0;
    Closure closure;
    Rat value;
    std::size_t checked = 0; // proper closures evaluated
};

ThetaVerdict theta_check(const Constellation& F, const StabilityParam& theta, const SeedFamily& family);
// Independent re-check of a reported destabilizer.
bool destabilizer_is_sound(const Constellation& F, const StabilityParam& theta, const ThetaVerdict& v);

// ---- strata ----

struct Witness {
    std::string stratum;
    std::string description;
    Constellation module;
    std::optional<Constellation> half; // stacky strata: socle is read here
    bool exceptional = true;
};

// alpha parametrizes generic points I_i(1:alpha); must be nonzero and != +-1.
std::vector<Witness> stratum_witnesses(int n, const Rat& alpha = Rat(1, 2));

struct ExpectedRow {
    std::string stratum;
    RClass top;
    RClass socle;
    bool stacky_only;
};

// The expected case list, transcribed by hand independently of any computation.
std::vector<ExpectedRow> expected_socle_table(int n);

struct SocleRow {
    std::string stratum;
    std::string witness;
    RClass top, socle;
    RClass expected_top, expected_socle;
    bool top_matches, socle_matches;
    bool regular;
};

std::vector<SocleRow> socle_table(int n, const Rat& alpha = Rat(1, 2));

} // namespace mckay
