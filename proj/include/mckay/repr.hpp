#pragma once

#include "mckay/exactnum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mckay {

enum class GroupKind { cyclic, dihedral };

struct GroupSpec {
    GroupKind kind;
    int n;
    int order() const { return kind == GroupKind::cyclic ? n : 2 * n; }
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec cyclic(int n);
GroupSpec dihedral(int n);

struct ConjClass {
    enum Kind { identity, sigma_power, tau_class };
    Kind kind;
    // sigma_power: exponent i; tau_class: 0 for tau*sigma^even, 1 for tau*sigma^odd
    // (odd n has a single tau class with index 0).
    int index;
    int size;
    std::string label() const;
};

std::vector<ConjClass> conj_classes(const GroupSpec& g);

// Position of sigma^k (any integer k) in the class list.
int sigma_class_index(const GroupSpec& g, long k);
// Position of tau*sigma^k in the class list (dihedral only).
int tau_class_index(const GroupSpec& g, long k);

struct Character {
    GroupSpec group;
    std::vector<CycloElt> values; // aligned with conj_classes(group)
    std::string name;
    Rat degree() const;
};

struct NotACharacter : std::domain_error {
    using std::domain_error::domain_error;
};

struct CharTable {
    GroupSpec group;
    std::vector<ConjClass> classes;
    std::vector<Character> irreps;
    const Character& get(const std::string& name) const;
    int index_of(const std::string& name) const;
};

// Names: rho0, rho0', rho1.., rho{n/2}, rho{n/2}' (dihedral); eps0.. (cyclic).
std::string rho_name(int j, bool prime = false);
std::string eps_name(int j);

CharTable char_table(const GroupSpec& g);

Rat inner_product(const Character& a, const Character& b);

using Decomposition = std::vector<std::pair<std::string, int>>;
// Multiplicities against the irreducible list; NotACharacter on negative or
// fractional multiplicities or a nonzero residue.
Decomposition decompose(const Character& chi);
Character compose(const GroupSpec& g, const Decomposition& d);
std::string to_string(const Decomposition& d);

Character tensor(const Character& a, const Character& b);
Character char_sum(const Character& a, const Character& b);
Character regular_character(const GroupSpec& g);
// Values compared at a primitive root of unity.
bool same_character(const Character& a, const Character& b);

Character restrict_to_cyclic(const Character& chi);
Character induce_to_dihedral(const Character& eps);

struct Quiver {
    int n;
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> adjacency;
    // Vertices carrying a loop; these are reported against the drawn diagrams.
    std::vector<std::string> loops;
};

Quiver mckay_quiver(int n);
std::string quiver_dot(const Quiver& q);

} // namespace mckay
