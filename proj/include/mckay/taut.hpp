#pragma once

#include "mckay/constel.hpp"
#include "mckay/exactnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

// Formal Q-combination over E1.., B1/B2/B3 (reduced supports), D, D1.., L.
// A stack divisor B_i is stored as (1/2) supp B_i.
using DivisorClass = std::map<std::string, Rat>;

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rat& s, const DivisorClass& a);
std::string to_string(const DivisorClass& c);

enum class Space { coarse, stack };
std::string to_string(Space s);

struct LedgerEntry {
    std::string rep;
    int rank;
    std::string description;
    DivisorClass c1;
    std::vector<DivisorClass> pieces; // sub and quotient line bundles for rank 2
    std::string extension;            // "line bundle", "split", "unique non-trivial"
};

struct TautLedger {
    int n;
    Space space;
    int k; // D is transversal to E_k
    std::vector<LedgerEntry> entries;
};

// k = 0 selects the default k = m.
TautLedger build_ledger(int n, Space space, int k = 0);
std::string ledger_markdown(const TautLedger& t);

// Intersection numbers of every basis divisor with E_1..E_m.
struct PairingTable {
    int n;
    int k;
    std::vector<std::string> curves;
    std::map<std::string, std::vector<Rat>> dots;
};

PairingTable pairing_table(int n, int k = 0);
std::vector<Rat> pair_with_curves(const DivisorClass& c, const PairingTable& t);
// 2 * c pairs to zero with every exceptional curve.
bool torsion_check(const DivisorClass& c, const PairingTable& t);

struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdentityLine {
    std::string text;
    bool holds;
};

// Character-level shadows of the pushforward identities; throws on failure.
std::vector<IdentityLine> pushforward_identities(int n);

struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FMEntry {
    std::string rep;
    std::string support; // "F" or "E<j>"
    std::string twist;   // "none", "-B1", "-B2", "-B3", "B1-B2"
    int shift;
};

std::vector<FMEntry> fm_table_raw(int n);
// Compare supports and twists with the strata where each rep sits in the socle.
void fm_cross_check(int n, const std::vector<FMEntry>& table, const std::vector<SocleRow>& socles);
// fm_table_raw followed by fm_cross_check against socle_table(n).
std::vector<FMEntry> fm_table(int n);

struct RefDivCertificate {
    int n, k;
    std::string equation;
    std::vector<Rat> pairings; // D . E_j, j = 1..m
    bool transversal;          // pairings are the k-th unit vector
    std::vector<std::string> meetings;
    std::optional<std::string> boundary_note;
};

RefDivCertificate refdivisor_certify(int n, int k);

} // namespace mckay
