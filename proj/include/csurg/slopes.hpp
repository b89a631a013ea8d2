#pragma once

#include <string>
#include <vector>

#include "csurg/invariants.hpp"
#include "csurg/surgery.hpp"

namespace csurg::slopes {

enum class KnotTag { Unknot, RHTrefoil, LHTrefoil, Fig8, Custom };

struct SlopeError : std::runtime_error {
    enum class Code { UnknownClass, BadSlope };
    Code code;
    SlopeError(Code c, const std::string& m) : std::runtime_error(m), code(c) {}
};

// Legendrian mountain range of a Legendrian-simple knot type: the set of
// realizable (tb, rot) pairs is the stabilization closure of the peaks.
struct KnotClass {
    KnotTag tag = KnotTag::Custom;
    std::string name;
    std::vector<std::pair<long long, long long>> peaks;  // (tb, rot_signed)
    bool smooth_characterized = false;  // every surgery detects the knot type
    bool definite_filling_gate = false; // lens-space filling argument applies

    bool realizable(long long t, long long r) const;
    std::vector<long long> rots_at(long long t) const;  // signed, sorted
    long long max_tb() const;

    static KnotClass get(KnotTag t);
    static KnotClass custom(std::string name,
                            std::vector<std::pair<long long, long long>> peaks);
};

// All integers t' with |p + q t'| = |p + q t| for the contact slope p/q.
std::vector<long long> homology_candidates(long long t, const Rat& slope);

// The value of r'^2 forced by d3 equality on the dual homology branch t'.
// Everything is recomputed through the invariants module.
struct DiophantineResult {
    Rat rhs;                       // forced value of r'^2
    bool integral = false;         // rhs a nonnegative integer
    std::vector<long long> roots;  // r' >= 0 with r'^2 = rhs, parity r' = t'+1 mod 2
};
DiophantineResult d3_diophantine(long long t, long long r, const Rat& slope, long long t_dual);

// Modular Euler class comparison in H1 = Z_|p+qt| with the rot-sign freedom.
bool euler_eliminates(long long t, long long r, long long t2, long long r2, const Rat& slope);

struct ObstructionStep {
    std::string name;
    std::string outcome;
    std::string detail;
};

enum class Verdict { Certified, Survives, OutOfScope };

struct Candidate {
    long long tb = 0, rot = 0;
};

struct ObstructionReport {
    KnotTag cls;
    std::string class_name;
    long long tb = 0, rot = 0;
    Rat slope;
    std::vector<ObstructionStep> chain;
    Verdict verdict = Verdict::Certified;
    std::vector<Candidate> survivors;
};

ObstructionReport check_characterizing(const KnotClass& cls, long long t, long long r,
                                       const Rat& slope);

enum class OvertwistedVerdict { Contactomorphic, Inconclusive };

// Equality rule for positive surgeries on knots stabilized with both signs:
// contactomorphic iff homology order, Euler data and d3 data all agree.
OvertwistedVerdict overtwisted_equality(long long t, long long r, long long t2, long long r2,
                                        const Rat& slope);

struct RecoveryMatch {
    long long tb = 0, rot = 0;
};
struct RecoveryReport {
    int n = 0;
    long long tb = 0, rot = 0;
    bool unique = false;  // only (t, +-r) satisfies homology + d3 on the grid
    std::vector<RecoveryMatch> matches;
};
RecoveryReport lemma41_recovery(int n, long long t, long long r, long long grid = 30);

}  // namespace csurg::slopes
