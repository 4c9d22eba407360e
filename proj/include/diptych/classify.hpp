#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diptych/cf.hpp"
#include "diptych/numbers.hpp"

namespace diptych {

// Partner pair: the matrix (r,a;b,s) cut out by the top-smoothing panel and
// (r,g;h,s) by the bottom-smoothing one. Rules of the game:
//   r,s >= 1, a,b,g,h >= 0, ab = gh = rs-1,
//   a+h == 0 and b+g == 0 mod r and mod s.
struct MatrixPair {
    Mat2 ab;  // (r, a; b, s)
    Mat2 lm;  // (r, g; h, s)

    const Int& r() const { return ab.m11; }
    const Int& a() const { return ab.m12; }
    const Int& b() const { return ab.m21; }
    const Int& s() const { return ab.m22; }
    const Int& g() const { return lm.m12; }
    const Int& h() const { return lm.m21; }

    MatrixPair exchanged() const { return {lm, ab}; }
    MatrixPair rotated() const { return {ab.rotated(), lm.rotated()}; }
    bool operator==(const MatrixPair&) const = default;
};

enum class Variant { first, second, swapped_first, swapped_second };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Admissible k for a given product d*e; nullopt means unbounded.
std::optional<int> table21_max_k(const Int& de);

struct DiptychParams {
    Int d, e;
    int k = 1;
    Variant variant = Variant::first;

    bool main_case() const { return d >= 2 && e >= 2 && d * e > 4; }
    // Families handled by companion constructions rather than here; empty for
    // the main case.
    std::string excluded_case() const;
    int kappa() const { return k / 2; }
};

DiptychParams make_params(Int d, Int e, int k, Variant variant = Variant::first);

// Alternating product of k+1 factors per line, no admissibility check.
MatrixPair build_pair_raw(const Int& d, const Int& e, int k, Variant variant);

// Same, but rejects (d,e,k) outside the admissibility table.
MatrixPair build_pair(const DiptychParams& params);
MatrixPair build_pair(const Int& d, const Int& e, int k, Variant variant = Variant::first);

struct VerifyOutcome {
    bool ok = false;
    std::string violation;  // first broken equality/congruence, empty when ok
    Int d, e;               // defined when ok: a+h = d*s, b+g = e*r
    bool exceptional = false;
    std::string exceptional_branch;  // "b=g=0" or "a=h=0"
};

VerifyOutcome verify_rules(const MatrixPair& pair);

enum class DescentOp { op22, op23 };

struct DescentStepResult {
    MatrixPair pair;
    // The transforms preserve the equalities and congruences but may break
    // the sign conditions; that is the termination signal, reported here.
    bool nonneg = true;
};

// One reduction step. use_d selects which of the pair's two invariants feeds
// the first line (they alternate along a descent).
DescentStepResult descent_step(const MatrixPair& pair, DescentOp op, bool use_d = true);

struct Classification {
    bool exceptional = false;
    std::string exceptional_branch;
    Int d, e;
    int k = 0;
    Variant variant = Variant::first;  // normalised: first or second
};

// Attitude-driven infinite descent; recovers (d,e,k) and the factorisation
// family, or labels the pair exceptional.
Classification classify_descent(const MatrixPair& pair);

struct EnumeratedPair {
    MatrixPair pair;
    Classification cls;
};

// Brute-force search over all rule-satisfying pairs with entries <= bound,
// classified and sorted by (r,s,a,b,g,h).
std::vector<EnumeratedPair> enumerate_pairs(const Int& bound);

}  // namespace diptych
