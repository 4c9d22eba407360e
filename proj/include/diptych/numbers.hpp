#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace diptych {

// All arithmetic in the library is exact. Integers are unbounded; rationals
// are kept canonical (positive denominator, coprime).
using Int = mpz_class;
using Rat = mpq_class;

inline Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q" with the "/q" omitted for integers; the JSON and CSV writers rely on
// this being canonical.
inline std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    v.canonicalize();
    return v;
}

// Domain errors: a caller handed in values outside an operation's stated
// precondition (CLI exit code 2).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters that are valid for the classifier but outside the main-case
// constructions handled here (CLI exit code 3).
struct OutOfScopeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; signals a broken input pair or a bug, never a
// user mistake.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace diptych
