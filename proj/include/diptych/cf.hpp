#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diptych/numbers.hpp"

namespace diptych {

// A word of Jung-Hirzebruch tags [c_1,...,c_n], evaluated as
// c_1 - 1/(c_2 - 1/(... - 1/c_n)). Entries may be any integers; the empty
// word is allowed and acts as the identity.
using Tags = std::vector<Int>;

struct Mat2 {
    Int m11, m12, m21, m22;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    // Elementary factor (0,1;-1,c); every tag contributes one of these.
    static Mat2 elementary(const Int& c) { return {0, 1, -1, c}; }

    Int det() const { return m11 * m22 - m12 * m21; }
    Mat2 transposed() const { return {m11, m21, m12, m22}; }
    // Conjugation by the quarter turn: swaps both rows and both columns.
    Mat2 rotated() const { return {m22, m21, m12, m11}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    bool operator==(const Mat2&) const = default;
};

// A point of P^1(Q): num/den with gcd 1, den >= 0, and den == 0 encoding the
// point at infinity (normalised to 1/0). Division by zero in the recursive
// evaluation is legal through the matrix form.
struct ExtRational {
    Int num, den;

    ExtRational(Int n, Int d);
    bool is_infinity() const { return den == 0; }
    bool operator==(const ExtRational&) const = default;
};

// Ordered product of elementary factors; empty input gives the identity.
// The word's value and first convergent sit in the columns:
// product = (-q', q; -p', p) with value p/q.
Mat2 cf_to_matrix(const Tags& tags);

ExtRational eval_cf(const Tags& tags);

// Expansion of r/a with round-up partial quotients: first entry ceil(r/a),
// all later entries >= 2. Requires a >= 1 and gcd(|r|, a) == 1.
Tags expand_fraction(const Int& r, const Int& a);

// Contract a tag equal to 1: an interior 1 decrements both neighbours, a
// terminal 1 decrements its single neighbour.
Tags blowdown_at(const Tags& tags, std::size_t index);

struct ReduceResult {
    bool is_zero = false;
    // Every state visited, starting with the input and ending with the
    // terminal word.
    std::vector<Tags> trace;
};

// Serial blowdown, contracting the leftmost 1 until none is left or the word
// is [1,1]. The word is an expansion of zero exactly when the terminal state
// is [0] or [1,1].
ReduceResult reduce_to_zero(const Tags& tags);

enum class ReciprocalOutcome { holds, fails, inapplicable };

// Checks q*q^star == N*p + 1, where p/q is the word's value, p/q^star the
// reversed word's, and N the numerator of the interior subword (N of the
// empty word is 1). Words of length < 2 or with an infinite value are
// reported inapplicable.
ReciprocalOutcome reciprocal_identity_check(const Tags& tags);

// For a word with all tags >= 2 and value p/q > 1, the expansion of p/(p-q).
// Appending the reverse of the input, a 1, and the complement always gives an
// expansion of zero.
Tags complement(const Tags& tags);

std::string tags_to_string(const Tags& tags);

}  // namespace diptych
