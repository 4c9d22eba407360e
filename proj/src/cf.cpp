#include "diptych/cf.hpp"

#include <algorithm>
#include <sstream>

namespace diptych {

ExtRational::ExtRational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (num == 0 && den == 0) throw InvariantError("ExtRational: 0/0");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0) {
        num = 1;
    } else {
        Int g = gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
}

Mat2 cf_to_matrix(const Tags& tags) {
    Mat2 m = Mat2::identity();
    for (const Int& c : tags) m = m * Mat2::elementary(c);
    return m;
}

ExtRational eval_cf(const Tags& tags) {
    Mat2 m = cf_to_matrix(tags);
    // m = (-q', q; -p', p), value p/q.
    return ExtRational(m.m22, m.m12);
}

Tags expand_fraction(const Int& r, const Int& a) {
    if (a <= 0) throw DomainError("expand_fraction: denominator must be >= 1");
    if (gcd(r < 0 ? Int(-r) : r, a) != 1)
        throw DomainError("expand_fraction: arguments must be coprime");
    Tags out;
    Int num = r, den = a;
    while (true) {
        Int b = ceil_div(num, den);
        out.push_back(b);
        Int next = b * den - num;  // 0 <= next < den
        if (next == 0) break;
        num = den;
        den = next;
    }
    return out;
}

Tags blowdown_at(const Tags& tags, std::size_t index) {
    if (index >= tags.size()) throw DomainError("blowdown_at: index out of range");
    if (tags[index] != 1) throw DomainError("blowdown_at: tag is not 1");
    if (tags.size() == 1) throw DomainError("blowdown_at: no neighbour to contract");
    Tags out;
    out.reserve(tags.size() - 1);
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i == index) continue;
        Int c = tags[i];
        if (i + 1 == index || i == index + 1) c -= 1;
        out.push_back(c);
    }
    return out;
}

ReduceResult reduce_to_zero(const Tags& tags) {
    ReduceResult res;
    Tags cur = tags;
    res.trace.push_back(cur);
    while (true) {
        if (cur.size() == 2 && cur[0] == 1 && cur[1] == 1) {
            res.is_zero = true;
            return res;
        }
        if (cur.size() == 1) {
            res.is_zero = (cur[0] == 0);
            return res;
        }
        auto it = std::find(cur.begin(), cur.end(), Int(1));
        if (it == cur.end()) {
            res.is_zero = false;
            return res;
        }
        cur = blowdown_at(cur, static_cast<std::size_t>(it - cur.begin()));
        res.trace.push_back(cur);
    }
}

ReciprocalOutcome reciprocal_identity_check(const Tags& tags) {
    if (tags.size() < 2) return ReciprocalOutcome::inapplicable;
    ExtRational v = eval_cf(tags);
    Tags rev(tags.rbegin(), tags.rend());
    ExtRational w = eval_cf(rev);
    if (v.is_infinity() || w.is_infinity()) return ReciprocalOutcome::inapplicable;
    if (v.num != w.num) return ReciprocalOutcome::fails;
    Tags interior(tags.begin() + 1, tags.end() - 1);
    Int n_interior = cf_to_matrix(interior).m22;
    return v.den * w.den == n_interior * v.num + 1 ? ReciprocalOutcome::holds
                                                   : ReciprocalOutcome::fails;
}

Tags complement(const Tags& tags) {
    for (const Int& c : tags)
        if (c < 2) throw DomainError("complement: all tags must be >= 2");
    ExtRational v = eval_cf(tags);
    if (v.is_infinity() || v.num <= v.den || v.den < 1)
        throw DomainError("complement: value must be a fraction p/q with p > q >= 1");
    return expand_fraction(v.num, v.num - v.den);
}

std::string tags_to_string(const Tags& tags) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i) os << ',';
        os << tags[i].get_str();
    }
    os << ']';
    return os.str();
}

}  // namespace diptych
