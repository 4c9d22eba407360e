#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "diptych/schedule.hpp"
#include "diptych/weights.hpp"

namespace diptych {

// Trinomial relation u*w = t1 + t2 with unit coefficients. Terms are stored
// with the L,M-free term first (ties broken by total A,B degree, then
// lexicographically).
struct Trinomial {
    GenId u, w;
    Monomial t1, t2;

    static Trinomial make(GenId a, GenId b, Monomial s1, Monomial s2);
    std::pair<GenId, GenId> key() const { return {u, w}; }
    bool operator==(const Trinomial&) const = default;
};

struct SignedTerm {
    int sign = 1;
    Monomial m;
    bool operator==(const SignedTerm&) const = default;
};

// Skew 5x5 matrix, upper entries only; entry(i,j) with 1 <= i < j <= 5.
struct SkewMatrix5 {
    std::array<SignedTerm, 10> upper;

    static int slot(int i, int j);
    const SignedTerm& entry(int i, int j) const { return upper[slot(i, j)]; }
    SignedTerm& entry(int i, int j) { return upper[slot(i, j)]; }
    bool operator==(const SkewMatrix5&) const = default;
};

// Pf_{ij.kl} = a_ij a_kl - a_ik a_jl + a_il a_jk as a signed monomial sum.
std::map<Monomial, Int> pfaffian(const SkewMatrix5& m, int i, int j, int k, int l);

struct PentagramResult {
    SkewMatrix5 matrix;
    std::array<Trinomial, 3> outputs;  // lhs pairs {s,a23}, {s,a34}, {a12,a45}
    Monomial g;
};

// One unprojection step: place the four generators shared by E1, E2 on the
// superdiagonal, -new_var at (1,5) and g at (2,4); the remaining entries are
// forced by matching Pf_{23.45} to E1 and Pf_{12.34} to E2 term by term.
// E1's lhs pair lands in slots (a_23, a_45), E2's in (a_12, a_34). By default
// the terms matching through a_24 are the ones g divides; `designated` pins
// them explicitly when g leaves a choice (e.g. g = 1).
PentagramResult pentagram_solve(
    const Trinomial& e1, const Trinomial& e2, const GenId& new_var, const Monomial& g,
    const std::optional<std::pair<Monomial, Monomial>>& designated = std::nullopt);

struct PentagramStep {
    int nu = 0;
    GenId s;
    Trinomial in1, in2;
    PentagramResult result;
};

struct EquationStore {
    std::map<std::pair<GenId, GenId>, Trinomial> equations;
    std::vector<PentagramStep> log;

    const Trinomial& at(const GenId& a, const GenId& b) const;
    bool has(const GenId& a, const GenId& b) const;
    // Inserts or, for an existing key, checks exact agreement.
    void insert(const Trinomial& eq);
};

// The two defining equations of the codimension-2 complete intersection at
// the bottom: each merges the corresponding corner tag equations of the two
// panels (anomalous corners contribute their polynomial replacement).
std::pair<Trinomial, Trinomial> initial_ci(const LongRectangle& rect_ab,
                                           const LongRectangle& rect_lm);

enum class ChainDirection { bottom_up, top_down };

// Serial unprojection: adjoin s_0, s_1, ... in schedule order, three new
// trinomials per step; 2 + 3(k+l-2) equations in total. The top-down
// direction runs the same construction on the exchanged diptych and
// relabels, which is how the classical top-first presentation arises.
EquationStore serial_chain(const DiptychParams& params,
                           ChainDirection direction = ChainDirection::bottom_up);

// Every stored equation is an eigenfunction relation: weight(u)+weight(w)
// equals the weight of both terms.
bool homogeneity_check(const EquationStore& store, const WeightTable& table);

// Setting L=M=0 (resp. A=B=0) must recover each panel's toric relation for
// every lhs pair.
bool section_check(const EquationStore& store, const LongRectangle& rect_ab,
                   const LongRectangle& rect_lm);

// Brute-force check of the divisor containment at step nu: every monomial in
// x_i, y_j, A, B, L, M (exponents <= bound) whose weight lies in R(nu) is
// divisible by h_nu.
bool claim_divisibility_check(const DiptychParams& params, int nu, long exponent_bound);

// Same search for one target weight; returns the offending monomials, if
// any, as exponent tuples (xi, eta, alpha, beta, lambda, mu).
std::vector<std::array<Int, 6>> claim_offenders(const WeightTable& table,
                                                const ProjectionStep& step,
                                                const TorusWeight& target, long exponent_bound);

}  // namespace diptych
