#pragma once

#include <array>
#include <map>
#include <vector>

#include "diptych/rectangle.hpp"

namespace diptych {

// Exact T-weight in the impartial basis, components ordered (L, M, A, B).
struct TorusWeight {
    std::array<Rat, 4> w{};

    Rat& operator[](int i) { return w[i]; }
    const Rat& operator[](int i) const { return w[i]; }
    bool operator==(const TorusWeight&) const = default;

    friend TorusWeight operator+(const TorusWeight& a, const TorusWeight& b);
    friend TorusWeight operator-(const TorusWeight& a, const TorusWeight& b);
    friend TorusWeight operator*(const Rat& c, const TorusWeight& a);
};

using RatPair = std::array<Rat, 2>;

RatPair pi_AB(const TorusWeight& w);
RatPair pi_LM(const TorusWeight& w);

struct WeightTable {
    DiptychParams params;
    // Denominators at the corners: x_0 = (-1/denom_L, 0, gamma, delta) and
    // y_0 = (0, -1/denom_M, ...). {denom_L, denom_M} = {d, e} as sets; which
    // is which swaps with the parity of k.
    Int denom_L, denom_M;
    std::array<Rat, 4> abcd;  // alpha, beta, gamma, delta
    std::map<GenId, TorusWeight> weights;

    const TorusWeight& of(const GenId& g) const;
    TorusWeight weight_of(const Monomial& m) const;
};

// Weights of all generators: the top block from the k-factor matrix product,
// the sides by the tag recurrences, everything cross-checked against the
// corner tag equations of both panels. Needs d, e >= 2.
WeightTable weight_table(const DiptychParams& params);
WeightTable weight_table(const DiptychPanels& panels);

// pi_LM strictly increases along both sides while pi_AB strictly decreases.
bool monotonicity_check(const WeightTable& table);

// No boundary generator's weight is a bounded nonnegative combination of the
// other generators' weights.
bool minimal_generator_check(const WeightTable& table, long exponent_bound);

// Class in the quotient torus Q = M/M', written in the basis given by the
// classes of x_0 (order modulus_d) and y_0 (order modulus_e).
struct PaddedCellClass {
    Int residue_d, residue_e;
    bool operator==(const PaddedCellClass&) const = default;
};

struct PaddedCell {
    Int modulus_d, modulus_e;
    std::map<GenId, PaddedCellClass> classes;

    PaddedCellClass add(const PaddedCellClass& a, const PaddedCellClass& b) const;
    PaddedCellClass neg(const PaddedCellClass& a) const;
};

// Residues of every boundary generator, with the characteristic relations
// (x-classes of period 4, x_3 = y_0, the y-walk) asserted in the main case.
PaddedCell padded_cell(const DiptychParams& params);

struct ScissorsRow {
    GenId gen;
    Int l_units, m_units;  // pi_LM scaled by (denom_L, denom_M)
};

std::vector<ScissorsRow> scissors_export(const WeightTable& table);

}  // namespace diptych
