#pragma once

#include <compare>
#include <map>
#include <string>

#include "diptych/numbers.hpp"

namespace diptych {

// A coordinate-ring generator: one of the deformation letters A, B, L, M or a
// boundary monomial x_i / y_j. Ordering matches the printing convention
// (letters first, then x's, then y's).
struct GenId {
    enum class Kind : unsigned char { A, B, L, M, X, Y };
    Kind kind = Kind::A;
    int index = 0;  // only meaningful for X and Y

    static GenId A() { return {Kind::A, 0}; }
    static GenId B() { return {Kind::B, 0}; }
    static GenId L() { return {Kind::L, 0}; }
    static GenId M() { return {Kind::M, 0}; }
    static GenId x(int i) { return {Kind::X, i}; }
    static GenId y(int j) { return {Kind::Y, j}; }

    bool is_letter() const { return kind != Kind::X && kind != Kind::Y; }
    std::string name() const;
    static GenId parse(const std::string& name);

    auto operator<=>(const GenId&) const = default;
};

// Sparse exponent vector over generator ids; exponents are exact integers and
// may be negative (Laurent monomials). The zero map is the monomial 1.
class Monomial {
  public:
    Monomial() = default;
    static Monomial unit() { return {}; }
    static Monomial gen(GenId g, Int exp = 1);

    const Int& exponent(const GenId& g) const;
    void set_exponent(const GenId& g, Int exp);
    bool is_unit() const { return exp_.empty(); }
    bool nonnegative() const;
    // Total degree in the given letters.
    Int degree_in(GenId::Kind k1, GenId::Kind k2) const;

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial inverse() const;
    // Exact quotient; throws InvariantError if not divisible (all exponents
    // must stay >= 0 when both inputs are polynomial).
    Monomial divide_exact(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    static Monomial hcf(const Monomial& a, const Monomial& b);

    const std::map<GenId, Int>& exponents() const { return exp_; }
    std::string str() const;

    auto operator<=>(const Monomial&) const = default;

  private:
    std::map<GenId, Int> exp_;
    void trim(const GenId& g);
};

}  // namespace diptych
