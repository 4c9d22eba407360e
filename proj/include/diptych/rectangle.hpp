#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "diptych/classify.hpp"
#include "diptych/gens.hpp"

namespace diptych {

enum class Panel { AB, LM };
enum class BigEnd { bottom, top };

// One toric panel as a long rectangle: boundary generators x_0..x_k up the
// left side and y_0..y_l up the right, with their tags. Both panels are
// stored bottom-up; the LM panel has its big end at the top.
struct LongRectangle {
    Panel panel = Panel::AB;
    std::vector<Int> x_tags;  // tag at x_i
    std::vector<Int> y_tags;  // tag at y_j
    BigEnd big_end = BigEnd::bottom;
    Mat2 matrix;  // (r,a;b,s) for AB, (r,g;h,s) for LM

    int k() const { return static_cast<int>(x_tags.size()) - 1; }
    int l() const { return static_cast<int>(y_tags.size()) - 1; }
    // Deformation letters annotating the little end: (A,B) or (L,M).
    GenId left_letter() const { return panel == Panel::AB ? GenId::A() : GenId::L(); }
    GenId right_letter() const { return panel == Panel::AB ? GenId::B() : GenId::M(); }

    bool operator==(const LongRectangle&) const = default;
};

LongRectangle rectangle_AB(const MatrixPair& pair);
LongRectangle rectangle_LM(const MatrixPair& pair);
// Top-for-bottom flip; turns the LM panel into an AB-shaped rectangle with
// letters L,M and vice versa.
LongRectangle reversed(const LongRectangle& rect);

enum class TopAttitude { ak_ge2_bl_eq1, ak_eq1_bl_ge2 };
enum class BottomAttitude { a0_neg_b0_zero, a0_zero_b0_neg };

struct Attitude {
    bool initial = false;  // r or s = 1, patterns need not apply
    TopAttitude top = TopAttitude::ak_ge2_bl_eq1;
    BottomAttitude bottom = BottomAttitude::a0_zero_b0_neg;
    std::string name() const;
};

// Which of the four corner-tag patterns the rectangle exhibits; checked
// against the equivalent inequalities among r,s,a,b.
Attitude attitude(const LongRectangle& rect);

// The concatenated tag word certifying that the rectangle closes up (an
// expansion of zero), read from the little end around the big end.
Tags zero_word(const LongRectangle& rect);
bool zero_check(const LongRectangle& rect);

// Laurent expressions of all boundary generators and letters in the panel's
// corner basis: (x_k, y_l, A, B) for the AB panel, (x_0, y_0, L, M) for LM.
std::map<GenId, Monomial> generators_laurent(const LongRectangle& rect);

// Toric value of u*w in the panel, as a Laurent monomial in the corner basis.
Monomial toric_relation(const LongRectangle& rect, const GenId& u, const GenId& w);

struct CornerEquation {
    GenId corner;        // generator carrying the tag
    GenId lhs1, lhs2;    // lhs1*lhs2 = rhs
    Int tag;
    Monomial laurent_rhs;                  // may carry one negative exponent
    std::optional<Monomial> polynomial_rhs;  // replacement via the opposite
                                             // generator when anomalous
    bool anomalous = false;
};

// The four corner tag equations, ordered [x_0, y_0, x_k, y_l].
std::array<CornerEquation, 4> corner_equations(const LongRectangle& rect);

struct ConeFacets {
    // Primitive normals of the six facets in the (xi, eta, A, B) basis.
    std::array<std::array<Int, 4>, 6> normals;
    bool gorenstein = false;  // all normals evaluate to 1 on AB
};

ConeFacets cone_facets(const MatrixPair& pair);

struct TentEquation {
    GenId lhs1, lhs2;
    Monomial rhs;       // x_{i-1}x_{i+1} = x_i^{a_i}; unused for cross terms
    bool cross = false;  // cross equations read x_i y_j = 0
};

// Generators of the tent ideal: both sides' tag equations plus all cross
// equations (long equations are syzygy-derivable and not emitted).
std::vector<TentEquation> tent_equations(const LongRectangle& rect_ab);

// The partner pair whose AB rectangle carries tags d, e, d, ... reading down
// from the top of the x side; this is the indexing every panel-level module
// uses.
MatrixPair diptych_pair(const DiptychParams& params);

struct DiptychPanels {
    DiptychParams params;
    MatrixPair pair;
    LongRectangle ab, lm;
};

DiptychPanels make_panels(const DiptychParams& params);

// Fixed combinatorics of the polytope spanned by both monomial cones: eight
// vertices and twelve triangular faces, letters of valency 5 and corner
// monomials of valency 4. Purely static; no face-lattice computation.
struct PolytopeIncidence {
    std::vector<std::string> vertices;
    std::vector<std::array<std::string, 3>> faces;
};

PolytopeIncidence pretty_polytope_incidence(int k, int l);

}  // namespace diptych
