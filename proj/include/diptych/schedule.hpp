#pragma once

#include <map>
#include <utility>
#include <vector>

#include "diptych/rectangle.hpp"

namespace diptych {

// One unprojection step, read off the chain of projections down from the top
// of the panel. nu counts inverse to elimination: s_0 = x_2 is eliminated
// last and adjoined first.
struct ProjectionStep {
    int nu = 0;
    GenId s;              // variable adjoined at this step
    int bar_i = 0, bar_j = 0;  // top corners of the nu-th panel
    Int alpha, beta;      // tags at the bar
    Monomial a_ann, b_ann;  // annotations at the bar, monomials in the letters
    Monomial h;             // hcf(a_ann, b_ann); always one of the two
};

// Tag/annotation state of the shrinking rectangle; snapshot[nu] is the nu-th
// panel, snapshot[k+l-2] the full rectangle.
struct RectangleSnapshot {
    std::vector<Int> x_tags, y_tags;
    Monomial a_ann, b_ann;
};

struct Spreadsheet {
    DiptychParams params;
    std::vector<ProjectionStep> steps;          // indexed by nu
    std::vector<RectangleSnapshot> snapshots;   // indexed by nu, one extra at the end
    std::map<int, std::pair<int, int>> intervals;  // i -> [first,last] j of bars (x_i, y_j)
};

// Simulates the elimination from the top of an AB-oriented rectangle
// (tag-1 boundary generators removed one at a time, annotations updated),
// then renumbers inversely. Requires the main case d,e >= 2, de > 4.
Spreadsheet schedule(const DiptychParams& params);

// Same simulation on a caller-supplied rectangle (used for the second panel
// via reversal). The rectangle must have its big end at the bottom.
Spreadsheet schedule_for(const LongRectangle& rect, const DiptychParams& params);

// The chain of shrinking annotated rectangles, full panel first.
std::vector<RectangleSnapshot> deconstruct_rectangle(const LongRectangle& rect_ab);

struct DivisorIdeal {
    std::vector<GenId> vanishing;  // x_0..x_{i-1}, y_0..y_{j-1}
    Monomial h;
};

DivisorIdeal divisor_ideal(const ProjectionStep& step);

std::map<int, std::pair<int, int>> intervals(const DiptychParams& params);

enum class MeetShape { cross, pitchfork };

struct MeetResult {
    MeetShape shape;
    int top_i = 0, top_j = 0;      // top bar after n1 eliminations from above
    int bottom_i = 0, bottom_j = 0;  // bottom bar after n2 from below
    std::vector<GenId> gens;       // the four generators of the shape
};

// Project n1 monomials down from the top of the AB panel and
// n2 = k+l-2-n1 up from the bottom of the LM panel; the four survivors form
// a cross or a pitchfork.
MeetResult cross_or_pitchfork(const DiptychParams& params, int n1);

// Bottom-up elimination order of the LM panel (starts with y_0).
std::vector<GenId> elimination_order_LM(const DiptychParams& params);
// Top-down elimination order of the AB panel (reverse of the s-order).
std::vector<GenId> elimination_order_AB(const DiptychParams& params);

}  // namespace diptych
