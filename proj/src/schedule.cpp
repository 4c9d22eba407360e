#include "diptych/schedule.hpp"

#include <algorithm>

namespace diptych {

namespace {

void require_main_case(const DiptychParams& params) {
    if (!params.main_case())
        throw OutOfScopeError("projection scheduling needs the main case d,e >= 2, d*e > 4; " +
                              params.excluded_case());
}

struct SimState {
    std::vector<Int> xt, yt;
    int i_top, j_top;
    Monomial ann_a, ann_b;

    RectangleSnapshot snapshot() const {
        RectangleSnapshot s;
        s.x_tags.assign(xt.begin(), xt.begin() + i_top + 1);
        s.y_tags.assign(yt.begin(), yt.begin() + j_top + 1);
        s.a_ann = ann_a;
        s.b_ann = ann_b;
        return s;
    }
};

}  // namespace

Spreadsheet schedule_for(const LongRectangle& rect, const DiptychParams& params) {
    if (rect.big_end != BigEnd::bottom)
        throw DomainError("schedule_for: rectangle must be AB-oriented");
    int k = rect.k(), l = rect.l();
    int n_steps = k + l - 2;

    SimState st{rect.x_tags, rect.y_tags, k, l,
                Monomial::gen(rect.left_letter()), Monomial::gen(rect.right_letter())};

    Spreadsheet sheet;
    sheet.params = params;
    sheet.steps.resize(n_steps);
    sheet.snapshots.resize(n_steps + 1);
    sheet.snapshots[n_steps] = st.snapshot();

    for (int n = 0; n < n_steps; ++n) {
        bool can_y = st.j_top >= 2 && st.yt[st.j_top] == 1;
        bool can_x = st.i_top >= 2 && st.xt[st.i_top] == 1;
        GenId s;
        if (can_y) {
            // Right case: the eliminated tag-1 monomial is y_{j+1}; its
            // annotation moves across to the left corner.
            s = GenId::y(st.j_top);
            st.ann_a = st.ann_a * st.ann_b;
            --st.j_top;
        } else if (can_x) {
            s = GenId::x(st.i_top);
            st.ann_b = st.ann_a * st.ann_b;
            --st.i_top;
        } else {
            throw InvariantError("no tag-1 generator at the top of the rectangle");
        }
        st.xt[st.i_top] -= 1;
        st.yt[st.j_top] -= 1;

        int nu = n_steps - 1 - n;
        ProjectionStep& step = sheet.steps[nu];
        step.nu = nu;
        step.s = s;
        step.bar_i = st.i_top;
        step.bar_j = st.j_top;
        step.alpha = st.xt[st.i_top];
        step.beta = st.yt[st.j_top];
        step.a_ann = st.ann_a;
        step.b_ann = st.ann_b;
        step.h = Monomial::hcf(st.ann_a, st.ann_b);
        if (!(step.h == st.ann_a) && !(step.h == st.ann_b))
            throw InvariantError("h is neither annotation at step " + std::to_string(nu));
        sheet.snapshots[nu] = st.snapshot();
    }
    if (st.i_top != 1 || st.j_top != 1)
        throw InvariantError("elimination did not stop at the bar (x_1, y_1)");

    // Sanity checks against the closed-form bookkeeping.
    if (!sheet.steps.empty()) {
        const ProjectionStep& top = sheet.steps.back();
        if (!(top.s == GenId::y(l)))
            throw InvariantError("the first eliminated monomial is not y_l");
        if (!(top.h == Monomial::gen(rect.right_letter())))
            throw InvariantError("h at the top step is not the right-hand letter");
        if (k >= 2 && !(sheet.steps.front().s == GenId::x(2)))
            throw InvariantError("s_0 is not x_2");
    }
    for (std::size_t nu = 1; nu < sheet.steps.size(); ++nu)
        if (!sheet.steps[nu].h.divides(sheet.steps[nu - 1].h))
            throw InvariantError("h does not divide its predecessor");

    for (const ProjectionStep& step : sheet.steps) {
        auto it = sheet.intervals.find(step.bar_i);
        if (it == sheet.intervals.end())
            sheet.intervals[step.bar_i] = {step.bar_j, step.bar_j};
        else {
            it->second.first = std::min(it->second.first, step.bar_j);
            it->second.second = std::max(it->second.second, step.bar_j);
        }
    }
    // Adjacent intervals overlap in exactly one index.
    if (!sheet.intervals.empty()) {
        for (auto it = sheet.intervals.begin(); std::next(it) != sheet.intervals.end(); ++it) {
            auto nx = std::next(it);
            if (nx->first != it->first + 1 || nx->second.first != it->second.second)
                throw InvariantError("bar intervals are not adjacent");
        }
    }
    return sheet;
}

Spreadsheet schedule(const DiptychParams& params) {
    require_main_case(params);
    DiptychPanels panels = make_panels(params);
    Spreadsheet sheet = schedule_for(panels.ab, params);
    // Closed forms from the spreadsheet bookkeeping: the length of the y side
    // and the alternating half-round pattern.
    if (!params.d.fits_slong_p() || !params.e.fits_slong_p()) return sheet;
    int k = params.k, kappa = params.kappa();
    long d = params.d.get_si(), e = params.e.get_si();
    // k = 1 sits below the spreadsheet: both sides are bare and nothing is
    // eliminated.
    long l_expected = k == 1 ? 1
                     : k % 2 == 1 ? (d + e - 4) * kappa + 2
                                  : (d - 2) * kappa + (e - 2) * (kappa - 1) + 2;
    if (panels.ab.l() != l_expected) throw InvariantError("y side length disagrees with Table 1");
    // y-runs between consecutive x adjunctions alternate e-2 / d-2 (odd k
    // leads with e-2, even with d-2); the final run is d-1.
    std::vector<long> runs;
    long cur = -1;
    for (const ProjectionStep& step : sheet.steps) {
        if (step.s.kind == GenId::Kind::X) {
            if (cur >= 0) runs.push_back(cur);
            cur = 0;
        } else if (cur >= 0) {
            ++cur;
        }
    }
    if (cur >= 0) runs.push_back(cur);
    for (std::size_t m = 0; m < runs.size(); ++m) {
        long expect;
        if (m + 1 == runs.size())
            expect = d - 1;
        else if (k % 2 == 1)
            expect = m % 2 == 0 ? e - 2 : d - 2;
        else
            expect = m % 2 == 0 ? d - 2 : e - 2;
        if (runs[m] != expect) throw InvariantError("half-round pattern disagrees with Table 1");
    }
    return sheet;
}

std::vector<RectangleSnapshot> deconstruct_rectangle(const LongRectangle& rect_ab) {
    if (rect_ab.big_end != BigEnd::bottom)
        throw DomainError("deconstruct_rectangle: rectangle must be AB-oriented");
    // Reuse the simulation; snapshots run from the full rectangle down.
    DiptychParams p;
    p.d = rect_ab.x_tags.back();
    p.e = rect_ab.k() >= 2 ? rect_ab.x_tags[rect_ab.k() - 1] : Int(0);
    p.k = rect_ab.k();
    Spreadsheet sheet = schedule_for(rect_ab, p);
    std::vector<RectangleSnapshot> out(sheet.snapshots.rbegin(), sheet.snapshots.rend());
    return out;
}

DivisorIdeal divisor_ideal(const ProjectionStep& step) {
    DivisorIdeal ideal;
    for (int i = 0; i < step.bar_i; ++i) ideal.vanishing.push_back(GenId::x(i));
    for (int j = 0; j < step.bar_j; ++j) ideal.vanishing.push_back(GenId::y(j));
    ideal.h = step.h;
    return ideal;
}

std::map<int, std::pair<int, int>> intervals(const DiptychParams& params) {
    return schedule(params).intervals;
}

namespace {

// Spreadsheet of the LM panel, obtained by running the AB simulation on the
// reversed rectangle.
Spreadsheet lm_spreadsheet(const DiptychPanels& panels) {
    return schedule_for(reversed(panels.lm), panels.params);
}

}  // namespace

MeetResult cross_or_pitchfork(const DiptychParams& params, int n1) {
    require_main_case(params);
    DiptychPanels panels = make_panels(params);
    int k = panels.ab.k(), l = panels.ab.l();
    int n_steps = k + l - 2;
    if (n1 < 0 || n1 > n_steps) throw DomainError("n1 out of range");
    int n2 = n_steps - n1;

    Spreadsheet ab = schedule_for(panels.ab, params);
    Spreadsheet lm = lm_spreadsheet(panels);

    MeetResult res;
    if (n1 == 0) {
        res.top_i = k;
        res.top_j = l;
    } else {
        const ProjectionStep& s = ab.steps[n_steps - n1];
        res.top_i = s.bar_i;
        res.top_j = s.bar_j;
    }
    if (n2 == 0) {
        res.bottom_i = 0;
        res.bottom_j = 0;
    } else {
        const ProjectionStep& s = lm.steps[n_steps - n2];
        res.bottom_i = k - s.bar_i;
        res.bottom_j = l - s.bar_j;
    }
    if (!(res.bottom_i < res.top_i && res.bottom_j <= res.top_j))
        throw InvariantError("bars do not interleave (i' < i, j' <= j fails)");
    if (res.bottom_i == res.top_i - 1 && res.bottom_j == res.top_j - 1) {
        res.shape = MeetShape::cross;
        res.gens = {GenId::x(res.top_i), GenId::x(res.bottom_i), GenId::y(res.top_j),
                    GenId::y(res.bottom_j)};
    } else if (res.bottom_i == res.top_i - 2 && res.bottom_j == res.top_j) {
        res.shape = MeetShape::pitchfork;
        res.gens = {GenId::x(res.top_i), GenId::x(res.top_i - 1), GenId::x(res.bottom_i),
                    GenId::y(res.top_j)};
    } else {
        throw InvariantError("survivors form neither a cross nor a pitchfork");
    }
    return res;
}

std::vector<GenId> elimination_order_LM(const DiptychParams& params) {
    require_main_case(params);
    DiptychPanels panels = make_panels(params);
    Spreadsheet lm = lm_spreadsheet(panels);
    int k = panels.ab.k(), l = panels.ab.l();
    std::vector<GenId> order;
    for (auto it = lm.steps.rbegin(); it != lm.steps.rend(); ++it) {
        GenId g = it->s;
        order.push_back(g.kind == GenId::Kind::X ? GenId::x(k - g.index)
                                                 : GenId::y(l - g.index));
    }
    return order;
}

std::vector<GenId> elimination_order_AB(const DiptychParams& params) {
    Spreadsheet ab = schedule(params);
    std::vector<GenId> order;
    for (auto it = ab.steps.rbegin(); it != ab.steps.rend(); ++it) order.push_back(it->s);
    return order;
}

}  // namespace diptych
