#include "diptych/rectangle.hpp"

#include <algorithm>

namespace diptych {

namespace {

// Tags of one side read off the matrix columns: [t_0..t_{n-1}] from -lo/n0
// and [t_n..t_1] from hi/n0; the overlap must agree.
std::vector<Int> side_tags(const Int& lo, const Int& hi, const Int& n0) {
    Tags bottom = expand_fraction(-lo, n0);  // t_0 .. t_{n-1}
    Tags top = expand_fraction(hi, n0);      // t_n .. t_1
    if (bottom.size() != top.size())
        throw InvariantError("side expansions disagree in length");
    std::size_t n = bottom.size();
    std::vector<Int> tags(n + 1);
    for (std::size_t i = 0; i < n; ++i) tags[i] = bottom[i];
    tags[n] = top[0];
    for (std::size_t i = 1; i < n; ++i)
        if (top[n - i] != bottom[i])
            throw InvariantError("side expansions disagree on interior tags");
    return tags;
}

LongRectangle ab_shape_from_matrix(const Mat2& m) {
    LongRectangle rect;
    rect.matrix = m;
    rect.big_end = BigEnd::bottom;
    rect.x_tags = side_tags(m.m21, m.m12, m.m11);  // from -b/r and a/r
    rect.y_tags = side_tags(m.m12, m.m21, m.m22);  // from -a/s and b/s
    return rect;
}

}  // namespace

LongRectangle rectangle_AB(const MatrixPair& pair) {
    VerifyOutcome v = verify_rules(pair);
    if (!v.ok) throw DomainError("rectangle_AB: " + v.violation);
    LongRectangle rect = ab_shape_from_matrix(pair.ab);
    rect.panel = Panel::AB;
    return rect;
}

LongRectangle rectangle_LM(const MatrixPair& pair) {
    VerifyOutcome v = verify_rules(pair);
    if (!v.ok) throw DomainError("rectangle_LM: " + v.violation);
    // Upside down, the LM panel is an AB-shaped rectangle for (r,g;h,s); all
    // but the corner tags are common with the AB panel.
    LongRectangle rect = ab_shape_from_matrix(pair.lm);
    std::reverse(rect.x_tags.begin(), rect.x_tags.end());
    std::reverse(rect.y_tags.begin(), rect.y_tags.end());
    rect.big_end = BigEnd::top;
    rect.panel = Panel::LM;
    return rect;
}

LongRectangle reversed(const LongRectangle& rect) {
    LongRectangle out = rect;
    std::reverse(out.x_tags.begin(), out.x_tags.end());
    std::reverse(out.y_tags.begin(), out.y_tags.end());
    out.big_end = rect.big_end == BigEnd::bottom ? BigEnd::top : BigEnd::bottom;
    return out;
}

std::string Attitude::name() const {
    if (initial) return "initial";
    std::string t = top == TopAttitude::ak_ge2_bl_eq1 ? "top: a_k>=2, b_l=1"
                                                      : "top: a_k=1, b_l>=2";
    std::string b = bottom == BottomAttitude::a0_neg_b0_zero
                        ? "bottom: a_0<=-1, b_0=0"
                        : "bottom: a_0=0, b_0<=-1";
    return t + "; " + b;
}

Attitude attitude(const LongRectangle& rect) {
    const LongRectangle work = rect.big_end == BigEnd::bottom ? rect : reversed(rect);
    const Mat2& m = work.matrix;
    Attitude att;
    if (m.m11 == 1 || m.m22 == 1) {
        att.initial = true;
        return att;
    }
    const Int &a0 = work.x_tags.front(), &ak = work.x_tags.back();
    const Int &b0 = work.y_tags.front(), &bl = work.y_tags.back();
    if (ak >= 2 && bl == 1)
        att.top = TopAttitude::ak_ge2_bl_eq1;
    else if (ak == 1 && bl >= 2)
        att.top = TopAttitude::ak_eq1_bl_ge2;
    else
        throw InvariantError("rectangle top corners match no attitude case");
    if (a0 <= -1 && b0 == 0)
        att.bottom = BottomAttitude::a0_neg_b0_zero;
    else if (a0 == 0 && b0 <= -1)
        att.bottom = BottomAttitude::a0_zero_b0_neg;
    else
        throw InvariantError("rectangle bottom corners match no attitude case");
    // The patterns are equivalent to inequalities among the matrix entries.
    const Int &r = m.m11, &a = m.m12, &b = m.m21, &s = m.m22;
    bool top_ok = att.top == TopAttitude::ak_ge2_bl_eq1 ? (r < a && b < s) : (r > a && b > s);
    bool bot_ok = att.bottom == BottomAttitude::a0_neg_b0_zero ? (r < b && a < s)
                                                               : (r > b && a > s);
    if (!top_ok || !bot_ok)
        throw InvariantError("attitude pattern disagrees with matrix inequalities");
    return att;
}

Tags zero_word(const LongRectangle& rect) {
    const LongRectangle work = rect.big_end == BigEnd::bottom ? rect : reversed(rect);
    int k = work.k(), l = work.l();
    auto word_a0 = [&] {  // a_0 = 0: [a_2..a_k, b_l..b_1]
        Tags w;
        for (int i = 2; i <= k; ++i) w.push_back(work.x_tags[i]);
        for (int j = l; j >= 1; --j) w.push_back(work.y_tags[j]);
        return w;
    };
    auto word_b0 = [&] {  // b_0 = 0: [a_1..a_k, b_l..b_2]
        Tags w;
        for (int i = 1; i <= k; ++i) w.push_back(work.x_tags[i]);
        for (int j = l; j >= 2; --j) w.push_back(work.y_tags[j]);
        return w;
    };
    Tags w;
    if (work.x_tags[0] == 0 && work.y_tags[0] != 0)
        w = word_a0();
    else if (work.y_tags[0] == 0 && work.x_tags[0] != 0)
        w = word_b0();
    else if (work.x_tags[0] == 0 && work.y_tags[0] == 0)
        w = reduce_to_zero(word_a0()).is_zero ? word_a0() : word_b0();
    else
        throw InvariantError("no zero corner tag at the big end");
    if (rect.big_end == BigEnd::top) std::reverse(w.begin(), w.end());
    return w;
}

bool zero_check(const LongRectangle& rect) {
    return reduce_to_zero(zero_word(rect)).is_zero;
}

std::map<GenId, Monomial> generators_laurent(const LongRectangle& rect) {
    std::map<GenId, Monomial> out;
    GenId P = rect.left_letter(), Q = rect.right_letter();
    out[P] = Monomial::gen(P);
    out[Q] = Monomial::gen(Q);
    int k = rect.k(), l = rect.l();
    if (rect.big_end == BigEnd::bottom) {
        // Continued division downward from the corner basis x_k, y_l, and the
        // top tag equations x_{k-1}y_l = P x_k^{a_k}, x_k y_{l-1} = Q y_l^{b_l}.
        out[GenId::x(k)] = Monomial::gen(GenId::x(k));
        out[GenId::y(l)] = Monomial::gen(GenId::y(l));
        if (k >= 1) {
            out[GenId::x(k - 1)] = Monomial::gen(P) * Monomial::gen(GenId::x(k), rect.x_tags[k]) *
                                   Monomial::gen(GenId::y(l), -1);
            for (int i = k - 2; i >= 0; --i) {
                Monomial m = out[GenId::x(i + 2)].inverse();
                const Monomial& mid = out[GenId::x(i + 1)];
                const Int& t = rect.x_tags[i + 1];
                for (const auto& [g, e] : mid.exponents()) {
                    Monomial f = Monomial::gen(g, e * t);
                    m *= f;
                }
                out[GenId::x(i)] = m;
            }
        }
        if (l >= 1) {
            out[GenId::y(l - 1)] = Monomial::gen(Q) * Monomial::gen(GenId::y(l), rect.y_tags[l]) *
                                   Monomial::gen(GenId::x(k), -1);
            for (int j = l - 2; j >= 0; --j) {
                Monomial m = out[GenId::y(j + 2)].inverse();
                const Monomial& mid = out[GenId::y(j + 1)];
                const Int& t = rect.y_tags[j + 1];
                for (const auto& [g, e] : mid.exponents()) m *= Monomial::gen(g, e * t);
                out[GenId::y(j)] = m;
            }
        }
    } else {
        // Continued division upward from the corner basis x_0, y_0 and the
        // bottom tag equations x_1y_0 = P x_0^{a_0}, x_0y_1 = Q y_0^{b_0}.
        out[GenId::x(0)] = Monomial::gen(GenId::x(0));
        out[GenId::y(0)] = Monomial::gen(GenId::y(0));
        if (k >= 1) {
            out[GenId::x(1)] = Monomial::gen(P) * Monomial::gen(GenId::x(0), rect.x_tags[0]) *
                               Monomial::gen(GenId::y(0), -1);
            for (int i = 2; i <= k; ++i) {
                Monomial m = out[GenId::x(i - 2)].inverse();
                const Monomial& mid = out[GenId::x(i - 1)];
                const Int& t = rect.x_tags[i - 1];
                for (const auto& [g, e] : mid.exponents()) m *= Monomial::gen(g, e * t);
                out[GenId::x(i)] = m;
            }
        }
        if (l >= 1) {
            out[GenId::y(1)] = Monomial::gen(Q) * Monomial::gen(GenId::y(0), rect.y_tags[0]) *
                               Monomial::gen(GenId::x(0), -1);
            for (int j = 2; j <= l; ++j) {
                Monomial m = out[GenId::y(j - 2)].inverse();
                const Monomial& mid = out[GenId::y(j - 1)];
                const Int& t = rect.y_tags[j - 1];
                for (const auto& [g, e] : mid.exponents()) m *= Monomial::gen(g, e * t);
                out[GenId::y(j)] = m;
            }
        }
    }
    return out;
}

Monomial toric_relation(const LongRectangle& rect, const GenId& u, const GenId& w) {
    auto gens = generators_laurent(rect);
    auto iu = gens.find(u), iw = gens.find(w);
    if (iu == gens.end() || iw == gens.end())
        throw DomainError("toric_relation: generator not on this panel");
    return iu->second * iw->second;
}

namespace {

// Corner records for a rectangle in AB orientation (big end at the bottom),
// with deformation letters P (left) and Q (right).
std::array<CornerEquation, 4> corners_ab_oriented(const LongRectangle& rect) {
    const Mat2& m = rect.matrix;
    const Int &r = m.m11, &a = m.m12, &b = m.m21, &s = m.m22;
    int k = rect.k(), l = rect.l();
    GenId P = rect.left_letter(), Q = rect.right_letter();
    const Int &a0 = rect.x_tags[0], &ak = rect.x_tags[k];
    const Int &b0 = rect.y_tags[0], &bl = rect.y_tags[l];

    std::array<CornerEquation, 4> out;
    // x_1 y_0 = P^b Q^s x_0^{a_0}
    out[0] = {GenId::x(0), GenId::x(1), GenId::y(0), a0,
              Monomial::gen(P, b) * Monomial::gen(Q, s) * Monomial::gen(GenId::x(0), a0),
              std::nullopt, a0 < 0};
    // x_0 y_1 = P^r Q^a y_0^{b_0}
    out[1] = {GenId::y(0), GenId::x(0), GenId::y(1), b0,
              Monomial::gen(P, r) * Monomial::gen(Q, a) * Monomial::gen(GenId::y(0), b0),
              std::nullopt, b0 < 0};
    // x_{k-1} y_l = P x_k^{a_k}
    out[2] = {GenId::x(k), GenId::x(k - 1), GenId::y(l), ak,
              Monomial::gen(P) * Monomial::gen(GenId::x(k), ak), std::nullopt, ak < 0};
    // x_k y_{l-1} = Q y_l^{b_l}
    out[3] = {GenId::y(l), GenId::x(k), GenId::y(l - 1), bl,
              Monomial::gen(Q) * Monomial::gen(GenId::y(l), bl), std::nullopt, bl < 0};

    // Polynomial replacements substitute the opposite corner's generator for
    // the negative power, e.g. y_0^{-1} = x_1 P^{-b} Q^{-s} x_0^{-a_0}.
    auto replace = [](const Monomial& rhs, const GenId& bad, const Monomial& inverse_of_bad) {
        Monomial out_m = Monomial::unit();
        Int neg = rhs.exponent(bad);  // < 0
        for (const auto& [g, e] : rhs.exponents())
            if (!(g == bad)) out_m *= Monomial::gen(g, e);
        for (const auto& [g, e] : inverse_of_bad.exponents()) out_m *= Monomial::gen(g, e * -neg);
        return out_m;
    };
    for (auto& ce : out) {
        if (!ce.anomalous) {
            ce.polynomial_rhs = ce.laurent_rhs;
            continue;
        }
        Monomial inv;  // expression for corner^{-1} from the partner corner
        if (ce.corner == GenId::y(0))
            inv = Monomial::gen(GenId::x(1)) * Monomial::gen(P, -b) * Monomial::gen(Q, -s) *
                  Monomial::gen(GenId::x(0), -a0);
        else if (ce.corner == GenId::x(0))
            inv = Monomial::gen(GenId::y(1)) * Monomial::gen(P, -r) * Monomial::gen(Q, -a) *
                  Monomial::gen(GenId::y(0), -b0);
        else if (ce.corner == GenId::y(l))
            inv = Monomial::gen(GenId::x(k - 1)) * Monomial::gen(P, -1) *
                  Monomial::gen(GenId::x(k), -ak);
        else
            inv = Monomial::gen(GenId::y(l - 1)) * Monomial::gen(Q, -1) *
                  Monomial::gen(GenId::y(l), -bl);
        Monomial repl = replace(ce.laurent_rhs, ce.corner, inv);
        if (repl.nonnegative()) ce.polynomial_rhs = repl;
    }
    return out;
}

}  // namespace

std::array<CornerEquation, 4> corner_equations(const LongRectangle& rect) {
    if (rect.big_end == BigEnd::bottom) return corners_ab_oriented(rect);
    // Compute on the flipped rectangle and translate indices back.
    const LongRectangle rev = reversed(rect);
    std::array<CornerEquation, 4> rc = corners_ab_oriented(rev);
    int k = rect.k(), l = rect.l();
    auto back = [&](GenId g) {
        if (g.kind == GenId::Kind::X) return GenId::x(k - g.index);
        if (g.kind == GenId::Kind::Y) return GenId::y(l - g.index);
        return g;
    };
    auto back_mon = [&](const Monomial& m) {
        Monomial out;
        for (const auto& [g, e] : m.exponents()) out *= Monomial::gen(back(g), e);
        return out;
    };
    std::array<CornerEquation, 4> out;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        CornerEquation ce = rc[idx];
        ce.corner = back(ce.corner);
        ce.lhs1 = back(ce.lhs1);
        ce.lhs2 = back(ce.lhs2);
        ce.laurent_rhs = back_mon(ce.laurent_rhs);
        if (ce.polynomial_rhs) ce.polynomial_rhs = back_mon(*ce.polynomial_rhs);
        out[idx] = ce;
    }
    // Reversal exchanged the ends; restore the [x_0, y_0, x_k, y_l] order.
    std::swap(out[0], out[2]);
    std::swap(out[1], out[3]);
    return out;
}

ConeFacets cone_facets(const MatrixPair& pair) {
    VerifyOutcome v = verify_rules(pair);
    if (!v.ok) throw DomainError("cone_facets: " + v.violation);
    const Int &r = pair.r(), &a = pair.a(), &b = pair.b(), &s = pair.s();
    ConeFacets out;
    out.normals = {{{0, 0, 0, 1},
                    {0, 0, 1, 0},
                    {0, 1, 1, 0},
                    {r * b, r * s, 1, 0},
                    {r * s, a * s, 0, 1},
                    {1, 0, 0, 1}}};
    // Generators of the cone in the (xi, eta, A, B) basis.
    const std::array<std::array<Int, 4>, 6> gens = {{{1, 0, 0, 0},
                                                     {0, 1, 0, 0},
                                                     {0, 0, 1, 0},
                                                     {0, 0, 0, 1},
                                                     {a, -r, r, 0},
                                                     {-s, b, 0, s}}};
    out.gorenstein = true;
    for (const auto& n : out.normals) {
        if (n[2] + n[3] != 1) out.gorenstein = false;
        for (const auto& g : gens) {
            Int val = n[0] * g[0] + n[1] * g[1] + n[2] * g[2] + n[3] * g[3];
            if (val < 0) throw InvariantError("facet normal negative on a cone generator");
        }
    }
    return out;
}

std::vector<TentEquation> tent_equations(const LongRectangle& rect_ab) {
    int k = rect_ab.k(), l = rect_ab.l();
    std::vector<TentEquation> out;
    for (int i = 1; i + 1 <= k; ++i)
        out.push_back({GenId::x(i - 1), GenId::x(i + 1),
                       Monomial::gen(GenId::x(i), rect_ab.x_tags[i]), false});
    for (int j = 1; j + 1 <= l; ++j)
        out.push_back({GenId::y(j - 1), GenId::y(j + 1),
                       Monomial::gen(GenId::y(j), rect_ab.y_tags[j]), false});
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
            if ((i == 0 && j == 0) || (i == k && j == l)) continue;
            out.push_back({GenId::x(i), GenId::y(j), Monomial::unit(), true});
        }
    return out;
}

MatrixPair diptych_pair(const DiptychParams& params) {
    if (params.variant != Variant::first)
        throw DomainError("panel construction uses the first factorisation; other variants "
                          "relabel the same diptych");
    // The (10a) normal form puts d at the bottom of the alternation; reading
    // the tags from the top of the x side costs a swap for even k.
    bool odd = params.k % 2 == 1;
    return build_pair(odd ? params.d : params.e, odd ? params.e : params.d, params.k,
                      Variant::first);
}

PolytopeIncidence pretty_polytope_incidence(int k, int l) {
    std::string x0 = "x_0", y0 = "y_0";
    std::string xk = "x_" + std::to_string(k), yl = "y_" + std::to_string(l);
    PolytopeIncidence p;
    p.vertices = {"A", "B", "L", "M", x0, y0, xk, yl};
    // Simplex ABLM with x_0 pulled out on plane ABL, y_0 on ABM, x_k on LMA,
    // y_l on LMB, and crosspieces x_0y_0 on the edge AB, x_ky_l on LM.
    p.faces = {{"A", x0, "L"}, {"B", x0, "L"}, {"A", y0, "M"}, {"B", y0, "M"},
               {"L", xk, "A"}, {"M", xk, "A"}, {"L", yl, "B"}, {"M", yl, "B"},
               {"A", x0, y0},  {"B", x0, y0},  {"L", xk, yl},  {"M", xk, yl}};
    return p;
}

DiptychPanels make_panels(const DiptychParams& params) {
    DiptychPanels panels{params, diptych_pair(params), {}, {}};
    panels.ab = rectangle_AB(panels.pair);
    panels.lm = rectangle_LM(panels.pair);
    // The defining property of the indexing: top x tags read d, e downward.
    if (panels.ab.k() != params.k) throw InvariantError("panel k mismatch");
    if (params.k >= 1 && panels.ab.x_tags[params.k] != params.d && params.d * params.e > 0)
        throw InvariantError("top x tag is not d");
    return panels;
}

}  // namespace diptych
