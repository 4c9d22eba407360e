#include <doctest.h>

#include "diptych/rectangle.hpp"

using namespace diptych;

namespace {

std::vector<Int> tags_of(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Monomial mono(std::initializer_list<std::pair<const char*, long>> factors) {
    Monomial m;
    for (const auto& [name, e] : factors) m.set_exponent(GenId::parse(name), e);
    return m;
}

}  // namespace

TEST_CASE("AB rectangle of the worked pair matches the figure") {
    MatrixPair p = build_pair(2, 4, 3);
    LongRectangle ab = rectangle_AB(p);
    CHECK(ab.x_tags == tags_of({0, 2, 4, 2}));
    CHECK(ab.y_tags == tags_of({-1, 2, 2, 3, 1}));
    CHECK(ab.k() == 3);
    CHECK(ab.l() == 4);
    CHECK(ab.big_end == BigEnd::bottom);
}

TEST_CASE("LM rectangle of the worked pair matches the figure") {
    MatrixPair p = build_pair(2, 4, 3);
    LongRectangle lm = rectangle_LM(p);
    CHECK(lm.x_tags == tags_of({4, 2, 4, 0}));
    CHECK(lm.y_tags == tags_of({1, 2, 2, 3, -3}));
    CHECK(lm.big_end == BigEnd::top);
}

TEST_CASE("the (7,24;2,7) matrix as an AB matrix gives the remarked tags") {
    MatrixPair p{{7, 24, 2, 7}, {7, 12, 4, 7}};
    LongRectangle ab = rectangle_AB(p);
    CHECK(ab.x_tags == tags_of({0, 4, 2, 4}));
    CHECK(ab.y_tags == tags_of({-3, 3, 2, 2, 1}));
}

TEST_CASE("k = 1 rectangles have bare sides") {
    MatrixPair p = build_pair(5, 3, 1);
    LongRectangle ab = rectangle_AB(p);
    CHECK(ab.x_tags == tags_of({0, 5}));
    CHECK(ab.y_tags == tags_of({-5, 0}));
    LongRectangle lm = rectangle_LM(p);
    CHECK(lm.x_tags == tags_of({3, 0}));
    CHECK(lm.y_tags == tags_of({0, -3}));
}

TEST_CASE("initial cases: r or s = 1 tag fixtures") {
    // Identity pair: all four corner tags vanish.
    MatrixPair id{{1, 0, 0, 1}, {1, 0, 0, 1}};
    CHECK(rectangle_AB(id).x_tags == tags_of({0, 0}));
    CHECK(rectangle_AB(id).y_tags == tags_of({0, 0}));
    // Triangular rows (1,0;b,1) and (1,a;0,1).
    MatrixPair lower{{1, 0, 5, 1}, {1, 0, 5, 1}};
    CHECK(rectangle_AB(lower).x_tags == tags_of({-5, 0}));
    CHECK(rectangle_AB(lower).y_tags == tags_of({0, 5}));
    MatrixPair upper{{1, 7, 0, 1}, {1, 7, 0, 1}};
    CHECK(rectangle_AB(upper).x_tags == tags_of({0, 7}));
    CHECK(rectangle_AB(upper).y_tags == tags_of({-7, 0}));
    // (1,1;s-1,s): bare x side against a one-step y side.
    MatrixPair row4{{1, 1, 4, 5}, {1, 1, 4, 5}};
    LongRectangle r4 = rectangle_AB(row4);
    CHECK(r4.x_tags == tags_of({-4, 1}));
    CHECK(r4.y_tags == tags_of({0, 5, 1}));
    CHECK(zero_check(r4));
    // (r,1;r-1,1): the mirror, with the 2^{r-1} run up the x side.
    MatrixPair row5{{5, 1, 4, 1}, {5, 1, 4, 1}};
    LongRectangle r5 = rectangle_AB(row5);
    CHECK(r5.x_tags == tags_of({0, 2, 2, 2, 2, 1}));
    CHECK(r5.y_tags == tags_of({-1, 4}));
    CHECK(zero_check(r5));
    // First regular k = 1 family (r, rs-1; 1, s): tags 2^{s-1} down the y side.
    MatrixPair k1{{3, 11, 1, 4}, {3, 11, 1, 4}};
    REQUIRE(verify_rules(k1).ok);
    LongRectangle rk = rectangle_AB(k1);
    CHECK(rk.x_tags == tags_of({0, 3, 4}));
    CHECK(rk.y_tags == tags_of({-2, 2, 2, 2, 1}));
    CHECK(zero_check(rk));
}

TEST_CASE("attitude") {
    MatrixPair p = build_pair(2, 4, 3);
    Attitude a = attitude(rectangle_AB(p));
    CHECK_FALSE(a.initial);
    CHECK(a.top == TopAttitude::ak_ge2_bl_eq1);
    CHECK(a.bottom == BottomAttitude::a0_zero_b0_neg);
    Attitude b = attitude(rectangle_LM(p));
    CHECK(b.top == TopAttitude::ak_ge2_bl_eq1);
    CHECK(b.bottom == BottomAttitude::a0_zero_b0_neg);
    CHECK(attitude(rectangle_AB(build_pair(5, 3, 1))).initial);
}

TEST_CASE("zero words reduce to zero") {
    MatrixPair p = build_pair(2, 4, 3);
    LongRectangle ab = rectangle_AB(p), lm = rectangle_LM(p);
    CHECK(zero_word(ab) == tags_of({4, 2, 1, 3, 2, 2}));
    CHECK(zero_word(lm) == tags_of({3, 2, 2, 1, 4, 2}));
    CHECK(zero_check(ab));
    CHECK(zero_check(lm));
    // Mutating one interior tag breaks it.
    LongRectangle bad = ab;
    bad.x_tags[2] += 1;
    CHECK_FALSE(zero_check(bad));
}

TEST_CASE("zero words across a sweep of pairs") {
    for (int d = 1; d <= 5; ++d)
        for (int e = 1; e <= 5; ++e)
            for (int k = 1; k <= 5; ++k) {
                auto bound = table21_max_k(Int(d) * Int(e));
                if (bound && k > *bound) continue;
                MatrixPair p = build_pair(d, e, k);
                CHECK(zero_check(rectangle_AB(p)));
                CHECK(zero_check(rectangle_LM(p)));
            }
}

TEST_CASE("Laurent generators of the AB panel") {
    MatrixPair p = build_pair(2, 4, 3);
    auto gens = generators_laurent(rectangle_AB(p));
    CHECK(gens.at(GenId::x(0)) == mono({{"x_3", 12}, {"A", 7}, {"y_4", -7}}));
    CHECK(gens.at(GenId::x(1)) == mono({{"x_3", 7}, {"A", 4}, {"y_4", -4}}));
    CHECK(gens.at(GenId::x(2)) == mono({{"x_3", 2}, {"A", 1}, {"y_4", -1}}));
    CHECK(gens.at(GenId::y(0)) == mono({{"y_4", 4}, {"B", 7}, {"x_3", -7}}));
    CHECK(gens.at(GenId::y(3)) == mono({{"y_4", 1}, {"B", 1}, {"x_3", -1}}));
    CHECK(gens.at(GenId::x(3)) == mono({{"x_3", 1}}));
}

TEST_CASE("Laurent generators of the LM panel") {
    MatrixPair p = build_pair(2, 4, 3);
    auto gens = generators_laurent(rectangle_LM(p));
    CHECK(gens.at(GenId::x(3)) == mono({{"x_0", 24}, {"L", 7}, {"y_0", -7}}));
    CHECK(gens.at(GenId::x(1)) == mono({{"x_0", 4}, {"L", 1}, {"y_0", -1}}));
    CHECK(gens.at(GenId::y(4)) == mono({{"y_0", 2}, {"M", 7}, {"x_0", -7}}));
    CHECK(gens.at(GenId::y(1)) == mono({{"y_0", 1}, {"M", 1}, {"x_0", -1}}));
}

TEST_CASE("laurent expressions satisfy the side tag equations") {
    for (auto [d, e, k] : std::vector<std::array<int, 3>>{{2, 4, 3}, {3, 3, 4}, {4, 6, 6}}) {
        DiptychPanels panels = make_panels(make_params(d, e, k));
        for (const LongRectangle* rect : {&panels.ab, &panels.lm}) {
            auto gens = generators_laurent(*rect);
            for (int i = 1; i + 1 <= rect->k(); ++i) {
                Monomial lhs = gens.at(GenId::x(i - 1)) * gens.at(GenId::x(i + 1));
                Monomial rhs;
                for (const auto& [g, ex] : gens.at(GenId::x(i)).exponents())
                    rhs *= Monomial::gen(g, ex * rect->x_tags[i]);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("toric relations") {
    MatrixPair p = build_pair(2, 4, 3);
    LongRectangle ab = rectangle_AB(p), lm = rectangle_LM(p);
    CHECK(toric_relation(ab, GenId::x(1), GenId::y(0)) == mono({{"A", 4}, {"B", 7}}));
    CHECK(toric_relation(ab, GenId::x(3), GenId::x(3)) == mono({{"x_3", 2}}));
    CHECK(toric_relation(lm, GenId::x(2), GenId::y(4)) == mono({{"L", 2}, {"M", 7}}));
}

TEST_CASE("corner equations, including anomalous replacements") {
    MatrixPair p = build_pair(2, 4, 3);
    auto ab = corner_equations(rectangle_AB(p));
    // x_1 y_0 = A^4 B^7 (corner tag 0)
    CHECK(ab[0].corner == GenId::x(0));
    CHECK(ab[0].tag == 0);
    CHECK_FALSE(ab[0].anomalous);
    CHECK(ab[0].laurent_rhs == mono({{"A", 4}, {"B", 7}}));
    // x_0 y_1 = y_0^{-1} A^7 B^12, replaced by x_1 A^3 B^5
    CHECK(ab[1].corner == GenId::y(0));
    CHECK(ab[1].tag == -1);
    CHECK(ab[1].anomalous);
    CHECK(ab[1].laurent_rhs == mono({{"A", 7}, {"B", 12}, {"y_0", -1}}));
    REQUIRE(ab[1].polynomial_rhs.has_value());
    CHECK(*ab[1].polynomial_rhs == mono({{"A", 3}, {"B", 5}, {"x_1", 1}}));
    // Top corners: x_2 y_4 = x_3^2 A and x_3 y_3 = y_4 B.
    CHECK(ab[2].laurent_rhs == mono({{"A", 1}, {"x_3", 2}}));
    CHECK(ab[3].laurent_rhs == mono({{"B", 1}, {"y_4", 1}}));

    auto lm = corner_equations(rectangle_LM(p));
    // Bottom: x_1 y_0 = x_0^4 L and x_0 y_1 = y_0 M.
    CHECK(lm[0].laurent_rhs == mono({{"L", 1}, {"x_0", 4}}));
    CHECK(lm[1].laurent_rhs == mono({{"M", 1}, {"y_0", 1}}));
    // Top: x_2 y_4 = L^2 M^7 and the anomalous x_3 y_3 = y_4^{-3} L^7 M^24,
    // replaced by x_2^3 L M^3.
    CHECK(lm[2].laurent_rhs == mono({{"L", 2}, {"M", 7}}));
    CHECK(lm[3].anomalous);
    CHECK(lm[3].laurent_rhs == mono({{"L", 7}, {"M", 24}, {"y_4", -3}}));
    REQUIRE(lm[3].polynomial_rhs.has_value());
    CHECK(*lm[3].polynomial_rhs == mono({{"L", 1}, {"M", 3}, {"x_2", 3}}));
}

TEST_CASE("corner equations agree with the laurent parametrisation") {
    for (auto [d, e, k] : std::vector<std::array<int, 3>>{{2, 4, 3}, {2, 3, 4}, {5, 2, 2}}) {
        DiptychPanels panels = make_panels(make_params(d, e, k));
        for (const LongRectangle* rect : {&panels.ab, &panels.lm}) {
            auto gens = generators_laurent(*rect);
            for (const CornerEquation& ce : corner_equations(*rect)) {
                Monomial lhs = gens.at(ce.lhs1) * gens.at(ce.lhs2);
                auto image = [&gens](const Monomial& m) {
                    Monomial out;
                    for (const auto& [g, ex] : m.exponents())
                        for (const auto& [bg, be] : gens.at(g).exponents())
                            out *= Monomial::gen(bg, be * ex);
                    return out;
                };
                CHECK(lhs == image(ce.laurent_rhs));
                if (ce.polynomial_rhs) CHECK(lhs == image(*ce.polynomial_rhs));
            }
        }
    }
}

TEST_CASE("cone facets and the Gorenstein pairing") {
    MatrixPair p = build_pair(2, 4, 3);
    ConeFacets f = cone_facets(p);
    CHECK(f.gorenstein);
    CHECK(f.normals[3] == std::array<Int, 4>{28, 49, 1, 0});
    CHECK(f.normals[4] == std::array<Int, 4>{49, 84, 0, 1});
    for (const auto& n : f.normals) CHECK(n[2] + n[3] == 1);
    // Degenerate pair still passes.
    CHECK(cone_facets(build_pair(1, 1, 1)).gorenstein);
}

TEST_CASE("tent equations") {
    MatrixPair p = build_pair(2, 4, 3);
    LongRectangle ab = rectangle_AB(p);
    auto eqs = tent_equations(ab);
    int k = ab.k(), l = ab.l();
    CHECK(eqs.size() == std::size_t((k - 1) + (l - 1) + ((k + 1) * (l + 1) - 2)));
    // y_0 y_2 = y_1^2 appears, and x_1 y_1 = 0 is a cross equation.
    bool tag_eq = false, cross_eq = false;
    for (const TentEquation& te : eqs) {
        if (te.lhs1 == GenId::y(0) && te.lhs2 == GenId::y(2) && !te.cross &&
            te.rhs == mono({{"y_1", 2}}))
            tag_eq = true;
        if (te.lhs1 == GenId::x(1) && te.lhs2 == GenId::y(1) && te.cross) cross_eq = true;
    }
    CHECK(tag_eq);
    CHECK(cross_eq);
}

TEST_CASE("diptych indexing reads d,e from the top of the x side") {
    DiptychPanels p1 = make_panels(make_params(2, 4, 3));
    CHECK(p1.pair.ab == Mat2{7, 12, 4, 7});
    DiptychPanels p2 = make_panels(make_params(4, 6, 6));
    CHECK(p2.ab.x_tags.back() == 4);
    CHECK(p2.ab.x_tags[p2.ab.k() - 1] == 6);
    CHECK(p2.ab.l() == 16);
    // Interior y tags of the (4,6,6) table.
    CHECK(p2.ab.y_tags == tags_of({-5, 2, 2, 3, 2, 2, 2, 3, 2, 3, 2, 2, 2, 3, 2, 2, 1}));
}
