#include <doctest.h>

#include "diptych/io.hpp"

using namespace diptych;

TEST_CASE("json round trips") {
    DiptychParams params = make_params(2, 4, 3);
    DiptychPanels panels = make_panels(params);

    SUBCASE("params") {
        json j = to_json(params);
        DiptychParams back = params_from_json(j);
        CHECK(back.d == params.d);
        CHECK(back.e == params.e);
        CHECK(back.k == params.k);
        CHECK(back.variant == params.variant);
    }
    SUBCASE("rectangle") {
        for (const LongRectangle* r : {&panels.ab, &panels.lm})
            CHECK(rectangle_from_json(to_json(*r)) == *r);
    }
    SUBCASE("weights") {
        WeightTable t = weight_table(panels);
        WeightTable back = weight_table_from_json(to_json(t));
        CHECK(back.weights == t.weights);
        CHECK(back.abcd == t.abcd);
        CHECK(back.denom_L == t.denom_L);
        CHECK(back.denom_M == t.denom_M);
    }
    SUBCASE("spreadsheet") {
        Spreadsheet s = schedule(params);
        Spreadsheet back = spreadsheet_from_json(to_json(s));
        REQUIRE(back.steps.size() == s.steps.size());
        for (std::size_t nu = 0; nu < s.steps.size(); ++nu) {
            CHECK(back.steps[nu].s == s.steps[nu].s);
            CHECK(back.steps[nu].bar_i == s.steps[nu].bar_i);
            CHECK(back.steps[nu].h == s.steps[nu].h);
        }
        CHECK(back.intervals == s.intervals);
    }
    SUBCASE("store") {
        EquationStore store = serial_chain(params);
        EquationStore back = store_from_json(to_json(store));
        CHECK(back.equations == store.equations);
        REQUIRE(back.log.size() == store.log.size());
        for (std::size_t n = 0; n < store.log.size(); ++n) {
            CHECK(back.log[n].s == store.log[n].s);
            CHECK(back.log[n].result.matrix == store.log[n].result.matrix);
            CHECK(back.log[n].result.outputs == store.log[n].result.outputs);
        }
    }
    SUBCASE("emitted json is deterministic") {
        EquationStore store = serial_chain(params);
        CHECK(to_json(store).dump() == to_json(serial_chain(params)).dump());
    }
}

TEST_CASE("equation strings use the documented normalisation") {
    EquationStore store = serial_chain(make_params(2, 4, 3));
    CHECK(equation_string(store.at(GenId::x(1), GenId::x(3))) == "x_1x_3 = x_2^4 + BLM^4");
    CHECK(equation_string(store.at(GenId::x(1), GenId::y(0))) == "x_1y_0 = A^4B^7 + Lx_0^4");
}

TEST_CASE("rectangle rendering shows tags and letters") {
    DiptychPanels panels = make_panels(make_params(2, 4, 3));
    std::string art = render_rectangle(panels.ab);
    CHECK(art.find("A 2") != std::string::npos);
    CHECK(art.find("1 B") != std::string::npos);
    CHECK(art.find("(0)") != std::string::npos);
    CHECK(art.find("(-1)") != std::string::npos);
    std::string lm = render_rectangle(panels.lm);
    CHECK(lm.find("L 4") != std::string::npos);
    CHECK(lm.find("(-3)") != std::string::npos);
}

TEST_CASE("pentagram rendering carries the ij.kl labels") {
    EquationStore store = serial_chain(make_params(2, 4, 3), ChainDirection::top_down);
    std::string text = render_pentagram(store.log[0]);
    CHECK(text.find("23.45  x_2y_4 = Ax_3^2 + L^2M^7") != std::string::npos);
    CHECK(text.find("13.45  x_1x_3 = x_2^4 + BLM^4") != std::string::npos);
    CHECK(text.find("LM^3") != std::string::npos);
}

TEST_CASE("csv exports") {
    WeightTable t = weight_table(make_params(4, 6, 6));
    std::string sc = scissors_csv(t);
    CHECK(sc.find("generator,L_units,M_units\n") == 0);
    CHECK(sc.find("x_0,-1,0") != std::string::npos);
    CHECK(sc.find("y_1,1,5") != std::string::npos);
    CHECK(sc.find("y_4,7,40") != std::string::npos);
    std::string wc = weights_csv(t);
    CHECK(wc.find("x_0,-1/4,0,505/4,483") != std::string::npos);
    CHECK(wc.find("y_8,21/2,241/6,21/2,241/6") != std::string::npos);
}
