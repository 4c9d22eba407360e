#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diptych/io.hpp"

namespace py = pybind11;
using namespace diptych;

namespace {

Tags to_tags(const std::vector<long long>& v) {
    Tags t;
    t.reserve(v.size());
    for (long long c : v) t.emplace_back(static_cast<long>(c));
    return t;
}

DiptychParams params_of(long long d, long long e, int k, const std::string& variant) {
    return make_params(Int(static_cast<long>(d)), Int(static_cast<long>(e)), k,
                       variant_from_name(variant));
}

std::string classify_json(long long d, long long e, int k, const std::string& variant) {
    DiptychParams params = params_of(d, e, k, variant);
    MatrixPair pair = build_pair(params);
    return json{{"params", to_json(params)},
                {"pair", to_json(pair)},
                {"classification", to_json(classify_descent(pair))},
                {"main_case", params.main_case()},
                {"excluded_case", params.excluded_case()}}
        .dump();
}

std::string enumerate_json(long long bound) {
    json j = json::array();
    for (const EnumeratedPair& ep : enumerate_pairs(Int(static_cast<long>(bound))))
        j.push_back({{"pair", to_json(ep.pair)}, {"classification", to_json(ep.cls)}});
    return j.dump();
}

std::string rectangles_json(long long d, long long e, int k) {
    DiptychPanels panels = make_panels(params_of(d, e, k, "first"));
    return json{{"pair", to_json(panels.pair)},
                {"ab", to_json(panels.ab)},
                {"lm", to_json(panels.lm)},
                {"ab_zero_word", tags_to_string(zero_word(panels.ab))},
                {"lm_zero_word", tags_to_string(zero_word(panels.lm))}}
        .dump();
}

std::string weights_json(long long d, long long e, int k) {
    return to_json(weight_table(params_of(d, e, k, "first"))).dump();
}

std::string schedule_json(long long d, long long e, int k) {
    return to_json(schedule(params_of(d, e, k, "first"))).dump();
}

std::string chain_json(long long d, long long e, int k, const std::string& direction) {
    ChainDirection dir =
        direction == "down" ? ChainDirection::top_down : ChainDirection::bottom_up;
    return to_json(serial_chain(params_of(d, e, k, "first"), dir)).dump();
}

std::vector<std::string> chain_equations(long long d, long long e, int k) {
    EquationStore store = serial_chain(params_of(d, e, k, "first"));
    std::vector<std::string> out;
    for (const auto& [key, eq] : store.equations) out.push_back(equation_string(eq));
    return out;
}

bool verify_diptych(long long d, long long e, int k) {
    DiptychParams params = params_of(d, e, k, "first");
    DiptychPanels panels = make_panels(params);
    if (!zero_check(panels.ab) || !zero_check(panels.lm)) return false;
    if (!cone_facets(panels.pair).gorenstein) return false;
    WeightTable table = weight_table(panels);
    if (!monotonicity_check(table)) return false;
    padded_cell(params);
    if (!params.main_case()) return true;
    EquationStore store = serial_chain(params);
    EquationStore down = serial_chain(params, ChainDirection::top_down);
    return homogeneity_check(store, table) && section_check(store, panels.ab, panels.lm) &&
           store.equations == down.equations;
}

std::string py_eval_cf(const std::vector<long long>& tags) {
    ExtRational v = eval_cf(to_tags(tags));
    return v.num.get_str() + "/" + v.den.get_str();
}

std::vector<std::string> py_expand_fraction(long long r, long long a) {
    std::vector<std::string> out;
    for (const Int& t : expand_fraction(Int(static_cast<long>(r)), Int(static_cast<long>(a))))
        out.push_back(t.get_str());
    return out;
}

py::tuple py_reduce_to_zero(const std::vector<long long>& tags) {
    ReduceResult r = reduce_to_zero(to_tags(tags));
    std::vector<std::string> trace;
    for (const Tags& t : r.trace) trace.push_back(tags_to_string(t));
    return py::make_tuple(r.is_zero, trace);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic core for diptych varieties";

    static py::exception<OutOfScopeError> exc_scope(m, "OutOfScopeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const OutOfScopeError& e) {
            exc_scope(e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("classify_json", &classify_json, py::arg("d"), py::arg("e"), py::arg("k"),
          py::arg("variant") = "first",
          "partner pair, classification and case flags as a JSON string");
    m.def("enumerate_json", &enumerate_json, py::arg("bound"),
          "all rule-satisfying pairs with entries <= bound, classified");
    m.def("rectangles_json", &rectangles_json, py::arg("d"), py::arg("e"), py::arg("k"),
          "both long rectangles with tags and zero words");
    m.def("weights_json", &weights_json, py::arg("d"), py::arg("e"), py::arg("k"),
          "torus weights of every generator, exact rationals as strings");
    m.def("schedule_json", &schedule_json, py::arg("d"), py::arg("e"), py::arg("k"),
          "the unprojection schedule: s_nu, bars, tags, annotations, h");
    m.def("chain_json", &chain_json, py::arg("d"), py::arg("e"), py::arg("k"),
          py::arg("direction") = "up", "equation store and pentagram log");
    m.def("chain_equations", &chain_equations, py::arg("d"), py::arg("e"), py::arg("k"),
          "the trinomial equations in display form");
    m.def("verify_diptych", &verify_diptych, py::arg("d"), py::arg("e"), py::arg("k"),
          "run every check for one parameter tuple");
    m.def("eval_cf", &py_eval_cf, py::arg("tags"),
          "value of a tag word as 'p/q' (q = 0 encodes infinity)");
    m.def("expand_fraction", &py_expand_fraction, py::arg("r"), py::arg("a"),
          "round-up expansion of r/a, entries as strings");
    m.def("reduce_to_zero", &py_reduce_to_zero, py::arg("tags"),
          "(is_zero, trace) of serial blowdown");
}
