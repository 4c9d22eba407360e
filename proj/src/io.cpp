#include "diptych/io.hpp"

#include <algorithm>
#include <sstream>

namespace diptych {

namespace {

json rat_json(const Rat& r) { return to_string(r); }
json int_json(const Int& v) { return v.get_str(); }
Int int_from(const json& j) { return Int(j.get<std::string>()); }

}  // namespace

json to_json(const Monomial& m) {
    json j = json::array();
    for (const auto& [g, e] : m.exponents()) j.push_back({g.name(), e.get_str()});
    return j;
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (const auto& entry : j)
        m.set_exponent(GenId::parse(entry[0].get<std::string>()),
                       Int(entry[1].get<std::string>()));
    return m;
}

json to_json(const DiptychParams& p) {
    return {{"d", int_json(p.d)},
            {"e", int_json(p.e)},
            {"k", p.k},
            {"variant", variant_name(p.variant)}};
}

DiptychParams params_from_json(const json& j) {
    return make_params(int_from(j.at("d")), int_from(j.at("e")), j.at("k").get<int>(),
                       variant_from_name(j.at("variant").get<std::string>()));
}

json to_json(const MatrixPair& p) {
    return {{"r", int_json(p.r())}, {"a", int_json(p.a())}, {"b", int_json(p.b())},
            {"s", int_json(p.s())}, {"g", int_json(p.g())}, {"h", int_json(p.h())}};
}

json to_json(const Classification& c) {
    if (c.exceptional) return {{"exceptional", true}, {"branch", c.exceptional_branch}};
    return {{"exceptional", false},
            {"d", int_json(c.d)},
            {"e", int_json(c.e)},
            {"k", c.k},
            {"variant", variant_name(c.variant)}};
}

json to_json(const LongRectangle& r) {
    json xt = json::array(), yt = json::array();
    for (const Int& t : r.x_tags) xt.push_back(t.get_str());
    for (const Int& t : r.y_tags) yt.push_back(t.get_str());
    return {{"panel", r.panel == Panel::AB ? "AB" : "LM"},
            {"big_end", r.big_end == BigEnd::bottom ? "bottom" : "top"},
            {"x_tags", xt},
            {"y_tags", yt},
            {"matrix",
             {{"m11", int_json(r.matrix.m11)},
              {"m12", int_json(r.matrix.m12)},
              {"m21", int_json(r.matrix.m21)},
              {"m22", int_json(r.matrix.m22)}}}};
}

LongRectangle rectangle_from_json(const json& j) {
    LongRectangle r;
    r.panel = j.at("panel").get<std::string>() == "AB" ? Panel::AB : Panel::LM;
    r.big_end = j.at("big_end").get<std::string>() == "bottom" ? BigEnd::bottom : BigEnd::top;
    for (const auto& t : j.at("x_tags")) r.x_tags.push_back(Int(t.get<std::string>()));
    for (const auto& t : j.at("y_tags")) r.y_tags.push_back(Int(t.get<std::string>()));
    const json& m = j.at("matrix");
    r.matrix = {int_from(m.at("m11")), int_from(m.at("m12")), int_from(m.at("m21")),
                int_from(m.at("m22"))};
    return r;
}

json to_json(const CornerEquation& c) {
    json j = {{"corner", c.corner.name()},
              {"lhs", {c.lhs1.name(), c.lhs2.name()}},
              {"tag", int_json(c.tag)},
              {"laurent_rhs", to_json(c.laurent_rhs)},
              {"anomalous", c.anomalous}};
    if (c.polynomial_rhs) j["polynomial_rhs"] = to_json(*c.polynomial_rhs);
    return j;
}

json to_json(const ConeFacets& f) {
    json normals = json::array();
    for (const auto& n : f.normals) {
        json row = json::array();
        for (const Int& v : n) row.push_back(v.get_str());
        normals.push_back(row);
    }
    return {{"normals", normals}, {"gorenstein", f.gorenstein}};
}

json to_json(const WeightTable& t) {
    json rows = json::array();
    for (const auto& [g, w] : t.weights) {
        json ws = json::array();
        for (int c = 0; c < 4; ++c) ws.push_back(rat_json(w[c]));
        rows.push_back({{"gen", g.name()}, {"w", ws}});
    }
    json abcd = json::array();
    for (const Rat& v : t.abcd) abcd.push_back(rat_json(v));
    return {{"params", to_json(t.params)},
            {"denom_L", int_json(t.denom_L)},
            {"denom_M", int_json(t.denom_M)},
            {"abcd", abcd},
            {"weights", rows}};
}

WeightTable weight_table_from_json(const json& j) {
    WeightTable t;
    t.params = params_from_json(j.at("params"));
    t.denom_L = int_from(j.at("denom_L"));
    t.denom_M = int_from(j.at("denom_M"));
    for (int c = 0; c < 4; ++c) t.abcd[c] = rat_from_string(j.at("abcd")[c].get<std::string>());
    for (const auto& row : j.at("weights")) {
        TorusWeight w;
        for (int c = 0; c < 4; ++c) w[c] = rat_from_string(row.at("w")[c].get<std::string>());
        t.weights[GenId::parse(row.at("gen").get<std::string>())] = w;
    }
    return t;
}

json to_json(const PaddedCell& c) {
    json rows = json::array();
    for (const auto& [g, cl] : c.classes)
        rows.push_back({{"gen", g.name()},
                        {"residue_d", cl.residue_d.get_str()},
                        {"residue_e", cl.residue_e.get_str()}});
    return {{"modulus_d", int_json(c.modulus_d)},
            {"modulus_e", int_json(c.modulus_e)},
            {"classes", rows}};
}

json to_json(const ProjectionStep& s) {
    return {{"nu", s.nu},
            {"s", s.s.name()},
            {"bar", {s.bar_i, s.bar_j}},
            {"alpha", int_json(s.alpha)},
            {"beta", int_json(s.beta)},
            {"A_ann", to_json(s.a_ann)},
            {"B_ann", to_json(s.b_ann)},
            {"h", to_json(s.h)}};
}

json to_json(const Spreadsheet& s) {
    json steps = json::array();
    for (const ProjectionStep& st : s.steps) steps.push_back(to_json(st));
    json ivals = json::array();
    for (const auto& [i, range] : s.intervals)
        ivals.push_back({{"i", i}, {"first", range.first}, {"last", range.second}});
    return {{"params", to_json(s.params)}, {"steps", steps}, {"intervals", ivals}};
}

Spreadsheet spreadsheet_from_json(const json& j) {
    Spreadsheet s;
    s.params = params_from_json(j.at("params"));
    for (const auto& st : j.at("steps")) {
        ProjectionStep p;
        p.nu = st.at("nu").get<int>();
        p.s = GenId::parse(st.at("s").get<std::string>());
        p.bar_i = st.at("bar")[0].get<int>();
        p.bar_j = st.at("bar")[1].get<int>();
        p.alpha = int_from(st.at("alpha"));
        p.beta = int_from(st.at("beta"));
        p.a_ann = monomial_from_json(st.at("A_ann"));
        p.b_ann = monomial_from_json(st.at("B_ann"));
        p.h = monomial_from_json(st.at("h"));
        s.steps.push_back(std::move(p));
    }
    for (const auto& iv : j.at("intervals"))
        s.intervals[iv.at("i").get<int>()] = {iv.at("first").get<int>(),
                                              iv.at("last").get<int>()};
    return s;
}

json to_json(const SkewMatrix5& m) {
    json entries = json::array();
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            entries.push_back({{"i", i},
                               {"j", j},
                               {"sign", m.entry(i, j).sign},
                               {"m", to_json(m.entry(i, j).m)}});
    return entries;
}

json to_json(const Trinomial& t) {
    return {{"lhs", {t.u.name(), t.w.name()}},
            {"terms", {to_json(t.t1), to_json(t.t2)}}};
}

Trinomial trinomial_from_json(const json& j) {
    return Trinomial::make(GenId::parse(j.at("lhs")[0].get<std::string>()),
                           GenId::parse(j.at("lhs")[1].get<std::string>()),
                           monomial_from_json(j.at("terms")[0]),
                           monomial_from_json(j.at("terms")[1]));
}

json to_json(const EquationStore& s) {
    json eqs = json::array();
    for (const auto& [key, eq] : s.equations) eqs.push_back(to_json(eq));
    json log = json::array();
    for (const PentagramStep& st : s.log) {
        json outs = json::array();
        for (const Trinomial& t : st.result.outputs) outs.push_back(to_json(t));
        log.push_back({{"nu", st.nu},
                       {"s", st.s.name()},
                       {"inputs", {to_json(st.in1), to_json(st.in2)}},
                       {"g", to_json(st.result.g)},
                       {"matrix", to_json(st.result.matrix)},
                       {"outputs", outs}});
    }
    return {{"equations", eqs}, {"pentagrams", log}};
}

EquationStore store_from_json(const json& j) {
    EquationStore s;
    for (const auto& eq : j.at("equations")) s.insert(trinomial_from_json(eq));
    for (const auto& st : j.at("pentagrams")) {
        PentagramStep p;
        p.nu = st.at("nu").get<int>();
        p.s = GenId::parse(st.at("s").get<std::string>());
        p.in1 = trinomial_from_json(st.at("inputs")[0]);
        p.in2 = trinomial_from_json(st.at("inputs")[1]);
        p.result.g = monomial_from_json(st.at("g"));
        for (const auto& e : st.at("matrix"))
            p.result.matrix.entry(e.at("i").get<int>(), e.at("j").get<int>()) = {
                e.at("sign").get<int>(), monomial_from_json(e.at("m"))};
        for (std::size_t o = 0; o < 3; ++o)
            p.result.outputs[o] = trinomial_from_json(st.at("outputs")[o]);
        s.log.push_back(std::move(p));
    }
    return s;
}

json to_json(const MeetResult& m) {
    json gens = json::array();
    for (const GenId& g : m.gens) gens.push_back(g.name());
    return {{"shape", m.shape == MeetShape::cross ? "cross" : "pitchfork"},
            {"top_bar", {m.top_i, m.top_j}},
            {"bottom_bar", {m.bottom_i, m.bottom_j}},
            {"gens", gens}};
}

std::string equation_string(const Trinomial& t) {
    return t.u.name() + t.w.name() + " = " + t.t1.str() + " + " + t.t2.str();
}

namespace {

std::string tag_str(const Int& t) {
    return t <= 0 ? "(" + t.get_str() + ")" : t.get_str();
}

}  // namespace

std::string render_rectangle(const LongRectangle& r) {
    int k = r.k(), l = r.l();
    std::vector<std::string> left, right;
    for (int i = k; i >= 0; --i) left.push_back(tag_str(r.x_tags[i]));
    for (int j = l; j >= 0; --j) right.push_back(tag_str(r.y_tags[j]));
    // Letters decorate the little end.
    if (r.big_end == BigEnd::bottom) {
        left.front() = r.left_letter().name() + " " + left.front();
        right.front() += " " + r.right_letter().name();
    } else {
        left.back() = r.left_letter().name() + " " + left.back();
        right.back() += " " + r.right_letter().name();
    }
    // Pad the shorter side just above its bottom corner.
    std::size_t rows = std::max(left.size(), right.size());
    auto pad = [rows](std::vector<std::string>& col) {
        while (col.size() < rows) col.insert(col.end() - 1, "");
    };
    pad(left);
    pad(right);
    std::size_t width = 0;
    for (const std::string& s : left) width = std::max(width, s.size());
    std::ostringstream os;
    for (std::size_t t = 0; t < rows; ++t) {
        os << std::string(width - left[t].size(), ' ') << left[t] << " | " << right[t] << '\n';
    }
    return os.str();
}

std::string render_matrix(const SkewMatrix5& m) {
    // Upper-triangular entries, one row of the skew matrix per line.
    std::array<std::array<std::string, 4>, 4> cells;
    std::array<std::size_t, 4> width{};
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            const SignedTerm& e = m.entry(i, j);
            std::string s = (e.sign < 0 ? "-" : "") + e.m.str();
            cells[i - 1][j - 2] = s;
            width[j - 2] = std::max(width[j - 2], s.size());
        }
    std::ostringstream os;
    for (int i = 1; i <= 4; ++i) {
        os << "( ";
        for (int j = 2; j <= 5; ++j) {
            std::string s = j > i ? cells[i - 1][j - 2] : "";
            os << s << std::string(width[j - 2] - s.size() + 2, ' ');
        }
        os << ")\n";
    }
    return os.str();
}

std::string render_pentagram(const PentagramStep& step) {
    std::ostringstream os;
    os << "adjoin " << step.s.name() << " (step " << step.nu << ", g = " << step.result.g.str()
       << ")\n";
    os << render_matrix(step.result.matrix);
    os << "  23.45  " << equation_string(step.in1) << '\n';
    os << "  12.34  " << equation_string(step.in2) << '\n';
    os << "  12.35  " << equation_string(step.result.outputs[0]) << '\n';
    os << "  13.45  " << equation_string(step.result.outputs[1]) << '\n';
    os << "  12.45  " << equation_string(step.result.outputs[2]) << '\n';
    return os.str();
}

std::string render_store(const EquationStore& store) {
    std::ostringstream os;
    for (const auto& [key, eq] : store.equations) os << equation_string(eq) << '\n';
    return os.str();
}

std::string render_weights(const WeightTable& table) {
    std::ostringstream os;
    os << "gen\tL\tM\tA\tB\n";
    auto row = [&os, &table](const GenId& g) {
        const TorusWeight& w = table.of(g);
        os << g.name();
        for (int c = 0; c < 4; ++c) os << '\t' << to_string(w[c]);
        os << '\n';
    };
    int k = 0, l = 0;
    for (const auto& [g, w] : table.weights) {
        if (g.kind == GenId::Kind::X) k = std::max(k, g.index);
        if (g.kind == GenId::Kind::Y) l = std::max(l, g.index);
    }
    for (int i = 0; i <= k; ++i) row(GenId::x(i));
    for (int j = 0; j <= l; ++j) row(GenId::y(j));
    return os.str();
}

std::string render_schedule(const Spreadsheet& sheet) {
    std::ostringstream os;
    os << "nu\ts\tbar\talpha\tbeta\tA_ann\tB_ann\th\n";
    for (const ProjectionStep& s : sheet.steps) {
        os << s.nu << '\t' << s.s.name() << "\t(x_" << s.bar_i << ",y_" << s.bar_j << ")\t"
           << s.alpha.get_str() << '\t' << s.beta.get_str() << '\t' << s.a_ann.str() << '\t'
           << s.b_ann.str() << '\t' << s.h.str() << '\n';
    }
    return os.str();
}

std::string render_deconstruction(const std::vector<RectangleSnapshot>& snaps) {
    std::ostringstream os;
    for (std::size_t n = 0; n < snaps.size(); ++n) {
        const RectangleSnapshot& sn = snaps[n];
        os << "state " << n << " (annotations " << sn.a_ann.str() << ", " << sn.b_ann.str()
           << ")\n";
        std::size_t rows = std::max(sn.x_tags.size(), sn.y_tags.size());
        for (std::size_t t = rows; t-- > 0;) {
            std::string lx = t < sn.x_tags.size() ? tag_str(sn.x_tags[t]) : "";
            std::string ry = t < sn.y_tags.size() ? tag_str(sn.y_tags[t]) : "";
            os << "  " << lx << std::string(8 - std::min<std::size_t>(8, lx.size()), ' ') << ry
               << '\n';
        }
    }
    return os.str();
}

std::string weights_csv(const WeightTable& table) {
    std::ostringstream os;
    os << "generator,L,M,A,B\n";
    int k = 0, l = 0;
    for (const auto& [g, w] : table.weights) {
        if (g.kind == GenId::Kind::X) k = std::max(k, g.index);
        if (g.kind == GenId::Kind::Y) l = std::max(l, g.index);
    }
    auto row = [&](const GenId& g) {
        const TorusWeight& w = table.of(g);
        os << g.name();
        for (int c = 0; c < 4; ++c) os << ',' << to_string(w[c]);
        os << '\n';
    };
    for (int i = 0; i <= k; ++i) row(GenId::x(i));
    for (int j = 0; j <= l; ++j) row(GenId::y(j));
    for (GenId g : {GenId::A(), GenId::B(), GenId::L(), GenId::M()}) row(g);
    return os.str();
}

std::string scissors_csv(const WeightTable& table) {
    std::ostringstream os;
    os << "generator,L_units,M_units\n";
    for (const ScissorsRow& r : scissors_export(table))
        os << r.gen.name() << ',' << r.l_units.get_str() << ',' << r.m_units.get_str() << '\n';
    return os.str();
}

}  // namespace diptych
