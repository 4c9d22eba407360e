#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "diptych/io.hpp"

using namespace diptych;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitOutOfScope = 3;
constexpr int kExitVerification = 4;

struct Options {
    long d = 0, e = 0;
    int k = 1;
    std::string variant = "first";
    std::string format = "text";
    std::string out_path;

    DiptychParams params() const {
        return make_params(d, e, k, variant_from_name(variant));
    }
};

void add_param_flags(CLI::App* cmd, Options& opt, bool with_variant = false) {
    cmd->add_option("--d", opt.d, "first index")->required();
    cmd->add_option("--e", opt.e, "second index")->required();
    cmd->add_option("--k", opt.k, "number of alternating steps")->required();
    if (with_variant)
        cmd->add_option("--variant", opt.variant,
                        "first | second | swapped-first | swapped-second");
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opt.out_path);
    if (!os) throw DomainError("cannot write " + opt.out_path);
    os << text;
}

std::string pair_text(const MatrixPair& p) {
    auto m = [](const Mat2& x) {
        return "(" + x.m11.get_str() + "," + x.m12.get_str() + ";" + x.m21.get_str() + "," +
               x.m22.get_str() + ")";
    };
    return m(p.ab) + " " + m(p.lm);
}

// Everything checkable for one diptych; returns a list of failed checks.
std::vector<std::string> verify_tuple(const DiptychParams& params) {
    std::vector<std::string> bad;
    DiptychPanels panels = make_panels(params);
    if (!zero_check(panels.ab)) bad.push_back("zero word (AB)");
    if (!zero_check(panels.lm)) bad.push_back("zero word (LM)");
    if (!cone_facets(panels.pair).gorenstein) bad.push_back("facet pairing");
    WeightTable table = weight_table(panels);
    if (!monotonicity_check(table)) bad.push_back("weight monotonicity");
    padded_cell(params);  // throws on a broken class relation
    if (params.main_case()) {
        Spreadsheet sheet = schedule(params);
        EquationStore store = serial_chain(params);
        if (store.equations.size() != 2 + 3 * sheet.steps.size())
            bad.push_back("equation count");
        if (!homogeneity_check(store, table)) bad.push_back("homogeneity");
        if (!section_check(store, panels.ab, panels.lm)) bad.push_back("sections");
        EquationStore down = serial_chain(params, ChainDirection::top_down);
        if (!(down.equations == store.equations)) bad.push_back("bottom symmetry");
    }
    return bad;
}

int run_classify(const Options& opt, bool enumerate, long bound) {
    if (enumerate) {
        auto found = enumerate_pairs(bound);
        if (opt.format == "json") {
            json j = json::array();
            for (const EnumeratedPair& ep : found)
                j.push_back({{"pair", to_json(ep.pair)}, {"classification", to_json(ep.cls)}});
            emit(opt, j.dump(2) + "\n");
        } else {
            std::string text;
            for (const EnumeratedPair& ep : found) {
                text += pair_text(ep.pair) + "  ";
                if (ep.cls.exceptional)
                    text += "exceptional (" + ep.cls.exceptional_branch + ")\n";
                else
                    text += "d=" + to_string(ep.cls.d) + " e=" + to_string(ep.cls.e) +
                            " k=" + std::to_string(ep.cls.k) + " " +
                            variant_name(ep.cls.variant) + "\n";
            }
            emit(opt, text);
        }
        return 0;
    }
    DiptychParams params = opt.params();
    MatrixPair pair = build_pair(params);
    Classification cls = classify_descent(pair);
    if (opt.format == "json") {
        emit(opt, json{{"params", to_json(params)},
                       {"pair", to_json(pair)},
                       {"classification", to_json(cls)},
                       {"main_case", params.main_case()},
                       {"excluded_case", params.excluded_case()}}
                          .dump(2) +
                      "\n");
    } else {
        std::string text = pair_text(pair) + "\n";
        text += params.main_case() ? "main case\n" : "excluded: " + params.excluded_case() + "\n";
        emit(opt, text);
    }
    return 0;
}

int run_rectangle(const Options& opt, const std::string& panel) {
    DiptychPanels panels = make_panels(opt.params());
    if (opt.format == "json") {
        json j;
        auto laurent = [](const LongRectangle& rect) {
            json gens = json::array();
            for (const auto& [g, m] : generators_laurent(rect))
                gens.push_back({{"gen", g.name()}, {"exponents", to_json(m)}});
            return gens;
        };
        auto corners = [](const LongRectangle& rect) {
            json out = json::array();
            for (const CornerEquation& ce : corner_equations(rect)) out.push_back(to_json(ce));
            return out;
        };
        for (auto [name, rect] : {std::pair{"ab", &panels.ab}, std::pair{"lm", &panels.lm}}) {
            if (panel != "both" && panel != name) continue;
            json r = to_json(*rect);
            try {
                r["attitude"] = attitude(*rect).name();
            } catch (const InvariantError&) {
                r["attitude"] = nullptr;
            }
            r["zero_word"] = tags_to_string(zero_word(*rect));
            r["corners"] = corners(*rect);
            r["laurent"] = laurent(*rect);
            j[name] = r;
        }
        j["facets"] = to_json(cone_facets(panels.pair));
        PolytopeIncidence poly = pretty_polytope_incidence(panels.ab.k(), panels.ab.l());
        j["polytope"] = {{"vertices", poly.vertices}, {"faces", poly.faces}};
        emit(opt, j.dump(2) + "\n");
        return 0;
    }
    std::string text;
    if (panel == "ab" || panel == "both") {
        text += "V_AB  (attitude: " + attitude(panels.ab).name() + ")\n";
        text += render_rectangle(panels.ab);
        text += "zero word " + tags_to_string(zero_word(panels.ab)) + "\n\n";
    }
    if (panel == "lm" || panel == "both") {
        text += "V_LM\n" + render_rectangle(panels.lm);
        text += "zero word " + tags_to_string(zero_word(panels.lm)) + "\n";
    }
    emit(opt, text);
    return 0;
}

int run_weights(const Options& opt, bool scissors) {
    WeightTable table = weight_table(opt.params());
    if (opt.format == "json")
        emit(opt, to_json(table).dump(2) + "\n");
    else if (opt.format == "csv")
        emit(opt, scissors ? scissors_csv(table) : weights_csv(table));
    else
        emit(opt, render_weights(table));
    return 0;
}

int run_schedule(const Options& opt, bool deconstruct) {
    Spreadsheet sheet = schedule(opt.params());
    if (opt.format == "json") {
        emit(opt, to_json(sheet).dump(2) + "\n");
        return 0;
    }
    std::string text = render_schedule(sheet);
    text += "h-sequence [";
    for (std::size_t nu = 0; nu < sheet.steps.size(); ++nu)
        text += (nu ? ", " : "") + sheet.steps[nu].h.str();
    text += "]\n";
    if (deconstruct) {
        DiptychPanels panels = make_panels(opt.params());
        text += "\n" + render_deconstruction(deconstruct_rectangle(panels.ab));
    }
    emit(opt, text);
    return 0;
}

int run_chain(const Options& opt, const std::string& direction, bool verify) {
    DiptychParams params = opt.params();
    EquationStore up = serial_chain(params);
    EquationStore down = direction == "up" ? up : serial_chain(params, ChainDirection::top_down);
    const EquationStore& primary = direction == "down" ? down : up;
    if (verify) {
        DiptychPanels panels = make_panels(params);
        WeightTable table = weight_table(panels);
        bool ok = homogeneity_check(primary, table) &&
                  section_check(primary, panels.ab, panels.lm) &&
                  up.equations == down.equations;
        if (!ok) {
            std::cerr << "verification failed\n";
            return kExitVerification;
        }
    }
    if (opt.format == "json") {
        emit(opt, to_json(primary).dump(2) + "\n");
    } else {
        std::string text = render_store(primary) + "\n";
        for (const PentagramStep& st : primary.log) text += render_pentagram(st) + "\n";
        emit(opt, text);
    }
    return 0;
}

int run_verify(const Options& opt, bool sweep, long dmax, long emax, int kmax, int jobs) {
    std::vector<DiptychParams> tuples;
    if (sweep) {
        for (long d = 2; d <= dmax; ++d)
            for (long e = 2; e <= emax; ++e)
                for (int k = 1; k <= kmax; ++k) {
                    if (d * e <= 4) continue;
                    tuples.push_back(make_params(d, e, k));
                }
    } else {
        tuples.push_back(opt.params());
    }
    std::vector<std::string> lines(tuples.size());
    std::atomic<bool> all_ok{true};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) {
            const DiptychParams& p = tuples[i];
            std::string label = "(" + to_string(p.d) + "," + to_string(p.e) + "," +
                                std::to_string(p.k) + ")";
            try {
                auto bad = verify_tuple(p);
                if (bad.empty()) {
                    lines[i] = label + " ok";
                } else {
                    all_ok = false;
                    lines[i] = label + " FAIL:";
                    for (const std::string& b : bad) lines[i] += " " + b;
                }
            } catch (const std::exception& ex) {
                all_ok = false;
                lines[i] = label + " ERROR: " + ex.what();
            }
        }
    };
    int n_jobs = std::max(1, std::min<int>(jobs, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (int t = 0; t < n_jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    std::string text;
    for (const std::string& l : lines) text += l + "\n";
    emit(opt, text);
    return all_ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diptych variety toolkit: partner pairs, long rectangles, torus weights, "
                 "projection schedules and serial Pfaffian unprojection"};
    app.require_subcommand(1);

    Options opt;
    bool enumerate = false, scissors = false, verify = false, sweep = false;
    long bound = 10, dmax = 5, emax = 5;
    int kmax = 6, jobs = 8;
    std::string panel = "both", direction = "up";

    CLI::App* c_classify = app.add_subcommand("classify", "build or enumerate partner pairs");
    c_classify->add_option("--d", opt.d, "first index");
    c_classify->add_option("--e", opt.e, "second index");
    c_classify->add_option("--k", opt.k, "number of alternating steps");
    c_classify->add_option("--variant", opt.variant, "factorisation variant");
    c_classify->add_flag("--enumerate", enumerate, "brute-force search instead");
    c_classify->add_option("--bound", bound, "entry bound for --enumerate");

    CLI::App* c_rect = app.add_subcommand("rectangle", "long rectangles of both panels");
    add_param_flags(c_rect, opt);
    c_rect->add_option("--panel", panel, "ab | lm | both");

    CLI::App* c_weights = app.add_subcommand("weights", "torus weight table");
    add_param_flags(c_weights, opt);
    c_weights->add_flag("--scissors", scissors, "emit scissors units (with --format csv)");

    CLI::App* c_sched = app.add_subcommand("schedule", "projection/unprojection schedule");
    add_param_flags(c_sched, opt);
    bool deconstruct = false;
    c_sched->add_flag("--deconstruct", deconstruct, "also print the chain of shrinking rectangles");

    CLI::App* c_chain = app.add_subcommand("chain", "serial unprojection equation chain");
    add_param_flags(c_chain, opt);
    c_chain->add_option("--direction", direction, "up | down");
    c_chain->add_flag("--verify", verify, "run homogeneity and section checks");

    CLI::App* c_verify = app.add_subcommand("verify", "run every check on one or many tuples");
    c_verify->add_option("--d", opt.d, "first index");
    c_verify->add_option("--e", opt.e, "second index");
    c_verify->add_option("--k", opt.k, "number of alternating steps");
    c_verify->add_flag("--sweep", sweep, "sweep a parameter grid");
    c_verify->add_option("--dmax", dmax, "sweep bound for d");
    c_verify->add_option("--emax", emax, "sweep bound for e");
    c_verify->add_option("--kmax", kmax, "sweep bound for k");
    c_verify->add_option("--jobs", jobs, "worker pool size");

    for (CLI::App* cmd : {c_classify, c_rect, c_weights, c_sched, c_chain, c_verify}) {
        cmd->add_option("--format", opt.format, "text | json | csv");
        cmd->add_option("--out", opt.out_path, "write output to a file");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return run_classify(opt, enumerate, bound);
        if (c_rect->parsed()) return run_rectangle(opt, panel);
        if (c_weights->parsed()) return run_weights(opt, scissors);
        if (c_sched->parsed()) return run_schedule(opt, deconstruct);
        if (c_chain->parsed()) return run_chain(opt, direction, verify);
        if (c_verify->parsed()) return run_verify(opt, sweep, dmax, emax, kmax, jobs);
    } catch (const OutOfScopeError& ex) {
        std::cerr << "out of scope: " << ex.what() << "\n";
        return kExitOutOfScope;
    } catch (const DomainError& ex) {
        std::cerr << "invalid request: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
