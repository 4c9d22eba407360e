#include "diptych/chain.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace diptych {

namespace {

std::tuple<Int, Int, Monomial> term_key(const Monomial& m) {
    return {m.degree_in(GenId::Kind::L, GenId::Kind::M),
            m.degree_in(GenId::Kind::A, GenId::Kind::B), m};
}

}  // namespace

Trinomial Trinomial::make(GenId a, GenId b, Monomial s1, Monomial s2) {
    if (b < a) std::swap(a, b);
    if (a == b) throw InvariantError("trinomial with a repeated lhs generator");
    if (s1 == s2) throw InvariantError("trinomial with equal terms");
    if (term_key(s2) < term_key(s1)) std::swap(s1, s2);
    return Trinomial{std::move(a), std::move(b), std::move(s1), std::move(s2)};
}

int SkewMatrix5::slot(int i, int j) {
    if (i < 1 || j <= i || j > 5) throw InvariantError("bad skew matrix slot");
    static constexpr int offset[4] = {0, 4, 7, 9};
    return offset[i - 1] + (j - i - 1);
}

std::map<Monomial, Int> pfaffian(const SkewMatrix5& m, int i, int j, int k, int l) {
    std::map<Monomial, Int> acc;
    auto add = [&acc](const SignedTerm& p, const SignedTerm& q, int sign) {
        Monomial mon = p.m * q.m;
        Int& c = acc[mon];
        c += p.sign * q.sign * sign;
        if (c == 0) acc.erase(mon);
    };
    add(m.entry(i, j), m.entry(k, l), +1);
    add(m.entry(i, k), m.entry(j, l), -1);
    add(m.entry(i, l), m.entry(j, k), +1);
    return acc;
}

namespace {

// ij.kl index sets for the two input and three output Pfaffians.
constexpr std::array<std::array<int, 4>, 5> kPfLabels = {{{2, 3, 4, 5},
                                                          {1, 2, 3, 4},
                                                          {1, 2, 3, 5},
                                                          {1, 3, 4, 5},
                                                          {1, 2, 4, 5}}};

bool pf_matches(const std::map<Monomial, Int>& pf, const Trinomial& eq) {
    Monomial lhs = Monomial::gen(eq.u) * Monomial::gen(eq.w);
    if (pf.size() != 3) return false;
    auto it_l = pf.find(lhs), it_1 = pf.find(eq.t1), it_2 = pf.find(eq.t2);
    if (it_l == pf.end() || it_1 == pf.end() || it_2 == pf.end()) return false;
    return (it_l->second == 1 && it_1->second == -1 && it_2->second == -1) ||
           (it_l->second == -1 && it_1->second == 1 && it_2->second == 1);
}

struct Layout {
    // Which generator of E2 sits at a_34 (its partner takes a_12), and which
    // generator of E1 sits at a_23 (partner at a_45).
    GenId a12, a23, a34, a45;
    Monomial e1_g_term, e1_other, e2_g_term, e2_other;
};

std::optional<PentagramResult> solve_with_layout(const Layout& lay, const GenId& new_var,
                                                 const Monomial& g, const Trinomial& e1,
                                                 const Trinomial& e2) {
    if (!g.divides(lay.e1_g_term) || !g.divides(lay.e2_g_term)) return std::nullopt;
    if (lay.e1_other.exponent(lay.a34) < 1) return std::nullopt;
    if (lay.e2_other.exponent(lay.a23) < 1) return std::nullopt;

    PentagramResult res;
    res.g = g;
    SkewMatrix5& m = res.matrix;
    m.entry(1, 2) = {1, Monomial::gen(lay.a12)};
    m.entry(1, 3) = {1, lay.e2_g_term.divide_exact(g)};
    m.entry(1, 4) = {-1, lay.e2_other.divide_exact(Monomial::gen(lay.a23))};
    m.entry(1, 5) = {-1, Monomial::gen(new_var)};
    m.entry(2, 3) = {1, Monomial::gen(lay.a23)};
    m.entry(2, 4) = {1, g};
    m.entry(2, 5) = {-1, lay.e1_other.divide_exact(Monomial::gen(lay.a34))};
    m.entry(3, 4) = {1, Monomial::gen(lay.a34)};
    m.entry(3, 5) = {1, lay.e1_g_term.divide_exact(g)};
    m.entry(4, 5) = {1, Monomial::gen(lay.a45)};

    if (!pf_matches(pfaffian(m, 2, 3, 4, 5), e1)) return std::nullopt;
    if (!pf_matches(pfaffian(m, 1, 2, 3, 4), e2)) return std::nullopt;

    try {
        // 12.35: new_var * a23 = a12*a35 + a13*|a25|
        res.outputs[0] = Trinomial::make(new_var, lay.a23, m.entry(1, 2).m * m.entry(3, 5).m,
                                         m.entry(1, 3).m * m.entry(2, 5).m);
        // 13.45: new_var * a34 = a13*a45 + |a14|*a35
        res.outputs[1] = Trinomial::make(new_var, lay.a34, m.entry(1, 3).m * m.entry(4, 5).m,
                                         m.entry(1, 4).m * m.entry(3, 5).m);
        // 12.45: a12 * a45 = |a14|*|a25| + new_var*g
        res.outputs[2] = Trinomial::make(lay.a12, lay.a45, m.entry(1, 4).m * m.entry(2, 5).m,
                                         Monomial::gen(new_var) * g);
    } catch (const InvariantError&) {
        return std::nullopt;
    }

    for (std::size_t o = 0; o < 3; ++o) {
        const Trinomial& t = res.outputs[o];
        if (!t.t1.nonnegative() || !t.t2.nonnegative()) return std::nullopt;
        if (!pf_matches(pfaffian(res.matrix, kPfLabels[2 + o][0], kPfLabels[2 + o][1],
                                 kPfLabels[2 + o][2], kPfLabels[2 + o][3]),
                        t))
            return std::nullopt;
    }
    return res;
}

std::vector<Layout> candidate_layouts(const Trinomial& e1, const Trinomial& e2,
                                      const Monomial& g,
                                      const std::optional<std::pair<Monomial, Monomial>>&
                                          designated) {
    std::vector<Layout> out;
    auto term_splits = [&](const Trinomial& eq, bool first) {
        std::vector<std::pair<Monomial, Monomial>> splits;  // (g-term, other)
        if (designated) {
            const Monomial& want = first ? designated->first : designated->second;
            if (eq.t1 == want) splits.emplace_back(eq.t1, eq.t2);
            if (eq.t2 == want) splits.emplace_back(eq.t2, eq.t1);
            return splits;
        }
        if (g.divides(eq.t1)) splits.emplace_back(eq.t1, eq.t2);
        if (g.divides(eq.t2)) splits.emplace_back(eq.t2, eq.t1);
        return splits;
    };
    for (const auto& [g1, o1] : term_splits(e1, true)) {
        for (const auto& [g2, o2] : term_splits(e2, false)) {
            for (bool flip2 : {false, true}) {
                GenId a34 = flip2 ? e2.w : e2.u;
                GenId a12 = flip2 ? e2.u : e2.w;
                for (bool flip1 : {false, true}) {
                    GenId a23 = flip1 ? e1.w : e1.u;
                    GenId a45 = flip1 ? e1.u : e1.w;
                    out.push_back({a12, a23, a34, a45, g1, o1, g2, o2});
                }
            }
        }
    }
    return out;
}

}  // namespace

PentagramResult pentagram_solve(const Trinomial& e1, const Trinomial& e2, const GenId& new_var,
                                const Monomial& g,
                                const std::optional<std::pair<Monomial, Monomial>>& designated) {
    std::set<GenId> distinct{e1.u, e1.w, e2.u, e2.w};
    if (distinct.size() != 4)
        throw DomainError("pentagram inputs must cover four distinct generators");
    std::vector<PentagramResult> found;
    auto outputs_key = [](const PentagramResult& r) {
        std::set<std::pair<std::pair<GenId, GenId>, std::pair<Monomial, Monomial>>> s;
        for (const Trinomial& t : r.outputs) s.insert({t.key(), {t.t1, t.t2}});
        return s;
    };
    for (const Layout& lay : candidate_layouts(e1, e2, g, designated)) {
        auto res = solve_with_layout(lay, new_var, g, e1, e2);
        if (!res) continue;
        bool dup = false;
        for (const PentagramResult& f : found)
            if (outputs_key(f) == outputs_key(*res)) dup = true;
        if (!dup) found.push_back(*res);
    }
    if (found.empty())
        throw InvariantError("pentagram: no consistent layout for the given inputs");
    if (found.size() > 1) throw InvariantError("pentagram: ambiguous term matching");
    return found.front();
}

const Trinomial& EquationStore::at(const GenId& a, const GenId& b) const {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = equations.find(key);
    if (it == equations.end())
        throw InvariantError("store lookup miss: no equation for " + a.name() + "*" + b.name());
    return it->second;
}

bool EquationStore::has(const GenId& a, const GenId& b) const {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return equations.count(key) > 0;
}

void EquationStore::insert(const Trinomial& eq) {
    auto [it, fresh] = equations.emplace(eq.key(), eq);
    if (!fresh && !(it->second == eq))
        throw InvariantError("conflicting derivations for " + eq.u.name() + "*" + eq.w.name());
}

std::pair<Trinomial, Trinomial> initial_ci(const LongRectangle& rect_ab,
                                           const LongRectangle& rect_lm) {
    auto ab = corner_equations(rect_ab);
    auto lm = corner_equations(rect_lm);
    auto polynomial = [](const CornerEquation& ce) {
        if (!ce.polynomial_rhs)
            throw InvariantError("corner at " + ce.corner.name() +
                                 " has no polynomial replacement");
        return *ce.polynomial_rhs;
    };
    // Bottom corners of both panels merge: x_1y_0 and x_0y_1.
    if (!(ab[0].lhs1 == lm[0].lhs1 && ab[0].lhs2 == lm[0].lhs2))
        throw InvariantError("panels disagree on the x_0 corner pair");
    Trinomial e1 = Trinomial::make(ab[0].lhs1, ab[0].lhs2, polynomial(ab[0]), polynomial(lm[0]));
    Trinomial e2 = Trinomial::make(ab[1].lhs1, ab[1].lhs2, polynomial(ab[1]), polynomial(lm[1]));
    return {e1, e2};
}

namespace {

EquationStore chain_bottom_up(const DiptychPanels& panels) {
    const DiptychParams& params = panels.params;
    Spreadsheet sheet = schedule_for(panels.ab, params);
    EquationStore store;
    auto [e1, e2] = initial_ci(panels.ab, panels.lm);
    store.insert(e1);
    store.insert(e2);

    for (const ProjectionStep& step : sheet.steps) {
        int i = step.bar_i, j = step.bar_j;
        const Trinomial& in_a = store.at(GenId::x(i - 1), GenId::y(j));
        const Trinomial& in_b = i >= 2 ? store.at(GenId::x(i - 2), GenId::x(i))
                                       : store.at(GenId::x(i), GenId::y(j - 1));
        // The h-divisible terms of the two inputs fix g as their full hcf.
        auto designated = [&step](const Trinomial& eq) -> const Monomial& {
            bool d1 = step.h.divides(eq.t1), d2 = step.h.divides(eq.t2);
            if (d1 == d2)
                throw InvariantError("designated term for h is not unique at step " +
                                     std::to_string(step.nu));
            return d1 ? eq.t1 : eq.t2;
        };
        Monomial g = Monomial::hcf(designated(in_a), designated(in_b));
        if (!step.h.divides(g))
            throw InvariantError("h does not divide g at step " + std::to_string(step.nu));
        PentagramResult res = pentagram_solve(in_b, in_a, step.s, g);
        for (const Trinomial& t : res.outputs) store.insert(t);
        store.log.push_back({step.nu, step.s, in_b, in_a, res});
    }
    std::size_t expect = 2 + 3 * sheet.steps.size();
    if (store.equations.size() != expect)
        throw InvariantError("store has " + std::to_string(store.equations.size()) +
                             " equations, expected " + std::to_string(expect));
    return store;
}

GenId translate_gen(const GenId& g, int k, int l) {
    switch (g.kind) {
        case GenId::Kind::X: return GenId::x(k - g.index);
        case GenId::Kind::Y: return GenId::y(l - g.index);
        case GenId::Kind::A: return GenId::L();
        case GenId::Kind::B: return GenId::M();
        case GenId::Kind::L: return GenId::A();
        case GenId::Kind::M: return GenId::B();
    }
    return g;
}

Monomial translate_mon(const Monomial& m, int k, int l) {
    Monomial out;
    for (const auto& [g, e] : m.exponents()) out *= Monomial::gen(translate_gen(g, k, l), e);
    return out;
}

Trinomial translate_trinomial(const Trinomial& t, int k, int l) {
    return Trinomial::make(translate_gen(t.u, k, l), translate_gen(t.w, k, l),
                           translate_mon(t.t1, k, l), translate_mon(t.t2, k, l));
}

}  // namespace

EquationStore serial_chain(const DiptychParams& params, ChainDirection direction) {
    if (!params.main_case())
        throw OutOfScopeError("serial unprojection needs the main case d,e >= 2, d*e > 4; " +
                              params.excluded_case());
    if (direction == ChainDirection::bottom_up) return chain_bottom_up(make_panels(params));

    // Top-down: run the exchanged diptych bottom-up and relabel. Exchanging
    // the panels turns the rectangles upside down; read from the top, the
    // exchanged diptych carries labels (e,d) for odd k and (d,e) for even k
    // (where it is its own exchange).
    bool odd = params.k % 2 == 1;
    DiptychParams swapped = make_params(odd ? params.e : params.d, odd ? params.d : params.e,
                                        params.k, Variant::first);
    DiptychPanels panels = make_panels(swapped);
    int k = panels.ab.k(), l = panels.ab.l();
    EquationStore up = chain_bottom_up(panels);
    EquationStore down;
    for (const auto& [key, eq] : up.equations) down.insert(translate_trinomial(eq, k, l));
    for (const PentagramStep& st : up.log) {
        PentagramStep t;
        t.nu = st.nu;
        t.s = translate_gen(st.s, k, l);
        t.in1 = translate_trinomial(st.in1, k, l);
        t.in2 = translate_trinomial(st.in2, k, l);
        t.result.g = translate_mon(st.result.g, k, l);
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                const SignedTerm& e = st.result.matrix.entry(i, j);
                t.result.matrix.entry(i, j) = {e.sign, translate_mon(e.m, k, l)};
            }
        for (std::size_t o = 0; o < 3; ++o)
            t.result.outputs[o] = translate_trinomial(st.result.outputs[o], k, l);
        down.log.push_back(std::move(t));
    }
    return down;
}

bool homogeneity_check(const EquationStore& store, const WeightTable& table) {
    for (const auto& [key, eq] : store.equations) {
        TorusWeight lhs = table.of(eq.u) + table.of(eq.w);
        if (!(lhs == table.weight_of(eq.t1))) return false;
        if (!(lhs == table.weight_of(eq.t2))) return false;
    }
    return true;
}

namespace {

// Image of a polynomial monomial under the panel's Laurent parametrisation.
std::optional<Monomial> laurent_image(const std::map<GenId, Monomial>& basis,
                                      const Monomial& mon) {
    Monomial out;
    for (const auto& [g, e] : mon.exponents()) {
        auto it = basis.find(g);
        if (it == basis.end()) return std::nullopt;
        for (const auto& [bg, be] : it->second.exponents()) out *= Monomial::gen(bg, be * e);
    }
    return out;
}

bool section_passes(const EquationStore& store, const LongRectangle& rect, GenId::Kind kill1,
                    GenId::Kind kill2) {
    auto basis = generators_laurent(rect);
    for (const auto& [key, eq] : store.equations) {
        auto target = laurent_image(basis, Monomial::gen(eq.u) * Monomial::gen(eq.w));
        if (!target) return false;
        int survivors = 0;
        bool ok = false;
        for (const Monomial* t : {&eq.t1, &eq.t2}) {
            if (t->degree_in(kill1, kill2) != 0) continue;
            ++survivors;
            auto img = laurent_image(basis, *t);
            ok = img && *img == *target;
        }
        if (survivors != 1 || !ok) return false;
    }
    return true;
}

}  // namespace

bool section_check(const EquationStore& store, const LongRectangle& rect_ab,
                   const LongRectangle& rect_lm) {
    return section_passes(store, rect_ab, GenId::Kind::L, GenId::Kind::M) &&
           section_passes(store, rect_lm, GenId::Kind::A, GenId::Kind::B);
}

std::vector<std::array<Int, 6>> claim_offenders(const WeightTable& table,
                                                const ProjectionStep& step,
                                                const TorusWeight& target, long exponent_bound) {
    std::vector<std::array<Int, 6>> offenders;
    const TorusWeight& wx = table.of(GenId::x(step.bar_i));
    const TorusWeight& wy = table.of(GenId::y(step.bar_j));
    Int need_a = step.h.exponent(GenId::A()), need_b = step.h.exponent(GenId::B());
    for (long xi = 0; xi <= exponent_bound; ++xi) {
        for (long eta = 0; eta <= exponent_bound; ++eta) {
            TorusWeight rest = target - Rat(xi) * wx - Rat(eta) * wy;
            // Residue must be a genuine monomial L^l M^m A^a B^b.
            bool ok = true;
            std::array<Int, 4> exps;
            for (int c = 0; c < 4 && ok; ++c) {
                if (rest[c].get_den() != 1) ok = false;
                else {
                    exps[c] = rest[c].get_num();
                    if (exps[c] < 0 || exps[c] > exponent_bound) ok = false;
                }
            }
            if (!ok) continue;
            if (exps[2] < need_a || exps[3] < need_b)  // not divisible by h
                offenders.push_back({Int(xi), Int(eta), exps[2], exps[3], exps[0], exps[1]});
        }
    }
    return offenders;
}

bool claim_divisibility_check(const DiptychParams& params, int nu, long exponent_bound) {
    if (!params.main_case())
        throw OutOfScopeError("divisor containment check needs the main case");
    DiptychPanels panels = make_panels(params);
    WeightTable table = weight_table(panels);
    Spreadsheet sheet = schedule_for(panels.ab, params);
    if (nu < 0 || nu >= static_cast<int>(sheet.steps.size()))
        throw DomainError("nu out of range");
    const ProjectionStep& step = sheet.steps[nu];
    int i = step.bar_i, j = step.bar_j;

    std::vector<GenId> boundary;
    for (int t = 0; t <= i; ++t) boundary.push_back(GenId::x(t));
    for (int t = 0; t <= j; ++t) boundary.push_back(GenId::y(t));
    auto adjacent = [&](const GenId& u, const GenId& w) {
        if (u.kind == w.kind) return std::abs(u.index - w.index) == 1;
        int xi = u.kind == GenId::Kind::X ? u.index : w.index;
        int yj = u.kind == GenId::Kind::Y ? u.index : w.index;
        return (xi == 0 && yj == 0) || (xi == i && yj == j);
    };
    for (std::size_t p = 0; p < boundary.size(); ++p) {
        for (std::size_t q = p + 1; q < boundary.size(); ++q) {
            if (adjacent(boundary[p], boundary[q])) continue;
            TorusWeight target = table.of(boundary[p]) + table.of(boundary[q]);
            if (!claim_offenders(table, step, target, exponent_bound).empty()) return false;
        }
    }
    return true;
}

}  // namespace diptych
