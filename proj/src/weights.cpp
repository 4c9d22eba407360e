#include "diptych/weights.hpp"

#include <algorithm>
#include <functional>

#include "diptych/schedule.hpp"

namespace diptych {

TorusWeight operator+(const TorusWeight& a, const TorusWeight& b) {
    TorusWeight r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] + b.w[i];
    return r;
}

TorusWeight operator-(const TorusWeight& a, const TorusWeight& b) {
    TorusWeight r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] - b.w[i];
    return r;
}

TorusWeight operator*(const Rat& c, const TorusWeight& a) {
    TorusWeight r;
    for (int i = 0; i < 4; ++i) r.w[i] = c * a.w[i];
    return r;
}

RatPair pi_AB(const TorusWeight& w) { return {w[2], w[3]}; }
RatPair pi_LM(const TorusWeight& w) { return {w[0], w[1]}; }

const TorusWeight& WeightTable::of(const GenId& g) const {
    auto it = weights.find(g);
    if (it == weights.end()) throw DomainError("no weight for generator " + g.name());
    return it->second;
}

TorusWeight WeightTable::weight_of(const Monomial& m) const {
    TorusWeight t;
    for (const auto& [g, e] : m.exponents()) t = t + Rat(e) * of(g);
    return t;
}

namespace {

void require_weight_scope(const DiptychParams& params) {
    if (params.d < 2 || params.e < 2)
        throw OutOfScopeError("torus weights assume d,e >= 2; " + params.excluded_case());
}

TorusWeight letter_weight(int slot) {
    TorusWeight t;
    t[slot] = 1;
    return t;
}

// Weight of the rhs of a corner tag equation in Laurent form, given a
// partially built table (all referenced generators must be present).
TorusWeight rhs_weight(const WeightTable& table, const Monomial& rhs) {
    return table.weight_of(rhs);
}

}  // namespace

WeightTable weight_table(const DiptychPanels& panels) {
    const DiptychParams& params = panels.params;
    require_weight_scope(params);
    const LongRectangle& ab = panels.ab;
    int k = ab.k(), l = ab.l();

    WeightTable table;
    table.params = params;
    bool odd = params.k % 2 == 1;
    table.denom_L = odd ? params.e : params.d;
    table.denom_M = odd ? params.d : params.e;

    table.weights[GenId::L()] = letter_weight(0);
    table.weights[GenId::M()] = letter_weight(1);
    table.weights[GenId::A()] = letter_weight(2);
    table.weights[GenId::B()] = letter_weight(3);

    // (alpha, beta; gamma, delta) = M(a_1) ... M(a_{k-1}) diag(-1/d, 0; 0, 1/e)
    // with M(t) = (0,1;-1,t): inverting the side recurrence that transports
    // the bottom pair (x_1, x_0) to the top pair (x_k, x_{k-1}).
    std::array<Rat, 4> m = {Rat(-1) / Rat(params.d), Rat(0), Rat(0), Rat(1) / Rat(params.e)};
    for (int i = k - 1; i >= 1; --i) {
        const Int& t = ab.x_tags[i];
        std::array<Rat, 4> next = {m[2], m[3], Rat(t) * m[2] - m[0], Rat(t) * m[3] - m[1]};
        m = next;
    }
    table.abcd = m;
    const Rat &alpha = m[0], &beta = m[1], &gamma = m[2], &delta = m[3];

    Rat inv_dL = Rat(1) / Rat(table.denom_L), inv_dM = Rat(1) / Rat(table.denom_M);
    TorusWeight x0;
    x0[0] = -inv_dL;
    x0[2] = gamma;
    x0[3] = delta;
    TorusWeight x1;
    x1[1] = inv_dM;
    x1[2] = alpha;
    x1[3] = beta;
    table.weights[GenId::x(0)] = x0;
    table.weights[GenId::x(1)] = x1;
    for (int i = 1; i <= k - 1; ++i)
        table.weights[GenId::x(i + 1)] =
            Rat(ab.x_tags[i]) * table.weights[GenId::x(i)] - table.weights[GenId::x(i - 1)];

    TorusWeight y0;
    y0[1] = -inv_dM;
    y0[2] = Rat(table.denom_L) * gamma - alpha;
    y0[3] = Rat(table.denom_L) * delta - beta;
    table.weights[GenId::y(0)] = y0;
    // y_1 from the corner tag equation at y_0, then the side recurrence.
    {
        const Mat2& mt = panels.pair.ab;
        TorusWeight y1 = Rat(mt.m11) * table.weights[GenId::A()] +
                         Rat(mt.m12) * table.weights[GenId::B()] +
                         Rat(ab.y_tags[0]) * y0 - x0;
        table.weights[GenId::y(1)] = y1;
    }
    for (int j = 1; j <= l - 1; ++j)
        table.weights[GenId::y(j + 1)] =
            Rat(ab.y_tags[j]) * table.weights[GenId::y(j)] - table.weights[GenId::y(j - 1)];

    // Cross-checks. Corner forms first:
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw InvariantError(std::string("weight table: ") + what);
    };
    const TorusWeight& xk = table.weights[GenId::x(k)];
    const TorusWeight& yl = table.weights[GenId::y(l)];
    expect(xk[2] == (odd ? -inv_dM : -inv_dL) && xk[3] == 0, "x_k corner form");
    expect(yl[2] == 0 && yl[3] == (odd ? -inv_dL : -inv_dM), "y_l corner form");
    if (k >= 1) {
        const TorusWeight& xk1 = table.weights[GenId::x(k - 1)];
        expect(xk1[3] == (odd ? inv_dL : inv_dM) && xk1[2] == 0, "x_{k-1} corner form");
    }
    // Every corner tag equation of both panels is weight-homogeneous.
    for (const LongRectangle* rect : {&panels.ab, &panels.lm}) {
        for (const CornerEquation& ce : corner_equations(*rect)) {
            TorusWeight lhs = table.of(ce.lhs1) + table.of(ce.lhs2);
            expect(lhs == rhs_weight(table, ce.laurent_rhs), "corner equation homogeneity");
            if (ce.polynomial_rhs)
                expect(lhs == rhs_weight(table, *ce.polynomial_rhs),
                       "corner replacement homogeneity");
        }
    }
    // All entries except the four explicit corner ones are nonnegative, and
    // denominators divide lcm(d, e).
    Int lcm_de;
    mpz_lcm(lcm_de.get_mpz_t(), params.d.get_mpz_t(), params.e.get_mpz_t());
    for (const auto& [g, tw] : table.weights) {
        for (int c = 0; c < 4; ++c) {
            expect(Rat(tw[c] * lcm_de).get_den() == 1, "denominator divides lcm(d,e)");
            if (tw[c] < 0) {
                bool corner = (g == GenId::x(0) && c == 0) || (g == GenId::y(0) && c == 1) ||
                              (g == GenId::x(k) && c == 2) || (g == GenId::y(l) && c == 3);
                expect(corner, "negative entry away from a corner");
            }
        }
    }
    return table;
}

WeightTable weight_table(const DiptychParams& params) {
    require_weight_scope(params);
    return weight_table(make_panels(params));
}

bool monotonicity_check(const WeightTable& table) {
    require_weight_scope(table.params);
    auto lm_less = [](const TorusWeight& a, const TorusWeight& b) {
        return a[0] < b[0] && a[1] < b[1];
    };
    auto ab_greater = [](const TorusWeight& a, const TorusWeight& b) {
        return a[2] > b[2] && a[3] > b[3];
    };
    auto run = [&](GenId::Kind kind, int count) {
        for (int i = 0; i + 1 < count; ++i) {
            GenId lo = kind == GenId::Kind::X ? GenId::x(i) : GenId::y(i);
            GenId hi = kind == GenId::Kind::X ? GenId::x(i + 1) : GenId::y(i + 1);
            if (!lm_less(table.of(lo), table.of(hi))) return false;
            if (!ab_greater(table.of(lo), table.of(hi))) return false;
        }
        return true;
    };
    int k = 0, l = 0;
    for (const auto& [g, tw] : table.weights) {
        if (g.kind == GenId::Kind::X) k = std::max(k, g.index);
        if (g.kind == GenId::Kind::Y) l = std::max(l, g.index);
    }
    return run(GenId::Kind::X, k + 1) && run(GenId::Kind::Y, l + 1);
}

bool minimal_generator_check(const WeightTable& table, long exponent_bound) {
    // Scale all weights to integer vectors; letters go last so the suffix of
    // the search is a direct coordinate test.
    Int scale = 1;
    for (const auto& [g, tw] : table.weights)
        for (int c = 0; c < 4; ++c) {
            Int den = tw[c].get_den();
            Int l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = l;
        }
    std::vector<GenId> gens;
    std::vector<std::array<Int, 4>> vec;
    for (const auto& [g, tw] : table.weights) {
        if (g.is_letter()) continue;
        gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), [&](const GenId& a, const GenId& b) {
        auto mag = [&](const GenId& g) {
            Rat s = 0;
            for (int c = 0; c < 4; ++c) s += abs(table.of(g)[c]);
            return s;
        };
        return mag(a) > mag(b);
    });
    for (const GenId& g : gens) {
        std::array<Int, 4> v;
        for (int c = 0; c < 4; ++c) v[c] = Rat(table.of(g)[c] * scale).get_num();
        vec.push_back(v);
    }

    std::size_t n = gens.size();
    std::vector<std::array<Int, 4>> lo(n + 1), hi(n + 1);
    // Suffix intervals include the four letters with exponents in [0, bound].
    Int letter_hi = scale * exponent_bound;
    lo[n] = {0, 0, 0, 0};
    hi[n] = {letter_hi, letter_hi, letter_hi, letter_hi};
    for (std::size_t idx = n; idx-- > 0;) {
        for (int c = 0; c < 4; ++c) {
            Int contrib = vec[idx][c] * exponent_bound;
            lo[idx][c] = lo[idx + 1][c] + (contrib < 0 ? contrib : Int(0));
            hi[idx][c] = hi[idx + 1][c] + (contrib > 0 ? contrib : Int(0));
        }
    }
    // Depth-first search with per-coordinate interval pruning; at the end the
    // residual must be a valid letter monomial A^a B^b L^l M^m.
    std::function<bool(std::size_t, const std::array<Int, 4>&, std::size_t, bool)> reach =
        [&](std::size_t idx, const std::array<Int, 4>& target, std::size_t skip,
            bool used) -> bool {
        for (int c = 0; c < 4; ++c)
            if (target[c] < lo[idx][c] || target[c] > hi[idx][c]) return false;
        if (idx == n) {
            bool all_zero = true;
            for (int c = 0; c < 4; ++c) {
                if (target[c] % scale != 0) return false;
                if (target[c] != 0) all_zero = false;
            }
            return used || !all_zero;
        }
        if (idx == skip) return reach(idx + 1, target, skip, used);
        for (long e = 0; e <= exponent_bound; ++e) {
            std::array<Int, 4> t;
            for (int c = 0; c < 4; ++c) t[c] = target[c] - Int(e) * vec[idx][c];
            if (reach(idx + 1, t, skip, used || e > 0)) return true;
        }
        return false;
    };
    for (std::size_t tgt = 0; tgt < n; ++tgt) {
        if (reach(0, vec[tgt], tgt, false)) return false;  // representable: not minimal
    }
    return true;
}

PaddedCellClass PaddedCell::add(const PaddedCellClass& a, const PaddedCellClass& b) const {
    return {(a.residue_d + b.residue_d) % modulus_d, (a.residue_e + b.residue_e) % modulus_e};
}

PaddedCellClass PaddedCell::neg(const PaddedCellClass& a) const {
    return {((-a.residue_d) % modulus_d + modulus_d) % modulus_d,
            ((-a.residue_e) % modulus_e + modulus_e) % modulus_e};
}

PaddedCell padded_cell(const DiptychParams& params) {
    require_weight_scope(params);
    DiptychPanels panels = make_panels(params);
    WeightTable table = weight_table(panels);
    PaddedCell cell;
    cell.modulus_d = table.denom_L;
    cell.modulus_e = table.denom_M;

    auto fractional = [](const TorusWeight& w) {
        std::array<Rat, 4> f;
        for (int c = 0; c < 4; ++c) {
            Rat v = w[c];
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            f[c] = v - Rat(fl);
        }
        return f;
    };
    const TorusWeight& wx0 = table.of(GenId::x(0));
    const TorusWeight& wy0 = table.of(GenId::y(0));
    for (const auto& [g, tw] : table.weights) {
        if (g.is_letter()) {
            cell.classes[g] = {0, 0};
            continue;
        }
        bool found = false;
        for (Int i = 0; i < cell.modulus_d && !found; ++i)
            for (Int j = 0; j < cell.modulus_e && !found; ++j) {
                TorusWeight probe = tw - Rat(i) * wx0 - Rat(j) * wy0;
                auto f = fractional(probe);
                if (f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0) {
                    cell.classes[g] = {i, j};
                    found = true;
                }
            }
        if (!found)
            throw InvariantError("generator class not spanned by [x_0], [y_0]: " + g.name());
    }

    int k = panels.ab.k();
    auto cls = [&](const GenId& g) { return cell.classes.at(g); };
    // x_1 = -y_0 and x_i = -x_{i-2}; in particular period 4 with x_3 = y_0.
    if (k >= 1 && !(cls(GenId::x(1)) == cell.neg(cls(GenId::y(0)))))
        throw InvariantError("padded cell: x_1 != -y_0");
    for (int i = 2; i <= k; ++i)
        if (!(cls(GenId::x(i)) == cell.neg(cls(GenId::x(i - 2)))))
            throw InvariantError("padded cell: x_i != -x_{i-2}");
    if (k >= 3 && !(cls(GenId::x(3)) == cls(GenId::y(0))))
        throw InvariantError("padded cell: x_3 != y_0");

    if (params.main_case()) {
        // The y-walk: each adjoined y_{j+1} moves by the class of the current
        // top x; y_1 moves from y_0 by x_2 (when it exists).
        Spreadsheet sheet = schedule_for(panels.ab, params);
        for (const ProjectionStep& step : sheet.steps) {
            if (step.s.kind != GenId::Kind::Y) continue;
            int j = step.s.index;
            PaddedCellClass want = cell.add(cls(GenId::y(j - 1)), cls(GenId::x(step.bar_i)));
            if (!(cls(step.s) == want)) throw InvariantError("padded cell: y-walk step fails");
        }
        if (k >= 2 && panels.ab.l() >= 1) {
            PaddedCellClass want = cell.add(cls(GenId::y(0)), cls(GenId::x(2)));
            if (!(cls(GenId::y(1)) == want)) throw InvariantError("padded cell: y_1 != y_0 + x_2");
        }
    }
    return cell;
}

std::vector<ScissorsRow> scissors_export(const WeightTable& table) {
    std::vector<ScissorsRow> rows;
    auto push = [&](const GenId& g) {
        const TorusWeight& w = table.of(g);
        Rat lu = w[0] * Rat(table.denom_L), mu = w[1] * Rat(table.denom_M);
        if (lu.get_den() != 1 || mu.get_den() != 1)
            throw InvariantError("scissors units are not integral for " + g.name());
        rows.push_back({g, lu.get_num(), mu.get_num()});
    };
    int k = 0, l = 0;
    for (const auto& [g, tw] : table.weights) {
        if (g.kind == GenId::Kind::X) k = std::max(k, g.index);
        if (g.kind == GenId::Kind::Y) l = std::max(l, g.index);
    }
    for (int i = 0; i <= k; ++i) push(GenId::x(i));
    for (int j = 0; j <= l; ++j) push(GenId::y(j));
    for (GenId g : {GenId::A(), GenId::B(), GenId::L(), GenId::M()}) push(g);
    return rows;
}

}  // namespace diptych
