#include "diptych/classify.hpp"

#include <algorithm>
#include <map>

namespace diptych {

namespace {

Mat2 factor_f(const Int& t) { return {t, -1, 1, 0}; }   // (t,-1;1,0)
Mat2 factor_x(const Int& t) { return {0, -1, 1, t}; }   // (0,-1;1,t)
const Mat2 kTurn{0, 1, -1, 0};                          // (0,1;-1,0)

bool is_regular_endpoint_upper(const MatrixPair& p) {
    return p.r() == 1 && p.s() == 1 && p.b() == 0 && p.h() == 0;
}

bool is_regular_endpoint_lower(const MatrixPair& p) {
    return p.r() == 1 && p.s() == 1 && p.a() == 0 && p.g() == 0;
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::first: return "first";
        case Variant::second: return "second";
        case Variant::swapped_first: return "swapped-first";
        case Variant::swapped_second: return "swapped-second";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "first") return Variant::first;
    if (name == "second") return Variant::second;
    if (name == "swapped-first") return Variant::swapped_first;
    if (name == "swapped-second") return Variant::swapped_second;
    throw DomainError("unknown variant: " + name);
}

std::optional<int> table21_max_k(const Int& de) {
    if (de < 0) throw DomainError("d*e must be nonnegative");
    if (de == 0) return 1;
    if (de == 1) return 2;
    if (de == 2) return 3;
    if (de == 3) return 5;
    return std::nullopt;
}

std::string DiptychParams::excluded_case() const {
    if (d == 0 || e == 0) return "degenerate (d*e = 0): classifier only";
    if (main_case()) return "";
    if (d == 1 || e == 1) {
        if (d * e > 4) return "d or e = 1: companion construction (BR3)";
        return "small case: companion construction (BR2)";
    }
    return "d*e <= 4: companion construction (BR2)";
}

DiptychParams make_params(Int d, Int e, int k, Variant variant) {
    if (d < 0 || e < 0 || k < 1) throw DomainError("need d,e >= 0 and k >= 1");
    Int de = d * e;
    auto max_k = table21_max_k(de);
    if (max_k && k > *max_k)
        throw DomainError("k = " + std::to_string(k) + " exceeds the bound k <= " +
                          std::to_string(*max_k) + " for d*e = " + to_string(de));
    return DiptychParams{std::move(d), std::move(e), k, variant};
}

MatrixPair build_pair_raw(const Int& d, const Int& e, int k, Variant variant) {
    if (k < 1) throw DomainError("k must be >= 1");
    // First line: (d,-1;1,0)(e,-1;1,0)...(k alternating factors)...(0,1;-1,0).
    Mat2 line1 = Mat2::identity();
    for (int i = 1; i <= k; ++i) line1 = line1 * factor_f(i % 2 == 1 ? d : e);
    line1 = line1 * kTurn;
    // Second line: (0,1;-1,0) then k factors (0,-1;1,t) ending with t = e.
    Mat2 line2 = kTurn;
    for (int j = 1; j <= k; ++j) line2 = line2 * factor_x((k - j) % 2 == 0 ? e : d);
    MatrixPair pair{line1, line2};
    switch (variant) {
        case Variant::first: break;
        case Variant::swapped_first: pair = pair.exchanged(); break;
        case Variant::second: pair = pair.rotated(); break;
        case Variant::swapped_second: pair = pair.rotated().exchanged(); break;
    }
    return pair;
}

MatrixPair build_pair(const DiptychParams& params) {
    MatrixPair pair = build_pair_raw(params.d, params.e, params.k, params.variant);
    VerifyOutcome v = verify_rules(pair);
    if (!v.ok) throw InvariantError("built pair violates the rules: " + v.violation);
    return pair;
}

MatrixPair build_pair(const Int& d, const Int& e, int k, Variant variant) {
    return build_pair(make_params(d, e, k, variant));
}

VerifyOutcome verify_rules(const MatrixPair& pair) {
    VerifyOutcome out;
    auto fail = [&out](const std::string& why) {
        out.ok = false;
        out.violation = why;
        return out;
    };
    if (pair.r() < 1 || pair.s() < 1) return fail("r and s must be >= 1");
    if (pair.a() < 0 || pair.b() < 0) return fail("a and b must be >= 0");
    if (pair.g() < 0 || pair.h() < 0) return fail("g and h must be >= 0");
    if (pair.lm.m11 != pair.r() || pair.lm.m22 != pair.s())
        return fail("the two matrices must share r and s");
    Int n = pair.r() * pair.s() - 1;
    if (pair.a() * pair.b() != n) return fail("ab != rs-1");
    if (pair.g() * pair.h() != n) return fail("gh != rs-1");
    Int ah = pair.a() + pair.h(), bg = pair.b() + pair.g();
    if (ah % pair.r() != 0) return fail("a+h != 0 mod r");
    if (ah % pair.s() != 0) return fail("a+h != 0 mod s");
    if (bg % pair.r() != 0) return fail("b+g != 0 mod r");
    if (bg % pair.s() != 0) return fail("b+g != 0 mod s");
    out.ok = true;
    out.d = ah / pair.s();
    out.e = bg / pair.r();
    if (pair.b() == 0 && pair.g() == 0 && pair.a() > 0 && pair.h() > 0) {
        out.exceptional = true;
        out.exceptional_branch = "b=g=0";
    } else if (pair.a() == 0 && pair.h() == 0 && pair.b() > 0 && pair.g() > 0) {
        out.exceptional = true;
        out.exceptional_branch = "a=h=0";
    }
    return out;
}

DescentStepResult descent_step(const MatrixPair& pair, DescentOp op, bool use_d) {
    VerifyOutcome v = verify_rules(pair);
    if (!v.ok) throw DomainError("descent_step: pair violates the rules: " + v.violation);
    const Int& t1 = use_d ? v.d : v.e;
    const Int& t2 = use_d ? v.e : v.d;
    DescentStepResult res;
    if (op == DescentOp::op22) {
        res.pair.ab = Mat2{0, 1, -1, t1} * pair.ab;
        res.pair.lm = pair.lm * Mat2{t2, 1, -1, 0};
    } else {
        res.pair.ab = Mat2{t2, -1, 1, 0} * pair.ab;
        res.pair.lm = pair.lm * Mat2{0, -1, 1, t1};
    }
    for (const Mat2* m : {&res.pair.ab, &res.pair.lm})
        if (m->m11 < 0 || m->m12 < 0 || m->m21 < 0 || m->m22 < 0) res.nonneg = false;
    return res;
}

Classification classify_descent(const MatrixPair& pair) {
    VerifyOutcome v0 = verify_rules(pair);
    if (!v0.ok) throw DomainError("classify_descent: " + v0.violation);
    Classification cls;
    if (v0.exceptional) {
        cls.exceptional = true;
        cls.exceptional_branch = v0.exceptional_branch;
        return cls;
    }
    MatrixPair cur = pair;
    std::optional<DescentOp> family;
    int steps = 0;
    // The second factorisation is the quarter-turn of the first, which swaps
    // the roles of d and e; report the labels that rebuild the input.
    auto finish = [&](Variant variant) {
        cls.k = steps + 1;
        cls.variant = variant;
        bool swap_roles = variant == Variant::second;
        cls.d = swap_roles ? v0.e : v0.d;
        cls.e = swap_roles ? v0.d : v0.e;
        return cls;
    };
    for (int guard = 0; guard < 100000; ++guard) {
        VerifyOutcome v = verify_rules(cur);
        if (!v.ok) throw InvariantError("descent broke the rules: " + v.violation);
        if (v.exceptional)
            throw InvariantError("descent reached an exceptional pair from a regular one");
        if (is_regular_endpoint_upper(cur)) {
            return finish((family && *family == DescentOp::op23) ? Variant::second
                                                                 : Variant::first);
        }
        if (is_regular_endpoint_lower(cur)) {
            return finish((family && *family == DescentOp::op22) ? Variant::first
                                                                 : Variant::second);
        }

        DescentOp op;
        bool doubled = false;
        if (v.d >= 2 && v.e >= 2) {
            op = cur.b() < cur.r() ? DescentOp::op22 : DescentOp::op23;
        } else {
            // d or e = 1: a single step decreases some entries and increases
            // others; the composite of two (in attitude-determined order)
            // decreases them all.
            doubled = true;
            if (v.e == 1)
                op = cur.b() <= cur.g() ? DescentOp::op22 : DescentOp::op23;
            else
                op = cur.h() <= cur.a() ? DescentOp::op22 : DescentOp::op23;
        }
        if (family && *family != op)
            throw InvariantError("descent changed attitude mid-way");
        family = op;

        MatrixPair prev = cur;
        cur = descent_step(cur, op, /*use_d=*/true).pair;
        ++steps;
        if (!doubled) {
            // In the main case a single step strictly decreases every entry.
            for (auto [b, a] : {std::pair{&prev.ab, &cur.ab}, std::pair{&prev.lm, &cur.lm}})
                if (a->m11 >= b->m11 || a->m12 >= b->m12 || a->m21 >= b->m21 ||
                    a->m22 >= b->m22)
                    throw InvariantError("descent step failed to decrease all entries");
        }
        if (doubled && !is_regular_endpoint_upper(cur) && !is_regular_endpoint_lower(cur)) {
            cur = descent_step(cur, op, /*use_d=*/true).pair;
            ++steps;
        }
    }
    throw InvariantError("descent did not terminate");
}

std::vector<EnumeratedPair> enumerate_pairs(const Int& bound) {
    if (bound < 1) throw DomainError("bound must be >= 1");
    std::vector<EnumeratedPair> out;
    auto factor_pairs = [&bound](const Int& n) {
        // All (u,v) with u*v == n and 0 <= u,v <= bound.
        std::vector<std::pair<Int, Int>> fp;
        if (n == 0) {
            for (Int t = 0; t <= bound; ++t) {
                fp.emplace_back(Int(0), t);
                if (t != 0) fp.emplace_back(t, Int(0));
            }
            return fp;
        }
        for (Int u = 1; u * u <= n; ++u) {
            if (n % u != 0) continue;
            Int w = n / u;
            if (u <= bound && w <= bound) {
                fp.emplace_back(u, w);
                if (u != w) fp.emplace_back(w, u);
            }
        }
        return fp;
    };
    for (Int r = 1; r <= bound; ++r) {
        for (Int s = 1; s <= bound; ++s) {
            Int n = r * s - 1;
            auto abs_ = factor_pairs(n);
            for (const auto& [a, b] : abs_) {
                for (const auto& [g, h] : abs_) {
                    MatrixPair p{{r, a, b, s}, {r, g, h, s}};
                    VerifyOutcome v = verify_rules(p);
                    if (!v.ok) continue;
                    out.push_back({p, classify_descent(p)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedPair& x, const EnumeratedPair& y) {
        auto key = [](const EnumeratedPair& ep) {
            return std::array<Int, 6>{ep.pair.r(), ep.pair.s(), ep.pair.a(),
                                      ep.pair.b(), ep.pair.g(), ep.pair.h()};
        };
        return key(x) < key(y);
    });
    return out;
}

}  // namespace diptych
