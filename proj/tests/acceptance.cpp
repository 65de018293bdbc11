// Acceptance suite: one line per criterion, exit code = number of failures.
// Criterion 7 drives the installed CLI through HEARTGLUE_BIN.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sys/wait.h>

#include "heartglue/commands.hpp"
#include "heartglue/model.hpp"

using namespace heartglue;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::vector<Perversity> bijection_family() {
    std::vector<Perversity> ps = enumerate_perversities(-4, 4, -4, 4);
    ps.push_back(Perversity::zero());
    ps.push_back(Perversity::identity());
    ps.push_back(Perversity::middle());
    for (Int k = -2; k <= 2; ++k) ps.push_back(Perversity::chi_upper(k));
    ps.push_back(Perversity::pos_inf());
    ps.push_back(Perversity::neg_inf());
    return ps;
}

void criterion_1() {
    auto start = Clock::now();
    std::vector<Perversity> ps = bijection_family();
    std::vector<UpperSet2D> direct, op;
    direct.reserve(ps.size());
    op.reserve(ps.size());
    bool ok = true;
    std::string detail;
    for (const Perversity& p : ps) {
        direct.push_back(to_upperset(p));
        op.push_back(to_upperset_op(p));
        if (!(to_perversity(op.back()) == p)) {
            ok = false;
            detail = "opposite-complement round trip broke";
        }
        if (!(graph_inverse(direct.back()) == p)) {
            ok = false;
            detail = "graph round trip broke";
        }
        if (!(to_upperset(act_plus(p, 1)) == direct.back().act(Translation::northeast, 1))) {
            ok = false;
            detail = "northeast equivariance broke";
        }
    }
    for (size_t i = 0; i < ps.size() && ok; ++i)
        for (size_t j = 0; j < ps.size(); ++j) {
            Cmp c = compare(ps[i], ps[j]);
            bool le = c == Cmp::less || c == Cmp::equal;
            if (le != includes(direct[i], direct[j])) {
                ok = false;
                detail = "order reversal broke at pair " + std::to_string(i) + "," + std::to_string(j);
                break;
            }
        }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 5.0) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s";
    }
    report(1, "bijection suite round-trips, order reversal, equivariance", ok,
           detail.empty() ? std::to_string(ps.size()) + " perversities, " + std::to_string(secs) + "s"
                          : detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    std::vector<Perversity> ps = bijection_family();
    for (const Perversity& p : ps) {
        UpperSet2D graph = kinky_graph(p);
        if (!graph.is_kinky()) {
            ok = false;
            detail = "a perversity graph is not kinky";
            break;
        }
        if (!(phi_image(graph) == to_upperset(p))) {
            ok = false;
            detail = "shear of the graph differs from the direct image";
            break;
        }
        if (!(phi_preimage(phi_image(graph)) == graph)) {
            ok = false;
            detail = "shear round trip broke";
            break;
        }
        if (p.is_finite() && !(graph_inverse(phi_image(graph)) == p)) {
            ok = false;
            detail = "graph chain does not recover the perversity";
            break;
        }
    }
    // surjectivity onto proper upper sets, over enumerated window staircases
    if (ok) {
        std::vector<Int> values;
        auto rec = [&](auto&& self, Int col) -> void {
            if (!ok) return;
            if (col > 3) {
                StepFunction core{-3, values, {1, 0}, {1, 0}};
                UpperSet2D u = UpperSet2D::from_boundary(
                    {Boundary::Form::staircase, 0, false, false, core});
                UpperSet2D k = phi_preimage(u);
                if (!k.is_kinky() || !(phi_image(k) == u)) {
                    ok = false;
                    detail = "a window staircase is not hit by the shear";
                }
                return;
            }
            Int from = values.empty() ? -3 : -3;
            Int to = values.empty() ? 3 : values.back();
            for (Int v = to; v >= from; --v) {
                values.push_back(v);
                self(self, col + 1);
                values.pop_back();
            }
        };
        rec(rec, -3);
    }
    // cone characterizations by membership sampling
    if (ok) {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 40 && ok; ++trial) {
            const Perversity& p = ps[rng() % ps.size()];
            UpperSet2D u = to_upperset(p), k = kinky_graph(p);
            for (Int n = -8; n <= 8 && ok; ++n)
                for (Int m = -8; m <= 8; ++m) {
                    if (u.contains(n, m) && !(u.contains(n + 1, m) && u.contains(n, m + 1))) {
                        ok = false;
                        detail = "upper cone violated";
                        break;
                    }
                    if (k.contains(n, m) && !(k.contains(n + 1, m) && k.contains(n - 1, m + 1))) {
                        ok = false;
                        detail = "kinky cone violated";
                        break;
                    }
                }
        }
    }
    report(2, "kinky chain: graphs, shear, cones", ok, detail);
}

void criterion_3() {
    ZSetMap ba = ZSetMap::compose(ZSetMap::beta(), ZSetMap::alpha());
    ZSetMap eb = ZSetMap::compose(ZSetMap::exchange(ZToset::integers(), ZToset::integers()),
                                  ZSetMap::beta());
    bool ok = true;
    for (Int n = -10; n <= 10 && ok; ++n)
        for (Int m = -10; m <= 10; ++m)
            if (!(ba.apply(elem(n, m)) == eb.apply(elem(n, m)))) {
                ok = false;
                break;
            }
    report(3, "commuting square of the shear and the exchange", ok);
}

void criterion_4() {
    std::mt19937_64 rng(4242);
    std::vector<Perversity> ps = enumerate_perversities(-1, 1, -1, 1);
    ps.push_back(Perversity::zero());
    ps.push_back(Perversity::middle());
    ps.push_back(Perversity::identity());
    for (Int k = -1; k <= 1; ++k) ps.push_back(Perversity::chi_upper(k));
    std::vector<Perversity> strict_ps;
    for (const Perversity& p : ps)
        if (p.strict()) strict_ps.push_back(p);

    bool ok = true;
    std::string detail;
    std::uniform_int_distribution<Int> base(-3, 0), width(1, 4), bit(0, 1);
    int oracles = 0;
    for (int trial = 0; trial < 1200 && ok; ++trial, ++oracles) {
        Int w_lo = base(rng), w_hi = w_lo + width(rng);
        auto table = std::make_shared<TableOracle>(w_lo, w_hi, bit(rng) == 0);
        for (Int phi = w_lo; phi <= w_hi; ++phi)
            for (Int psi = w_lo; psi <= w_hi; ++psi)
                for (Int n = 1; n <= 4; ++n)
                    if (bit(rng)) table->set(phi, psi, n, bit(rng) == 0);
        SliceSystem s{z_lex_zhat(), table};
        HeartWindow w{w_lo, w_hi, 4};
        ImplicationReport r = implication_check(s, w);
        if (!r.gluable_implies_grading) {
            ok = false;
            detail = "gluable => grading failed";
            break;
        }
        if (!r.grading_implies_perverse) {
            ok = false;
            detail = "grading => perverse failed";
            break;
        }
        std::vector<Elem> window;
        for (Int n = -2; n <= 2; ++n)
            for (Int wt = w_lo; wt <= w_hi; ++wt) window.push_back(elem(n, wt));
        if (r.grading.holds)
            for (const Perversity& p : ps)
                if (!is_f_compatible(s, ZSetMap::g(p), window).holds) {
                    ok = false;
                    detail = "grading oracle incompatible with a g_p";
                    break;
                }
        if (ok && r.perverse.holds)
            for (const Perversity& p : strict_ps)
                if (!is_f_compatible(s, ZSetMap::g(p), window).holds) {
                    ok = false;
                    detail = "perverse oracle incompatible with a strict g_p";
                    break;
                }
    }
    report(4, "implication ladder over random tables", ok,
           detail.empty() ? std::to_string(oracles) + " oracles" : detail);
}

void criterion_5() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;

    SliceSystem semi = semisimple_system(z_lex_zhat());
    std::vector<std::pair<ZSetMap, Cut>> tasks;
    tasks.push_back({ZSetMap::exchange(ZToset::integers(), ZToset::integers_trivial()),
                     Cut::first_coord(0)});
    tasks.push_back({ZSetMap::alpha(), Cut::at(elem(0, 0))});
    tasks.push_back({ZSetMap::gamma(Perversity::identity()), Cut::at(elem(0))});
    tasks.push_back({ZSetMap::gamma(Perversity::middle()), Cut::at(elem(0))});
    std::vector<BigradedObject> objects = enumerate_bigraded(4, -2, 2, -2, 2);
    size_t runs = 0;
    for (const auto& [f, cut] : tasks) {
        if (!ok) break;
        for (const BigradedObject& x : objects) {
            auto r = reorder_tower(hn_tower(x), f, semi, cut);
            ++runs;
            if (!(reassemble(r.tower) == x)) {
                ok = false;
                detail = "semisimple reassembly broke on " + x.str();
                break;
            }
            bool sorted = true;
            for (size_t i = 0; i < r.tower.factors.size(); ++i)
                sorted = sorted && (cut.in_upper(f.codomain(), f.apply(r.tower.factors[i].label)) ==
                                    (i < r.upper_count));
            if (!sorted) {
                ok = false;
                detail = "semisimple order broke on " + x.str();
                break;
            }
        }
    }

    // interval combinatorics against the matrix route, every interval pair
    for (Int n = 2; n <= 4 && ok; ++n)
        for (Int a = 1; a <= n && ok; ++a)
            for (Int b = a; b <= n; ++b)
                for (Int c = 1; c <= n; ++c)
                    for (Int d = c; d <= n; ++d)
                        if (interval_hom(a, b, c, d) != matrix_interval_hom(n, a, b, c, d) ||
                            interval_ext1(a, b, c, d) != matrix_interval_ext1(n, a, b, c, d)) {
                            ok = false;
                            detail = "interval rules disagree with the matrix oracle";
                            break;
                        }

    std::mt19937_64 rng(555);
    size_t quiver_runs = 0;
    for (Int vertices : {Int{2}, Int{3}}) {
        if (!ok) break;
        SliceSystem qs = quiver_system(vertices);
        for (int trial = 0; trial < 250 && ok; ++trial) {
            QuiverObject x = random_quiver_object(rng, vertices, 4, -2, 2);
            QuiverObject y = random_quiver_object(rng, vertices, 4, -2, 2);
            for (Int shift = -2; shift <= 2; ++shift) {
                Int fast = hom_dimension(x, y, shift);
                Int slow = 0;
                for (const auto& sx : x.summands)
                    for (const auto& sy : y.summands) {
                        Int degree = sy.shift + shift - sx.shift;
                        if (degree == 0)
                            slow += sx.mult * sy.mult *
                                    matrix_interval_hom(vertices, sx.a, sx.b, sy.a, sy.b);
                        else if (degree == 1)
                            slow += sx.mult * sy.mult *
                                    matrix_interval_ext1(vertices, sx.a, sx.b, sy.a, sy.b);
                    }
                if (fast != slow) {
                    ok = false;
                    detail = "hom dimensions disagree with the matrix oracle";
                    break;
                }
            }
            for (const auto& [f, cut] : tasks) {
                if (!ok) break;
                try {
                    auto r = reorder_tower(hn_tower(x), f, qs, cut);
                    ++quiver_runs;
                    if (!(reassemble(r.tower) == x)) {
                        ok = false;
                        detail = "quiver reassembly broke";
                    }
                    for (size_t i = 0; i < r.tower.factors.size() && ok; ++i)
                        if (cut.in_upper(f.codomain(), f.apply(r.tower.factors[i].label)) !=
                            (i < r.upper_count)) {
                            ok = false;
                            detail = "quiver order broke";
                        }
                } catch (const ReorderBlocked& b) {
                    if (qs.orthogonal(b.src, b.dst, 1)) {
                        ok = false;
                        detail = "refusal without an orthogonality failure";
                    }
                }
            }
        }
    }
    if (ok && quiver_runs < 400) {
        ok = false;
        detail = "too few quiver towers: " + std::to_string(quiver_runs);
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s";
    }
    report(5, "reordering matches the oracles in both models", ok,
           detail.empty() ? std::to_string(runs) + " + " + std::to_string(quiver_runs) + " towers, " +
                                std::to_string(secs) + "s"
                          : detail);
}

void criterion_6() {
    SliceSystem s{z_lex_zhat(), std::make_shared<KoszulOracle>()};
    std::vector<Elem> window = s.index.window(-3, 3);
    std::vector<SupportObject> samples;
    for (const BigradedObject& x : enumerate_bigraded(3, -1, 1, -1, 1))
        if (!x.is_zero()) samples.push_back(x.support());

    bool ok = true;
    std::string detail;
    for (const Perversity& p :
         {Perversity::identity(), Perversity::middle(), Perversity::zero(), Perversity::chi_upper(0)}) {
        ZSetMap gp = ZSetMap::g(p);
        ZSetMap pi1 = ZSetMap::projection_first(z_lex_zhat());
        auto r = functoriality_check(s, gp, pi1, window, samples);
        if (!(r.f_compatible && r.g_compatible_after_f && r.composite_compatible && r.supports_agree)) {
            ok = false;
            detail = "projection after g_p";
            break;
        }
        ZSetMap gamma = ZSetMap::gamma(p);
        for (const SupportObject& x : samples)
            if (!(pushforward_support(s, ZSetMap::compose(pi1, gp), x) ==
                  pushforward_support(s, gamma, x))) {
                ok = false;
                detail = "composite differs from the collapse map";
                break;
            }
        if (!ok) break;
    }

    std::mt19937_64 rng(66);
    std::uniform_int_distribution<Int> shift(-2, 2), pick(0, 3);
    std::vector<Perversity> weights = enumerate_perversities(-2, 2, -2, 2);
    int pairs = 0;
    for (int trial = 0; trial < 50 && ok; ++trial, ++pairs) {
        auto random_monotone = [&]() {
            ZSetMap m = ZSetMap::translation(z_lex_zhat(), shift(rng));
            if (pick(rng) != 0)
                m = ZSetMap::compose(ZSetMap::weight_remap(weights[rng() % weights.size()]), m);
            return m;
        };
        ZSetMap f = random_monotone(), g = random_monotone();
        auto r = functoriality_check(s, f, g, window, samples);
        if (!(r.f_compatible && r.g_compatible_after_f && r.composite_compatible && r.supports_agree)) {
            ok = false;
            detail = "random monotone pair " + std::to_string(trial);
        }
    }
    report(6, "pushforward composes functorially", ok,
           detail.empty() ? std::to_string(pairs) + " random monotone pairs" : detail);
}

void criterion_7() {
    const char* bin = std::getenv("HEARTGLUE_BIN");
    if (!bin) {
        report(7, "scenario demos", false, "HEARTGLUE_BIN is not set");
        return;
    }
    bool ok = true;
    std::string detail;
    for (const char* name : {"koszul", "motives", "coherent", "torsion-tilt", "bbd-gluing"}) {
        std::string cmd = std::string("\"") + bin + "\" demo " + name + " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        if (WEXITSTATUS(rc) != 0) {
            ok = false;
            detail = std::string("demo ") + name + " exited " + std::to_string(WEXITSTATUS(rc));
            break;
        }
    }
    report(7, "scenario demos all exit 0", ok, detail);
}

void criterion_8() {
    SliceSystem s{z_lex_zhat(), std::make_shared<KoszulOracle>()};
    HeartWindow hw{-3, 3, 6};
    std::vector<Perversity> ps = enumerate_perversities(-2, 2, -2, 2);
    ps.push_back(Perversity::pos_inf());
    ps.push_back(Perversity::neg_inf());
    std::vector<TStructureDescriptor> ds;
    for (const Perversity& p : ps) ds.push_back(psi(s, p, hw).descriptor);

    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < ps.size() && ok; ++i) {
        if (ps[i].is_finite()) {
            TStructureDescriptor shifted = psi(s, act_plus(ps[i], 1), hw).descriptor;
            for (Int n = -4; n <= 4 && ok; ++n)
                for (Int w = -4; w <= 4; ++w)
                    if (shifted.in_upper(n, w) != ds[i].in_upper(n + 1, w)) {
                        ok = false;
                        detail = "shift equivariance broke";
                        break;
                    }
        }
        for (size_t j = 0; j < ps.size() && ok; ++j) {
            Cmp c = compare(ps[i], ps[j]);
            if (c != Cmp::less && c != Cmp::equal) continue;
            for (Int n = -4; n <= 4 && ok; ++n)
                for (Int w = -4; w <= 4; ++w)
                    if (ds[i].in_upper(n, w) && !ds[j].in_upper(n, w)) {
                        ok = false;
                        detail = "monotonicity broke";
                        break;
                    }
        }
    }
    report(8, "psi is monotone and shift-equivariant", ok,
           detail.empty() ? std::to_string(ps.size()) + " perversities" : detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0)
        std::cout << "acceptance: all criteria hold\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return failures;
}
