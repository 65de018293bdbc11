#include "heartglue/commands.hpp"

#include <sstream>

#include <json.hpp>

namespace heartglue {

using nlohmann::json;

namespace {

std::string describe_witness(const CompatWitness& w) {
    return "phi=" + w.phi.str() + " psi=" + w.psi.str() + " shift=" + std::to_string(w.shift);
}

std::string check_line(const std::string& name, const CheckResult& r) {
    std::string s = name + ": " + (r.holds ? "holds" : "fails");
    if (!r.holds && r.witness) s += "  [witness " + describe_witness(*r.witness) + "]";
    return s + "\n";
}

json perversity_payload(const Perversity& p) {
    return json::parse(perversity_to_json(p)).at("data");
}

}  // namespace

CmdResult cmd_perv_enumerate(Int n_lo, Int n_hi, Int v_lo, Int v_hi) {
    std::vector<Perversity> all = enumerate_perversities(n_lo, n_hi, v_lo, v_hi);
    json items = json::array();
    for (const Perversity& p : all) items.push_back(perversity_payload(p));
    json doc{{"version", 1},
             {"kind", "perversity-list"},
             {"data", {{"count", all.size()}, {"items", items}}}};
    return {0, doc.dump(2) + "\n"};
}

CmdResult cmd_perv_to_upperset(const Perversity& p, const std::string& route) {
    if (route == "direct") return {0, upperset_to_json(to_upperset(p))};
    if (route == "op") return {0, upperset_to_json(to_upperset_op(p))};
    return {2, "unknown route '" + route + "' (expected direct or op)\n"};
}

CmdResult cmd_perv_from_upperset(const UpperSet2D& u, const std::string& route) {
    if (route == "op") return {0, perversity_to_json(to_perversity(u))};
    if (route == "graph") return {0, perversity_to_json(graph_inverse(u))};
    return {2, "unknown route '" + route + "' (expected op or graph)\n"};
}

CmdResult cmd_perv_act(const Perversity& p, const std::string& op, Int k) {
    if (op == "dot") return {0, perversity_to_json(act_dot(p, k))};
    if (op == "plus") return {0, perversity_to_json(act_plus(p, k))};
    return {2, "unknown action '" + op + "' (expected dot or plus)\n"};
}

CmdResult cmd_perv_compare(const Perversity& p, const Perversity& q) {
    return {0, std::string(cmp_name(compare(p, q))) + "\n"};
}

CmdResult cmd_perv_is_strict(const Perversity& p) {
    if (!p.is_finite()) return {2, "is-strict needs a finite perversity\n"};
    bool s = p.strict();
    return {s ? 0 : 1, s ? "true\n" : "false\n"};
}

CmdResult cmd_check(const std::string& which, const Manifest& m) {
    SliceSystem s = system_of(m);
    HeartWindow w = m.window;
    // a table oracle is only defined on its declared labels
    if (auto table = std::dynamic_pointer_cast<const TableOracle>(s.oracle)) {
        w.w_lo = std::max(w.w_lo, table->w_lo());
        w.w_hi = std::min(w.w_hi, table->w_hi());
    }
    std::ostringstream out;
    out << "check " << which << "\n";
    out << "oracle: " << m.oracle.kind << "\n";
    out << "window: weights [" << w.w_lo << "," << w.w_hi << "], shifts [-" << w.n_max << ","
        << w.n_max << "]\n";

    if (which == "compatible") {
        if (!m.map) return {2, "check compatible needs a map in the manifest\n"};
        ZSetMap f = map_of(*m.map, s.index);
        CheckResult r = is_f_compatible(s, f, s.index.window(w.w_lo, w.w_hi));
        out << "map: " << m.map->name << "\n" << check_line("compatible", r);
        return {r.holds ? 0 : 1, out.str()};
    }
    if (which == "gluable" && !(s.index == z_lex_zhat())) {
        // towers indexed by another lex product are gluable when the
        // exchange of factors is compatible
        if (s.index.kind() != ZToset::Kind::lex_product)
            return {2, "check gluable needs a lex-product label space\n"};
        ZSetMap e = ZSetMap::exchange(s.index.left(), s.index.right());
        CheckResult r = is_f_compatible(s, e, s.index.window(w.w_lo, w.w_hi));
        out << check_line("gluable (exchange-compatible)", r);
        return {r.holds ? 0 : 1, out.str()};
    }
    if (which == "gluable" || which == "grading" || which == "perverse") {
        CheckResult r = which == "gluable"   ? is_gluable(s, w)
                        : which == "grading" ? is_grading(s, w)
                                             : is_perverse(s, w);
        out << check_line(which, r);
        return {r.holds ? 0 : 1, out.str()};
    }
    if (which == "implications") {
        ImplicationReport r = implication_check(s, w);
        out << check_line("gluable", r.gluable);
        out << check_line("grading", r.grading);
        out << check_line("perverse", r.perverse);
        out << "gluable => grading: " << (r.gluable_implies_grading ? "holds" : "VIOLATED") << "\n";
        out << "grading => perverse: " << (r.grading_implies_perverse ? "holds" : "VIOLATED") << "\n";
        bool ok = r.gluable_implies_grading && r.grading_implies_perverse;
        return {ok ? 0 : 1, out.str()};
    }
    return {2, "unknown check '" + which + "'\n"};
}

CmdResult cmd_heart(const Manifest& m, const Perversity& p, const std::vector<BigradedObject>& objects) {
    SliceSystem s = system_of(m);
    std::ostringstream out;
    PsiResult psi_result;
    try {
        psi_result = psi(s, p, m.window);
    } catch (const PsiError& e) {
        return {2, std::string(e.what()) + "\n"};
    }
    out << "heart membership"
        << (psi_result.strict_fallback ? " (perverse slicing, strict perversity)" : "") << "\n";
    bool all_in = true;
    for (const BigradedObject& x : objects) {
        out << "object " << x.str() << ": ";
        std::optional<Elem> offender;
        for (const auto& e : x.entries)
            if (!psi_result.descriptor.in_heart(e.degree, e.weight)) {
                offender = bigraded_label(e);
                break;
            }
        if (offender) {
            all_in = false;
            out << "out  [violating label " << offender->str() << "]\n";
        } else {
            out << "in\n";
        }
    }
    return {all_in ? 0 : 1, out.str()};
}

CmdResult cmd_push(const Manifest& m, const MapSpec& map, const SupportObject& support) {
    SliceSystem s = system_of(m);
    ZSetMap f = map_of(map, s.index);
    std::ostringstream out;
    try {
        SupportObject pushed = pushforward_support(s, f, support);
        out << "pushed support: " << pushed.str() << "\n" << support_to_json(pushed);
        return {0, out.str()};
    } catch (const PushforwardError& e) {
        out << "incompatible: " << describe_witness(e.witness) << "\n";
        return {1, out.str()};
    }
}

CmdResult cmd_plot(const UpperSet2D& u, const PlotOptions& opts) {
    Int width = opts.n_hi - opts.n_lo + 1, height = opts.m_hi - opts.m_lo + 1;
    if (width <= 0 || height <= 0) return {2, "plot: empty window\n"};
    if (width > 200 || height > 200) return {2, "plot: window larger than 200x200 refused\n"};
    if (opts.format == "ascii")
        return {0, ascii_staircase(u, opts.n_lo, opts.n_hi, opts.m_lo, opts.m_hi)};
    if (opts.format != "svg") return {2, "plot: unknown format '" + opts.format + "'\n"};
    std::ostringstream svg;
    const Int cell = 12, pad = 24;
    Int w_px = width * cell + 2 * pad, h_px = height * cell + 2 * pad;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_px << "\" height=\"" << h_px
        << "\">\n";
    svg << "  <rect width=\"" << w_px << "\" height=\"" << h_px << "\" fill=\"white\"/>\n";
    for (Int m = opts.m_hi; m >= opts.m_lo; --m)
        for (Int n = opts.n_lo; n <= opts.n_hi; ++n) {
            Int x = pad + (n - opts.n_lo) * cell;
            Int y = pad + (opts.m_hi - m) * cell;
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"" << (u.contains(n, m) ? "#444444" : "#eeeeee")
                << "\" stroke=\"#ffffff\"/>\n";
        }
    svg << "  <text x=\"" << pad << "\" y=\"" << (h_px - 6) << "\" font-size=\"10\">window ["
        << opts.n_lo << "," << opts.n_hi << "] x [" << opts.m_lo << "," << opts.m_hi
        << "], filled = member</text>\n";
    svg << "</svg>\n";
    return {0, svg.str()};
}

namespace {

CmdResult demo_koszul(const DemoOptions& opts) {
    std::ostringstream out;
    SliceSystem s{z_lex_zhat(), std::make_shared<KoszulOracle>()};
    CheckResult glue = is_gluable(s, opts.window);
    out << check_line("gluable", glue);
    PsiResult r = psi(s, Perversity::identity(), opts.window);
    bool diagonal = true;
    for (Int n = opts.window.w_lo; n <= opts.window.w_hi && diagonal; ++n)
        for (Int w = opts.window.w_lo; w <= opts.window.w_hi; ++w)
            if (r.descriptor.in_heart(n, w) != (w == -n)) {
                diagonal = false;
                break;
            }
    out << "heart of psi(identity) = diagonal {(-n, n)}: " << (diagonal ? "yes" : "NO") << "\n";
    bool ok = glue.holds && diagonal;
    out << (ok ? "demo koszul: pass\n" : "demo koszul: FAIL\n");
    return {ok ? 0 : 1, out.str()};
}

CmdResult demo_motives(const DemoOptions& opts) {
    std::ostringstream out;
    ZToset index = zhat_lex_z();
    std::vector<Elem> window = index.window(opts.window.w_lo, opts.window.w_hi);
    ZSetMap e = ZSetMap::exchange(ZToset::integers_trivial(), ZToset::integers());
    bool all_ok = true;
    for (bool vanishing : {true, false}) {
        SliceSystem s{index, std::make_shared<BeilinsonSouleOracle>(vanishing)};
        CheckResult glue = is_f_compatible(s, e, window);
        out << "standard vanishing " << (vanishing ? "on" : "off") << ": "
            << check_line("gluable (exchange-compatible)", glue);
        if (glue.holds != vanishing) all_ok = false;
        if (vanishing && glue.holds) {
            SliceSystem pushed = system_pushforward(s, e, window);
            CheckResult after = is_gluable(pushed, opts.window);
            out << "  " << check_line("exchanged slicing gluable", after);
            if (!after.holds) all_ok = false;
        }
    }
    out << "gluability tracks the vanishing flag: " << (all_ok ? "yes" : "NO") << "\n";
    out << (all_ok ? "demo motives: pass\n" : "demo motives: FAIL\n");
    return {all_ok ? 0 : 1, out.str()};
}

CmdResult demo_coherent(const DemoOptions& opts) {
    std::ostringstream out;
    SliceSystem s{z_lex_zhat(), std::make_shared<CoherentSupportOracle>(opts.dim)};
    ImplicationReport r = implication_check(s, opts.window);
    out << "support-codimension rule, dim = " << opts.dim << "\n";
    out << check_line("perverse", r.perverse);
    out << check_line("grading", r.grading);
    out << check_line("gluable", r.gluable);
    bool ok = r.perverse.holds && r.gluable_implies_grading && r.grading_implies_perverse;
    if (opts.dim >= 2 && r.grading.holds) ok = false;  // the diagonal shift-2 entry is live
    out << (ok ? "demo coherent: pass\n" : "demo coherent: FAIL\n");
    return {ok ? 0 : 1, out.str()};
}

CmdResult demo_torsion_tilt(const DemoOptions& opts) {
    std::ostringstream out;
    const Int k = opts.k;
    Perversity chi = Perversity::chi_upper(k);
    SliceSystem s = semisimple_system(z_lex_zhat());
    PsiResult r = psi(s, chi, opts.window);
    Int lo = opts.window.w_lo, hi = opts.window.w_hi;
    std::vector<BigradedObject> objects = enumerate_bigraded(2, -1, 1, lo, hi);
    size_t members = 0;
    bool agree = true;
    for (const BigradedObject& x : objects) {
        bool in_heart = true;
        for (const auto& e : x.entries)
            in_heart = in_heart && r.descriptor.in_heart(e.degree, e.weight);
        // tilt description: X[1] has its torsion-free part in degree 1 below
        // the cut and its torsion part in degree 0 at or above the cut
        BigradedObject shifted = x.shifted(1);
        bool tilt = true;
        for (const auto& e : shifted.entries) {
            bool fits = (e.degree == 0 && e.weight >= k) || (e.degree == 1 && e.weight < k);
            tilt = tilt && fits;
        }
        if (in_heart != tilt) agree = false;
        if (in_heart) ++members;
    }
    out << "cut k = " << k << ", objects scanned: " << objects.size() << ", heart members: "
        << members << "\n";
    out << "chi_[k,+inf) heart matches the torsion-pair tilt predicate: " << (agree ? "yes" : "NO")
        << "\n";
    out << (agree ? "demo torsion-tilt: pass\n" : "demo torsion-tilt: FAIL\n");
    return {agree ? 0 : 1, out.str()};
}

CmdResult demo_bbd_gluing(const DemoOptions& opts) {
    std::ostringstream out;
    ZToset index = ZToset::lex(ZToset::interval(0, 1), ZToset::integers());
    std::vector<Elem> window = index.window(opts.window.w_lo, opts.window.w_hi);
    ZSetMap e = ZSetMap::exchange(ZToset::interval(0, 1), ZToset::integers());
    bool all_ok = true;
    for (bool cross : {true, false}) {
        SliceSystem s{index, std::make_shared<SemiorthogonalPairOracle>(cross)};
        // the gluing hypothesis: Hom(heart_0, heart_1[n]) = 0 for all n <= 0
        bool hypothesis = true;
        for (Int n = -opts.window.n_max; n <= 0; ++n)
            if (!s.orthogonal(elem(0, 0), elem(1, 0), n)) hypothesis = false;
        CheckResult glue = is_f_compatible(s, e, window);
        out << "cross vanishing " << (cross ? "on" : "off") << ": hypothesis "
            << (hypothesis ? "holds" : "fails") << ", " << check_line("gluable", glue);
        if (glue.holds != hypothesis) all_ok = false;
    }
    out << "gluability is equivalent to the cross-vanishing hypothesis: "
        << (all_ok ? "yes" : "NO") << "\n";
    out << (all_ok ? "demo bbd-gluing: pass\n" : "demo bbd-gluing: FAIL\n");
    return {all_ok ? 0 : 1, out.str()};
}

}  // namespace

CmdResult cmd_demo(const std::string& name, const DemoOptions& opts) {
    if (name == "koszul") return demo_koszul(opts);
    if (name == "motives") return demo_motives(opts);
    if (name == "coherent") return demo_coherent(opts);
    if (name == "torsion-tilt") return demo_torsion_tilt(opts);
    if (name == "bbd-gluing") return demo_bbd_gluing(opts);
    return {2, "unknown demo '" + name + "'\n"};
}

}  // namespace heartglue
