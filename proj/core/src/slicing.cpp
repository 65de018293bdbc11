#include "heartglue/slicing.hpp"

#include <algorithm>

namespace heartglue {

CheckResult is_f_compatible(const SliceSystem& s, const ZSetMap& f, const std::vector<Elem>& window) {
    if (!(f.domain() == s.index))
        throw std::invalid_argument("is_f_compatible: map domain differs from the slicing index");
    const ZToset& jp = f.codomain();
    for (const Elem& phi : window) {
        if (!f.defined_at(phi)) continue;
        for (const Elem& psi : window) {
            if (!f.defined_at(psi)) continue;
            if (!s.index.le(phi, psi)) continue;
            if (jp.compare(f.apply(phi), f.apply(psi)) != Ordering::gt) continue;
            for (Int n : {Int{0}, Int{1}})
                if (!s.orthogonal(phi, psi, n)) return {false, CompatWitness{phi, psi, n}};
        }
    }
    return {};
}

namespace {

void require_heart_index(const SliceSystem& s) {
    if (!(s.index == z_lex_zhat()))
        throw std::invalid_argument("heart predicate: slicing must be indexed by Z x_lex Z^");
}

template <class Cond>
CheckResult heart_scan(const SliceSystem& s, const HeartWindow& w, Cond&& wanted) {
    require_heart_index(s);
    for (Int phi = w.w_lo; phi <= w.w_hi; ++phi)
        for (Int psi = w.w_lo; psi <= w.w_hi; ++psi)
            for (Int n = -w.n_max; n <= w.n_max; ++n) {
                if (!wanted(phi, psi, n)) continue;
                if (!s.orthogonal(elem(0, phi), elem(0, psi), n))
                    return {false, CompatWitness{elem(0, phi), elem(0, psi), n}};
            }
    return {};
}

}  // namespace

CheckResult is_gluable(const SliceSystem& s, const HeartWindow& w) {
    CheckResult direct =
        heart_scan(s, w, [](Int phi, Int psi, Int n) { return phi > psi && n > 0; });
    // second route: degrees 0..n_max-1 make the exchange conditions exhaust
    // exactly the shifts 1..n_max
    std::vector<Elem> window;
    for (Int d = 0; d < w.n_max; ++d)
        for (Int wt = w.w_lo; wt <= w.w_hi; ++wt) window.push_back(elem(d, wt));
    ZSetMap e = ZSetMap::exchange(ZToset::integers(), ZToset::integers_trivial());
    CheckResult exchanged = is_f_compatible(s, e, window);
    if (direct.holds != exchanged.holds)
        throw std::logic_error("is_gluable: the two evaluation routes disagree");
    return direct;
}

CheckResult is_grading(const SliceSystem& s, const HeartWindow& w) {
    return heart_scan(s, w, [](Int phi, Int psi, Int n) {
        return phi > psi + n || (phi == psi + n && n >= 2);
    });
}

CheckResult is_perverse(const SliceSystem& s, const HeartWindow& w) {
    return heart_scan(s, w, [](Int phi, Int psi, Int n) { return phi > psi + n; });
}

ImplicationReport implication_check(const SliceSystem& s, const HeartWindow& w) {
    ImplicationReport r;
    r.gluable = is_gluable(s, w);
    r.grading = is_grading(s, w);
    r.perverse = is_perverse(s, w);
    r.gluable_implies_grading = !r.gluable.holds || r.grading.holds;
    r.grading_implies_perverse = !r.grading.holds || r.perverse.holds;
    return r;
}

SupportObject SupportObject::of(const ZToset& j, std::vector<std::pair<Elem, Int>> raw) {
    for (auto& [label, mult] : raw) {
        if (!j.contains(label))
            throw std::domain_error("support: label " + label.str() + " is not in " + j.str());
        if (mult <= 0) throw std::invalid_argument("support: multiplicities must be positive");
    }
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        return j.compare(a.first, b.first) == Ordering::gt;
    });
    SupportObject out;
    for (auto& [label, mult] : raw) {
        if (!out.entries.empty() && out.entries.back().first == label)
            out.entries.back().second += mult;
        else
            out.entries.emplace_back(label, mult);
    }
    return out;
}

std::string SupportObject::str() const {
    std::string s = "{";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ", ";
        s += entries[i].first.str() + " x" + std::to_string(entries[i].second);
    }
    return s + "}";
}

SupportObject pushforward_support(const SliceSystem& s, const ZSetMap& f, const SupportObject& x) {
    std::vector<Elem> labels;
    for (const auto& [label, mult] : x.entries) labels.push_back(label);
    if (auto c = is_f_compatible(s, f, labels); !c.holds) throw PushforwardError(*c.witness);
    std::vector<std::pair<Elem, Int>> pushed;
    for (const auto& [label, mult] : x.entries) pushed.emplace_back(f.apply(label), mult);
    return SupportObject::of(f.codomain(), std::move(pushed));
}

namespace {

class PushforwardOracle : public Oracle {
public:
    PushforwardOracle(SliceSystem base, const ZSetMap& f, const std::vector<Elem>& window)
        : base_(std::move(base)) {
        for (const Elem& phi : window)
            if (f.defined_at(phi)) fibers_[f.apply(phi)].push_back(phi);
    }

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        auto i = fibers_.find(src), j = fibers_.find(dst);
        if (i == fibers_.end() || j == fibers_.end()) return true;  // empty fiber in the window
        for (const Elem& phi : i->second)
            for (const Elem& psi : j->second)
                if (!base_.orthogonal(phi, psi, 0)) return false;
        return true;
    }

private:
    SliceSystem base_;
    std::map<Elem, std::vector<Elem>> fibers_;
};

}  // namespace

SliceSystem system_pushforward(const SliceSystem& s, const ZSetMap& f, const std::vector<Elem>& window) {
    return {f.codomain(), std::make_shared<PushforwardOracle>(s, f, window)};
}

FunctorialityReport functoriality_check(const SliceSystem& s, const ZSetMap& f, const ZSetMap& g,
                                        const std::vector<Elem>& window,
                                        const std::vector<SupportObject>& samples) {
    FunctorialityReport r;
    r.f_compatible = is_f_compatible(s, f, window).holds;
    SliceSystem pushed = system_pushforward(s, f, window);
    std::vector<Elem> pushed_window;
    {
        std::set<Elem> seen;
        for (const Elem& x : window)
            if (f.defined_at(x) && seen.insert(f.apply(x)).second)
                pushed_window.push_back(f.apply(x));
    }
    r.g_compatible_after_f = is_f_compatible(pushed, g, pushed_window).holds;
    ZSetMap gf = ZSetMap::compose(g, f);
    r.composite_compatible = is_f_compatible(s, gf, window).holds;
    for (const SupportObject& x : samples) {
        SupportObject via_composite = pushforward_support(s, gf, x);
        SupportObject via_stages = pushforward_support(pushed, g, pushforward_support(s, f, x));
        if (!(via_composite == via_stages)) {
            r.supports_agree = false;
            r.mismatch = x;
            break;
        }
    }
    return r;
}

bool perverse_heart_membership(const Perversity& p, const SupportObject& x) {
    if (!p.is_finite())
        throw std::domain_error("perverse heart membership needs a finite perversity");
    for (const auto& [label, mult] : x.entries) {
        if (label.size != 2)
            throw std::domain_error("perverse heart membership expects (degree, weight) labels");
        if (p(label[1]) != -label[0]) return false;
    }
    return true;
}

PsiResult psi(const SliceSystem& s, const Perversity& p, const HeartWindow& w) {
    require_heart_index(s);
    PsiResult r;
    r.descriptor = TStructureDescriptor{p};
    if (is_grading(s, w).holds) {
        r.grading_checked = true;
        return r;
    }
    if (is_perverse(s, w).holds) {
        if (!p.is_finite() || p.strict()) {
            r.strict_fallback = true;
            return r;
        }
        throw PsiError("psi: slicing is only perverse on the window and the perversity is not strict");
    }
    throw PsiError("psi: slicing is neither grading nor perverse on the window");
}

PsiResult psi(const SliceSystem& s, const UpperSet2D& u, const HeartWindow& w) {
    return psi(s, to_perversity(u), w);
}

}  // namespace heartglue
