#pragma once

#include <optional>

#include "heartglue/staircase.hpp"

namespace heartglue {

enum class Cmp { equal, less, greater, incomparable };

/// A perversity function p: Z -> Z, nondecreasing with unit steps
/// (p(n) <= p(n+1) <= p(n)+1), encoded with eventually-periodic tails,
/// or one of the two constant infinite functions.
class Perversity {
public:
    enum class Inf { none, plus, minus };

    static Perversity finite(StepFunction f) {
        f.check_well_formed();
        if (f.left.shift < 0 || f.left.shift > f.left.period ||
            f.right.shift < 0 || f.right.shift > f.right.period)
            throw std::invalid_argument("perversity: tail shift must satisfy 0 <= S <= T");
        auto [lo, hi] = f.probe_window();
        for (Int n = lo; n < hi; ++n) {
            Int step = f.eval(n + 1) - f.eval(n);
            if (step < 0 || step > 1)
                throw std::invalid_argument("perversity: step out of {0,1} at n=" + std::to_string(n));
        }
        Perversity p;
        p.fn_ = normalized(f);
        return p;
    }

    static Perversity constant(Int c) { return finite({0, {c}, {1, 0}, {1, 0}}); }
    static Perversity zero() { return constant(0); }
    static Perversity identity() { return finite({0, {0}, {1, 1}, {1, 1}}); }
    static Perversity middle() { return finite({0, {0, 0}, {2, 1}, {2, 1}}); }
    /// Characteristic function of [k, +inf).
    static Perversity chi_upper(Int k) { return finite({k - 1, {0, 1}, {1, 0}, {1, 0}}); }

    static Perversity pos_inf() {
        Perversity p;
        p.inf_ = Inf::plus;
        return p;
    }
    static Perversity neg_inf() {
        Perversity p;
        p.inf_ = Inf::minus;
        return p;
    }

    bool is_finite() const { return inf_ == Inf::none; }
    Inf infinity() const { return inf_; }

    Int operator()(Int n) const {
        require_finite();
        return fn_.eval(n);
    }

    Extended eval_extended(Int n) const {
        if (inf_ == Inf::plus) return Extended::pos_inf();
        if (inf_ == Inf::minus) return Extended::neg_inf();
        return Extended::of(fn_.eval(n));
    }

    const StepFunction& steps() const {
        require_finite();
        return fn_;
    }

    /// p(n+2) <= p(n)+1 everywhere; a finite probe is exact by periodicity.
    bool strict() const {
        require_finite();
        auto [lo, hi] = fn_.probe_window();
        for (Int n = lo; n + 2 <= hi; ++n)
            if (fn_.eval(n + 2) > fn_.eval(n) + 1) return false;
        return true;
    }

    friend Cmp compare(const Perversity& p, const Perversity& q) {
        if (!p.is_finite() || !q.is_finite()) {
            if (p.inf_ == q.inf_) return Cmp::equal;
            if (p.inf_ == Inf::minus || q.inf_ == Inf::plus) return Cmp::less;
            return Cmp::greater;
        }
        bool le = pointwise_le(p.fn_, q.fn_);
        bool ge = pointwise_le(q.fn_, p.fn_);
        if (le && ge) return Cmp::equal;
        if (le) return Cmp::less;
        if (ge) return Cmp::greater;
        return Cmp::incomparable;
    }

    friend bool operator==(const Perversity& p, const Perversity& q) {
        return compare(p, q) == Cmp::equal;
    }

private:
    void require_finite() const {
        if (inf_ != Inf::none) throw std::domain_error("perversity: operation needs a finite perversity");
    }

    StepFunction fn_{0, {0}, {1, 0}, {1, 0}};
    Inf inf_ = Inf::none;
};

/// n |-> p(n+k); infinite perversities are fixed points.
inline Perversity act_dot(const Perversity& p, Int k) {
    if (!p.is_finite()) return p;
    StepFunction f = p.steps();
    f.anchor -= k;
    return Perversity::finite(f);
}

/// n |-> p(n)+k; infinite perversities are fixed points.
inline Perversity act_plus(const Perversity& p, Int k) {
    if (!p.is_finite()) return p;
    StepFunction f = p.steps();
    for (Int& v : f.values) v += k;
    return Perversity::finite(f);
}

/// The boundary n |-> p(n) - n of the upper graph of p; nonincreasing with
/// steps in {-1, 0}.
inline StepFunction graph_boundary(const Perversity& p) {
    StepFunction f = p.steps();
    for (size_t i = 0; i < f.values.size(); ++i)
        f.values[i] -= f.anchor + static_cast<Int>(i);
    f.left.shift -= f.left.period;
    f.right.shift -= f.right.period;
    return normalized(f);
}

/// Inverse of graph_boundary; rejects anything that is not nonincreasing with
/// steps in {-1, 0}.
inline Perversity perversity_from_graph_boundary(StepFunction f) {
    f.check_well_formed();
    auto [lo, hi] = f.probe_window();
    for (Int n = lo; n < hi; ++n) {
        Int step = f.eval(n + 1) - f.eval(n);
        if (step < -1 || step > 0)
            throw std::invalid_argument("graph boundary: step out of {-1,0} at n=" + std::to_string(n));
    }
    for (size_t i = 0; i < f.values.size(); ++i)
        f.values[i] += f.anchor + static_cast<Int>(i);
    f.left.shift += f.left.period;
    f.right.shift += f.right.period;
    return Perversity::finite(f);
}

/// All step-{0,1} integer sequences on [n_lo, n_hi] with values in
/// [v_lo, v_hi], each extended by constant tails.
inline std::vector<Perversity> enumerate_perversities(Int n_lo, Int n_hi, Int v_lo, Int v_hi) {
    std::vector<Perversity> out;
    if (n_lo > n_hi || v_lo > v_hi) return out;
    std::vector<Int> vals;
    auto rec = [&](auto&& self, Int n) -> void {
        if (n > n_hi) {
            out.push_back(Perversity::finite({n_lo, vals, {1, 0}, {1, 0}}));
            return;
        }
        Int from = vals.empty() ? v_lo : vals.back();
        Int to = vals.empty() ? v_hi : std::min(v_hi, vals.back() + 1);
        for (Int v = from; v <= to; ++v) {
            vals.push_back(v);
            self(self, n + 1);
            vals.pop_back();
        }
    };
    rec(rec, n_lo);
    return out;
}

inline const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::equal: return "EQ";
        case Cmp::less: return "LE";
        case Cmp::greater: return "GE";
        default: return "INCOMPARABLE";
    }
}

}  // namespace heartglue
