#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace heartglue {

using Int = std::int64_t;

/// An element of Z extended by -inf/+inf.
struct Extended {
    enum Kind : int { minus_inf = -1, finite = 0, plus_inf = 1 };
    Kind kind = finite;
    Int value = 0;

    static Extended of(Int v) { return {finite, v}; }
    static Extended neg_inf() { return {minus_inf, 0}; }
    static Extended pos_inf() { return {plus_inf, 0}; }

    bool is_finite() const { return kind == finite; }

    friend bool operator==(const Extended& a, const Extended& b) {
        return a.kind == b.kind && (a.kind != finite || a.value == b.value);
    }
    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == finite && a.value < b.value;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
    friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
    friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

    std::string str() const {
        if (kind == minus_inf) return "-inf";
        if (kind == plus_inf) return "+inf";
        return std::to_string(value);
    }
};

/// One eventually-periodic end of a step function: f(n -/+ period) = f(n) -/+ shift.
struct Tail {
    Int period = 1;
    Int shift = 0;

    friend bool operator==(const Tail&, const Tail&) = default;
};

inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// A total function Z -> Z given by explicit values on [anchor, anchor+len-1]
/// and periodic tails on both sides.  The left tail means
/// f(n - left.period) = f(n) - left.shift for every n on the left of the core,
/// the right tail means f(n + right.period) = f(n) + right.shift on the right.
/// Values outside the core reduce into the core by whole periods, so the
/// explicit list must span at least max(left.period, right.period) points.
struct StepFunction {
    Int anchor = 0;
    std::vector<Int> values;
    Tail left, right;

    Int last() const { return anchor + static_cast<Int>(values.size()) - 1; }

    void check_well_formed() const {
        if (values.empty()) throw std::invalid_argument("step function: empty value list");
        if (left.period < 1 || right.period < 1)
            throw std::invalid_argument("step function: tail period must be >= 1");
        Int len = static_cast<Int>(values.size());
        if (len < left.period || len < right.period)
            throw std::invalid_argument("step function: core shorter than a tail period");
    }

    Int eval(Int n) const {
        if (n < anchor) {
            Int k = ceil_div(anchor - n, left.period);
            return values[static_cast<size_t>(n + k * left.period - anchor)] - k * left.shift;
        }
        if (n > last()) {
            Int k = ceil_div(n - last(), right.period);
            return values[static_cast<size_t>(n - k * right.period - anchor)] + k * right.shift;
        }
        return values[static_cast<size_t>(n - anchor)];
    }

    /// Window on which every step pattern of the function occurs at least once.
    std::pair<Int, Int> probe_window() const {
        return {anchor - 2 * left.period - 2, last() + 2 * right.period + 2};
    }
};

/// Decides f(n) <= g(n) for every n.  The probe window covers all transient
/// behaviour; beyond it the difference changes by a fixed amount per lcm of
/// the periods, which reduces the two infinite ends to slope comparisons.
inline bool pointwise_le(const StepFunction& f, const StepFunction& g) {
    // left end: going left by L, f drops by L*ls(f); need drop(f) >= drop(g),
    // i.e. f.left.shift/f.left.period >= g.left.shift/g.left.period.
    if (f.left.shift * g.left.period < g.left.shift * f.left.period) return false;
    // right end: going right by L, f grows by L*rs(f); need growth(f) <= growth(g).
    if (f.right.shift * g.right.period > g.right.shift * f.right.period) return false;
    Int ll = std::lcm(f.left.period, g.left.period);
    Int lr = std::lcm(f.right.period, g.right.period);
    Int lo = std::min(f.anchor, g.anchor) - 2 * ll - 2;
    Int hi = std::max(f.last(), g.last()) + 2 * lr + 2;
    for (Int n = lo; n <= hi; ++n)
        if (f.eval(n) > g.eval(n)) return false;
    return true;
}

inline bool pointwise_eq(const StepFunction& f, const StepFunction& g) {
    return pointwise_le(f, g) && pointwise_le(g, f);
}

inline bool same_function(const StepFunction& f, const StepFunction& g) {
    if (!(f.left == g.left) || !(f.right == g.right)) return false;
    Int lo = std::min(f.probe_window().first, g.probe_window().first);
    Int hi = std::max(f.probe_window().second, g.probe_window().second);
    for (Int n = lo; n <= hi; ++n)
        if (f.eval(n) != g.eval(n)) return false;
    return true;
}

/// Drops explicit values the tails already determine, then slides the window
/// toward zero while the function stays the same, so equal functions with
/// equal tails share one representation.
inline StepFunction normalized(StepFunction f) {
    f.check_well_formed();
    size_t min_len = static_cast<size_t>(std::max(f.left.period, f.right.period));
    while (f.values.size() > min_len) {
        Int back = f.values.back();
        StepFunction trimmed = f;
        trimmed.values.pop_back();
        if (trimmed.eval(f.last()) != back) break;
        f = std::move(trimmed);
    }
    while (f.values.size() > min_len) {
        Int front = f.values.front();
        StepFunction trimmed = f;
        trimmed.values.erase(trimmed.values.begin());
        trimmed.anchor += 1;
        if (trimmed.eval(f.anchor) != front) break;
        f = std::move(trimmed);
    }
    for (int guard = 0; guard < 256 && f.anchor != 0; ++guard) {
        StepFunction slid = f;
        if (f.anchor < 0) {
            slid.anchor += 1;
            slid.values.erase(slid.values.begin());
            slid.values.push_back(f.eval(f.last() + 1));
        } else {
            slid.anchor -= 1;
            slid.values.pop_back();
            slid.values.insert(slid.values.begin(), f.eval(f.anchor - 1));
        }
        if (!same_function(f, slid)) break;
        f = std::move(slid);
    }
    return f;
}

}  // namespace heartglue
