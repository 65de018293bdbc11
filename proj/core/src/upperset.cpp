#include "heartglue/upperset.hpp"

#include <algorithm>

namespace heartglue {

Extended Boundary::eval(Int n) const {
    switch (form) {
        case Form::all_plus_inf: return Extended::pos_inf();
        case Form::all_minus_inf: return Extended::neg_inf();
        case Form::vertical: return n < cut ? Extended::pos_inf() : Extended::neg_inf();
        case Form::staircase:
            if (left_plus_inf && n < core.anchor) return Extended::pos_inf();
            if (right_minus_inf && n > core.last()) return Extended::neg_inf();
            return Extended::of(core.eval(n));
    }
    return Extended::pos_inf();
}

void Boundary::check_well_formed() const {
    if (form != Form::staircase) return;
    core.check_well_formed();
    if (core.left.shift > 0 || core.right.shift > 0)
        throw std::invalid_argument("boundary: tails must be nonincreasing");
    auto [lo, hi] = core.probe_window();
    if (left_plus_inf) lo = core.anchor;
    if (right_minus_inf) hi = core.last();
    for (Int n = lo; n < hi; ++n)
        if (core.eval(n + 1) > core.eval(n))
            throw std::invalid_argument("boundary: not nonincreasing at n=" + std::to_string(n));
}

UpperSet2D UpperSet2D::empty() {
    UpperSet2D u;
    u.b_.form = Boundary::Form::all_plus_inf;
    return u;
}

UpperSet2D UpperSet2D::full() {
    UpperSet2D u;
    u.b_.form = Boundary::Form::all_minus_inf;
    return u;
}

UpperSet2D UpperSet2D::half_plane(Int x0) {
    UpperSet2D u;
    u.b_.form = Boundary::Form::vertical;
    u.b_.cut = x0;
    return u;
}

UpperSet2D UpperSet2D::from_boundary(Boundary b) {
    b.check_well_formed();
    if (b.form == Boundary::Form::staircase) {
        if (b.left_plus_inf) b.core.left = {1, 0};
        if (b.right_minus_inf) b.core.right = {1, 0};
        // values at infinite ends mark where the infinite region starts,
        // so only fully finite boundaries take the canonical representation
        if (!b.left_plus_inf && !b.right_minus_inf) {
            b.core = normalized(b.core);
        } else {
            size_t min_len = static_cast<size_t>(std::max(b.core.left.period, b.core.right.period));
            while (!b.right_minus_inf && b.core.values.size() > min_len) {
                Int back = b.core.values.back();
                StepFunction trimmed = b.core;
                trimmed.values.pop_back();
                if (trimmed.eval(b.core.last()) != back) break;
                b.core = std::move(trimmed);
            }
            while (!b.left_plus_inf && b.core.values.size() > min_len) {
                Int front = b.core.values.front();
                StepFunction trimmed = b.core;
                trimmed.values.erase(trimmed.values.begin());
                trimmed.anchor += 1;
                if (trimmed.eval(b.core.anchor) != front) break;
                b.core = std::move(trimmed);
            }
        }
    }
    UpperSet2D u;
    u.b_ = std::move(b);
    return u;
}

UpperSet2D UpperSet2D::translate(Int dx, Int dy) const {
    Boundary b = b_;
    switch (b.form) {
        case Boundary::Form::all_plus_inf:
        case Boundary::Form::all_minus_inf: break;
        case Boundary::Form::vertical: b.cut += dx; break;
        case Boundary::Form::staircase:
            b.core.anchor += dx;
            for (Int& v : b.core.values) v += dy;
            break;
    }
    UpperSet2D u;
    u.b_ = std::move(b);
    return u;
}

UpperSet2D UpperSet2D::act(Translation t, Int k) const {
    switch (t) {
        case Translation::north: return translate(0, k);
        case Translation::northeast: return translate(k, k);
        case Translation::northwest: return translate(-k, k);
        case Translation::southwest: return translate(-k, -k);
    }
    return *this;
}

UpperSet2D UpperSet2D::complement_opposite() const {
    Boundary b;
    switch (b_.form) {
        case Boundary::Form::all_plus_inf: return full();
        case Boundary::Form::all_minus_inf: return empty();
        case Boundary::Form::vertical: return half_plane(-b_.cut + 1);
        case Boundary::Form::staircase: {
            // b'(a) = 1 - b(-a): reverse the core, swap the infinite ends.
            const StepFunction& c = b_.core;
            b.form = Boundary::Form::staircase;
            b.left_plus_inf = b_.right_minus_inf;
            b.right_minus_inf = b_.left_plus_inf;
            b.core.anchor = -c.last();
            b.core.values.resize(c.values.size());
            for (size_t i = 0; i < c.values.size(); ++i)
                b.core.values[i] = 1 - c.values[c.values.size() - 1 - i];
            b.core.left = c.right;
            b.core.right = c.left;
            return from_boundary(std::move(b));
        }
    }
    return empty();
}

bool UpperSet2D::is_kinky() const {
    switch (b_.form) {
        case Boundary::Form::all_plus_inf:
        case Boundary::Form::all_minus_inf: return true;
        case Boundary::Form::vertical: return false;
        case Boundary::Form::staircase: {
            if (b_.left_plus_inf || b_.right_minus_inf) return false;
            auto [lo, hi] = b_.core.probe_window();
            for (Int n = lo; n < hi; ++n)
                if (b_.core.eval(n) > b_.core.eval(n + 1) + 1) return false;
            return true;
        }
    }
    return false;
}

namespace {

enum class EndKind { pinf, fin, minf };

struct EndView {
    EndKind kind = EndKind::fin;
    Tail tail{1, 0};
};

EndView left_end(const Boundary& b) {
    switch (b.form) {
        case Boundary::Form::all_plus_inf: return {EndKind::pinf, {}};
        case Boundary::Form::all_minus_inf: return {EndKind::minf, {}};
        case Boundary::Form::vertical: return {EndKind::pinf, {}};
        default:
            return b.left_plus_inf ? EndView{EndKind::pinf, {}} : EndView{EndKind::fin, b.core.left};
    }
}

EndView right_end(const Boundary& b) {
    switch (b.form) {
        case Boundary::Form::all_plus_inf: return {EndKind::pinf, {}};
        case Boundary::Form::all_minus_inf: return {EndKind::minf, {}};
        case Boundary::Form::vertical: return {EndKind::minf, {}};
        default:
            return b.right_minus_inf ? EndView{EndKind::minf, {}} : EndView{EndKind::fin, b.core.right};
    }
}

void critical_points(const Boundary& b, std::vector<Int>& out) {
    if (b.form == Boundary::Form::vertical) {
        out.push_back(b.cut);
    } else if (b.form == Boundary::Form::staircase) {
        out.push_back(b.core.anchor);
        out.push_back(b.core.last());
    }
}

/// b1(n) <= b2(n) for every n.
bool boundary_le(const Boundary& b1, const Boundary& b2) {
    EndView l1 = left_end(b1), l2 = left_end(b2);
    if (l2.kind != EndKind::pinf) {
        if (l1.kind == EndKind::pinf) return false;
        if (l1.kind == EndKind::fin) {
            if (l2.kind == EndKind::minf) return false;
            // leftwards a boundary rises by -shift per period; b1 may not outgrow b2
            if (l1.tail.shift * l2.tail.period < l2.tail.shift * l1.tail.period) return false;
        }
    }
    EndView r1 = right_end(b1), r2 = right_end(b2);
    if (r2.kind != EndKind::pinf && r1.kind != EndKind::minf) {
        if (r1.kind == EndKind::pinf) return false;
        if (r2.kind == EndKind::minf) return false;
        // rightwards, bi changes by shift (<= 0) per period; b2 must fall no faster
        if (r2.tail.shift * r1.tail.period < r1.tail.shift * r2.tail.period) return false;
    }
    std::vector<Int> crit;
    critical_points(b1, crit);
    critical_points(b2, crit);
    if (crit.empty()) return true;
    Int lcm_all = 1;
    for (const EndView& e : {l1, l2, r1, r2})
        if (e.kind == EndKind::fin) lcm_all = std::lcm(lcm_all, e.tail.period);
    Int lo = *std::min_element(crit.begin(), crit.end()) - 2 * lcm_all - 4;
    Int hi = *std::max_element(crit.begin(), crit.end()) + 2 * lcm_all + 4;
    for (Int n = lo; n <= hi; ++n)
        if (!(b1.eval(n) <= b2.eval(n))) return false;
    return true;
}

}  // namespace

bool includes(const UpperSet2D& u, const UpperSet2D& v) { return boundary_le(u.b_, v.b_); }

std::string UpperSet2D::str() const {
    switch (b_.form) {
        case Boundary::Form::all_plus_inf: return "{}";
        case Boundary::Form::all_minus_inf: return "ZxZ";
        case Boundary::Form::vertical: return "{n >= " + std::to_string(b_.cut) + "}";
        default: {
            std::string s = "staircase[";
            s += b_.left_plus_inf ? "+inf" : ("(" + std::to_string(b_.core.left.period) + "," +
                                              std::to_string(b_.core.left.shift) + ")");
            s += "; ";
            for (size_t i = 0; i < b_.core.values.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(b_.core.anchor + static_cast<Int>(i)) + ":" +
                     std::to_string(b_.core.values[i]);
            }
            s += "; ";
            s += b_.right_minus_inf ? "-inf" : ("(" + std::to_string(b_.core.right.period) + "," +
                                                std::to_string(b_.core.right.shift) + ")");
            return s + "]";
        }
    }
}

UpperSet2D from_rows(const std::vector<std::pair<Int, UpperSet1D>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: empty window");
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].first + 1 != rows[i + 1].first)
            throw std::invalid_argument("from_rows: window indices must be consecutive");
        if (!(rows[i + 1].second.boundary() <= rows[i].second.boundary()))
            throw RowsError(rows[i].first, rows[i + 1].first);
    }
    size_t first_fin = rows.size(), last_fin = 0;
    bool any_fin = false;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].second.kind == UpperSet1D::Kind::half_line) {
            if (!any_fin) first_fin = i;
            last_fin = i;
            any_fin = true;
        }
    }
    if (!any_fin) {
        size_t first_full = rows.size();
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].second.kind == UpperSet1D::Kind::full) {
                first_full = i;
                break;
            }
        if (first_full == rows.size()) return UpperSet2D::empty();
        if (first_full == 0) return UpperSet2D::full();
        return UpperSet2D::half_plane(rows[first_full].first);
    }
    Boundary b;
    b.form = Boundary::Form::staircase;
    b.left_plus_inf = first_fin > 0;
    b.right_minus_inf = last_fin + 1 < rows.size();
    b.core.anchor = rows[first_fin].first;
    for (size_t i = first_fin; i <= last_fin; ++i)
        b.core.values.push_back(rows[i].second.b);
    b.core.left = {1, 0};
    b.core.right = {1, 0};
    return UpperSet2D::from_boundary(std::move(b));
}

UpperSet2D kinky_graph(const Perversity& p) {
    if (p.infinity() == Perversity::Inf::plus) return UpperSet2D::empty();
    if (p.infinity() == Perversity::Inf::minus) return UpperSet2D::full();
    Boundary b;
    b.form = Boundary::Form::staircase;
    b.core = graph_boundary(p);
    return UpperSet2D::from_boundary(std::move(b));
}

UpperSet2D to_upperset(const Perversity& p) {
    if (p.infinity() == Perversity::Inf::plus) return UpperSet2D::empty();
    if (p.infinity() == Perversity::Inf::minus) return UpperSet2D::full();
    const StepFunction& f = p.steps();
    const Int sl = f.left.shift, tl = f.left.period;
    const Int sr = f.right.shift, tr = f.right.period;
    const Int n_lo = f.anchor - 2 * tl - 2, n_hi = f.last() + 2 * tr + 2;
    const Int x_min = f.eval(n_lo), x_max = f.eval(n_hi);
    if (sl == 0 && sr == 0 && x_min == x_max) return UpperSet2D::half_plane(x_min);

    Boundary b;
    b.form = Boundary::Form::staircase;
    b.left_plus_inf = sl == 0;
    b.right_minus_inf = sr == 0;
    // b(x) = x - max{m : p(m) <= x}: the constant ends of p collapse to
    // infinite ends of b, the sloped ends become periodic tails.
    if (sl > 0) b.core.left = {sl, sl - tl};
    if (sr > 0) b.core.right = {sr, sr - tr};
    const Int x_lo = sl == 0 ? f.eval(f.anchor) : x_min;
    const Int x_hi = (sr == 0 ? f.eval(f.last()) : x_max) - 1;
    b.core.anchor = x_lo;
    Int m = n_lo;
    for (Int x = x_lo; x <= x_hi; ++x) {
        while (f.eval(m + 1) <= x) ++m;
        b.core.values.push_back(x - m);
    }
    return UpperSet2D::from_boundary(std::move(b));
}

UpperSet2D to_upperset_op(const Perversity& p) { return to_upperset(p).complement_opposite(); }

namespace {

/// Largest m with b(m) - m > n; the staircase form always has one
/// (+inf on the far left or an unbounded periodic rise).
Int max_antislope_above(const Boundary& b, Int n) {
    const StepFunction& c = b.core;
    auto h = [&](Int m) { return c.eval(m) - m; };
    Int lo;
    if (b.left_plus_inf) {
        if (h(c.anchor) <= n) return c.anchor - 1;
        lo = c.anchor;
    } else {
        Int rise = c.left.period - c.left.shift;  // h gain per period leftwards
        Int k = h(c.anchor) > n ? 0 : ceil_div(n - h(c.anchor) + 1, rise);
        lo = c.anchor - k * c.left.period;
    }
    Int hi;
    if (b.right_minus_inf) {
        hi = c.last();
        if (h(hi) > n) return hi;
    } else {
        Int drop = c.right.period - c.right.shift;  // h loss per period rightwards
        Int k = h(c.last()) > n ? ceil_div(h(c.last()) - n, drop) : 0;
        hi = c.last() + k * c.right.period;
    }
    // h is strictly decreasing; h(lo) > n >= h(hi).
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        if (h(mid) > n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

/// Smallest x with x - b(x) >= n; exists for every staircase form.
Int min_diagonal_at_least(const Boundary& b, Int n) {
    const StepFunction& c = b.core;
    auto r = [&](Int x) { return x - c.eval(x); };
    Int hi;
    if (b.right_minus_inf) {
        if (r(c.last()) < n) return c.last() + 1;  // r = +inf from last()+1 onwards
        hi = c.last();
    } else {
        Int gain = c.right.period - c.right.shift;  // r gain per period rightwards
        Int k = r(c.last()) >= n ? 0 : ceil_div(n - r(c.last()), gain);
        hi = c.last() + k * c.right.period;
    }
    Int lo;
    if (b.left_plus_inf) {
        lo = c.anchor;  // r = -inf strictly left of the core
    } else {
        Int loss = c.left.period - c.left.shift;
        Int k = r(c.anchor) < n ? 0 : ceil_div(r(c.anchor) - n + 1, loss);
        lo = c.anchor - k * c.left.period;
    }
    // r is strictly increasing and r(hi) >= n
    while (lo < hi) {
        Int mid = lo + (hi - lo) / 2;
        if (r(mid) >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

Perversity to_perversity(const UpperSet2D& u) {
    const Boundary& b = u.boundary();
    switch (b.form) {
        case Boundary::Form::all_plus_inf: return Perversity::neg_inf();
        case Boundary::Form::all_minus_inf: return Perversity::pos_inf();
        case Boundary::Form::vertical: return Perversity::constant(1 - b.cut);
        default: break;
    }
    const StepFunction& c = b.core;
    // the ends of p mirror the opposite ends of b
    Tail p_left = b.right_minus_inf ? Tail{1, 0}
                                    : Tail{c.right.period - c.right.shift, c.right.period};
    Tail p_right = b.left_plus_inf ? Tail{1, 0}
                                   : Tail{c.left.period - c.left.shift, c.left.period};
    Int h_hi = c.eval(c.anchor) - c.anchor, h_lo = c.eval(c.last()) - c.last();
    Int n_lo = h_lo - 2 * p_left.period - 4;
    Int n_hi = h_hi + 2 * p_right.period + 4;
    StepFunction out;
    out.anchor = n_lo;
    out.left = p_left;
    out.right = p_right;
    for (Int n = n_lo; n <= n_hi; ++n)
        out.values.push_back(-max_antislope_above(b, n));
    return Perversity::finite(std::move(out));
}

Perversity graph_inverse(const UpperSet2D& u) {
    const Boundary& b = u.boundary();
    switch (b.form) {
        case Boundary::Form::all_plus_inf: return Perversity::pos_inf();
        case Boundary::Form::all_minus_inf: return Perversity::neg_inf();
        case Boundary::Form::vertical: return Perversity::constant(b.cut);
        default: break;
    }
    const StepFunction& c = b.core;
    Tail p_left = b.left_plus_inf ? Tail{1, 0}
                                  : Tail{c.left.period - c.left.shift, c.left.period};
    Tail p_right = b.right_minus_inf ? Tail{1, 0}
                                     : Tail{c.right.period - c.right.shift, c.right.period};
    Int r_lo = c.anchor - c.eval(c.anchor), r_hi = c.last() - c.eval(c.last());
    Int n_lo = r_lo - 2 * p_left.period - 4;
    Int n_hi = r_hi + 2 * p_right.period + 4;
    StepFunction out;
    out.anchor = n_lo;
    out.left = p_left;
    out.right = p_right;
    for (Int n = n_lo; n <= n_hi; ++n)
        out.values.push_back(min_diagonal_at_least(b, n));
    return Perversity::finite(std::move(out));
}

UpperSet2D phi_image(const UpperSet2D& kinky) {
    if (!kinky.is_proper()) return kinky;
    if (!kinky.is_kinky()) throw std::invalid_argument("phi_image: input is not kinky");
    return to_upperset(perversity_from_graph_boundary(kinky.boundary().core));
}

UpperSet2D phi_preimage(const UpperSet2D& u) {
    if (!u.is_proper()) return u;
    return kinky_graph(graph_inverse(u));
}

std::string ascii_staircase(const UpperSet2D& u, Int n_lo, Int n_hi, Int m_lo, Int m_hi) {
    std::string out;
    for (Int m = m_hi; m >= m_lo; --m) {
        for (Int n = n_lo; n <= n_hi; ++n) out += u.contains(n, m) ? '#' : '.';
        out += '\n';
    }
    return out;
}

}  // namespace heartglue
