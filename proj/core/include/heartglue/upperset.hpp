#pragma once

#include "heartglue/perversity.hpp"

namespace heartglue {

/// An upper set of Z: empty, all of Z, or [b, +inf).
struct UpperSet1D {
    enum class Kind { empty, full, half_line };
    Kind kind = Kind::empty;
    Int b = 0;

    static UpperSet1D empty() { return {Kind::empty, 0}; }
    static UpperSet1D full() { return {Kind::full, 0}; }
    static UpperSet1D half_line(Int b) { return {Kind::half_line, b}; }

    bool contains(Int y) const {
        switch (kind) {
            case Kind::empty: return false;
            case Kind::full: return true;
            default: return y >= b;
        }
    }
    Extended boundary() const {
        switch (kind) {
            case Kind::empty: return Extended::pos_inf();
            case Kind::full: return Extended::neg_inf();
            default: return Extended::of(b);
        }
    }
    friend bool operator==(const UpperSet1D&, const UpperSet1D&) = default;
};

/// Nonincreasing boundary b: Z -> Z u {-inf, +inf}; the attached upper set
/// is {(n, n') : n' >= b(n)}.  Forms: identically +inf (empty set),
/// identically -inf (whole plane), a vertical step +inf/-inf at a cut
/// (half plane n >= cut), or a staircase with optional infinite ends.
struct Boundary {
    enum class Form { all_plus_inf, all_minus_inf, vertical, staircase };
    Form form = Form::all_plus_inf;
    Int cut = 0;                   // vertical only: b = +inf below, -inf from cut on
    bool left_plus_inf = false;    // staircase: +inf strictly left of core
    bool right_minus_inf = false;  // staircase: -inf strictly right of core
    StepFunction core;             // staircase only

    Extended eval(Int n) const;
    void check_well_formed() const;
};

enum class ProductOrd { lt, eq, gt, incomparable };

/// Componentwise comparison of points of Z x Z (the product order, used by
/// upper sets; the lexicographic order lives in ZToset).
inline ProductOrd product_compare(std::pair<Int, Int> a, std::pair<Int, Int> b) {
    bool le = a.first <= b.first && a.second <= b.second;
    bool ge = a.first >= b.first && a.second >= b.second;
    if (le && ge) return ProductOrd::eq;
    if (le) return ProductOrd::lt;
    if (ge) return ProductOrd::gt;
    return ProductOrd::incomparable;
}

enum class Translation { north, northeast, northwest, southwest };

class UpperSet2D {
public:
    UpperSet2D() = default;

    static UpperSet2D empty();
    static UpperSet2D full();
    /// The half plane {(n, n') : n >= x0}.
    static UpperSet2D half_plane(Int x0);
    static UpperSet2D from_boundary(Boundary b);

    const Boundary& boundary() const { return b_; }
    bool is_empty() const { return b_.form == Boundary::Form::all_plus_inf; }
    bool is_full() const { return b_.form == Boundary::Form::all_minus_inf; }
    bool is_proper() const { return !is_empty() && !is_full(); }

    bool contains(Int n, Int np) const { return Extended::of(np) >= b_.eval(n); }

    UpperSet1D row(Int n) const {
        Extended b = b_.eval(n);
        if (b.kind == Extended::plus_inf) return UpperSet1D::empty();
        if (b.kind == Extended::minus_inf) return UpperSet1D::full();
        return UpperSet1D::half_line(b.value);
    }

    UpperSet2D translate(Int dx, Int dy) const;
    UpperSet2D act(Translation t, Int k) const;

    /// Complement of the pointwise negation, (-U)^c; order-reversing.
    UpperSet2D complement_opposite() const;

    /// Stable under translation by (-1, +1); in boundary terms
    /// b(n-1) <= b(n) + 1 everywhere.
    bool is_kinky() const;

    friend bool includes(const UpperSet2D& u, const UpperSet2D& v);
    friend bool operator==(const UpperSet2D& u, const UpperSet2D& v) {
        return includes(u, v) && includes(v, u);
    }

    std::string str() const;

private:
    Boundary b_;
};

/// U1 >= U2 as sets.
bool includes(const UpperSet2D& u, const UpperSet2D& v);

struct RowsError : std::invalid_argument {
    Int j_low, j_high;
    RowsError(Int jl, Int jh)
        : std::invalid_argument("rows are not nondecreasing between j=" + std::to_string(jl) +
                                " and j=" + std::to_string(jh)),
          j_low(jl), j_high(jh) {}
};

/// The graph {(j, j') : j' in rows(j)} of a window of 1d upper sets,
/// extended constantly beyond the window; rejects non-monotone input.
UpperSet2D from_rows(const std::vector<std::pair<Int, UpperSet1D>>& rows);

/// The upper graph of a perversity: the set {(n, n') : n' >= p(n) - n}.
/// Kinky; infinite perversities give the whole plane / the empty set.
UpperSet2D kinky_graph(const Perversity& p);

/// Image of an upper set under the shear (n, n') |-> (n + n', n');
/// defined on kinky sets, where it lands back in the upper sets.
UpperSet2D phi_image(const UpperSet2D& kinky);

/// Preimage under the shear; kinky for every upper set.
UpperSet2D phi_preimage(const UpperSet2D& u);

/// p |-> image of the upper graph under the shear; concretely
/// {(x, y) : x >= p(x - y)}.  p_-inf |-> whole plane, p_+inf |-> empty set.
UpperSet2D to_upperset(const Perversity& p);

/// Same parametrization composed with complement_opposite; order-preserving
/// as sets, with the empty set at p_-inf.
UpperSet2D to_upperset_op(const Perversity& p);

/// Inverse of to_upperset_op: p(n) = -max{m : b(m) - m > n}.
/// empty |-> p_-inf, whole plane |-> p_+inf.
Perversity to_perversity(const UpperSet2D& u);

/// Inverse of to_upperset: reads p off the antidiagonal sections,
/// p(n) = min{x : (x, x - n) in U}.  empty |-> p_+inf, whole |-> p_-inf.
Perversity graph_inverse(const UpperSet2D& u);

/// Thin validated wrapper for upper sets stable under (-1, +1).
struct KinkyUpperSet {
    UpperSet2D inner;
    static KinkyUpperSet from(UpperSet2D u) {
        if (!u.is_kinky()) throw std::invalid_argument("not a kinky upper set");
        return {std::move(u)};
    }
};

/// '#' for members, '.' otherwise; rows from m_hi down to m_lo.
std::string ascii_staircase(const UpperSet2D& u, Int n_lo, Int n_hi, Int m_lo, Int m_hi);

}  // namespace heartglue
