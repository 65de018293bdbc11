#pragma once

#include <memory>
#include <set>

#include "heartglue/upperset.hpp"
#include "heartglue/zposet.hpp"

namespace heartglue {

/// Answers whether every morphism space from the slice at `src` to the slice
/// at `dst` vanishes.  Implementations are pure and deterministic; the
/// slicing axiom (vanishing whenever src > dst) is enforced by SliceSystem,
/// so oracles are only consulted for src <= dst.
class Oracle {
public:
    virtual ~Oracle() = default;
    virtual bool hom_vanishes(const Elem& src, const Elem& dst) const = 0;
};

/// Everything orthogonal except a slice against itself.
class SemisimpleOracle : public Oracle {
public:
    bool hom_vanishes(const Elem& src, const Elem& dst) const override { return !(src == dst); }
};

/// Heart-level rule table over Z x_lex Z^: entries are (weight, weight,
/// shift) |-> vanishes, with a declared default and weight domain.
class TableOracle : public Oracle {
public:
    TableOracle(Int w_lo, Int w_hi, bool default_vanishes)
        : w_lo_(w_lo), w_hi_(w_hi), default_(default_vanishes) {}

    void set(Int phi, Int psi, Int n, bool vanishes) { entries_[{phi, psi, n}] = vanishes; }

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int phi = src[1], psi = dst[1], n = dst[0] - src[0];
        if (phi < w_lo_ || phi > w_hi_ || psi < w_lo_ || psi > w_hi_)
            throw std::domain_error("table oracle: weight outside [" + std::to_string(w_lo_) +
                                    "," + std::to_string(w_hi_) + "]");
        auto it = entries_.find({phi, psi, n});
        return it == entries_.end() ? default_ : it->second;
    }

    Int w_lo() const { return w_lo_; }
    Int w_hi() const { return w_hi_; }

private:
    Int w_lo_, w_hi_;
    bool default_;
    std::map<std::tuple<Int, Int, Int>, bool> entries_;
};

/// Graded-module rule: Ext^n between weight-phi and weight-psi objects
/// vanishes for n > psi - phi (and in negative degrees, and in degree 0
/// across distinct weights).
class KoszulOracle : public Oracle {
public:
    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int phi = src[1], psi = dst[1], n = dst[0] - src[0];
        return n < 0 || (n == 0 && phi != psi) || n > psi - phi;
    }
};

/// Support-codimension rule: Ext^n from codimension i to codimension j
/// vanishes for n < i - j; weights outside [0, dim] are zero slices.
class CoherentSupportOracle : public Oracle {
public:
    explicit CoherentSupportOracle(Int dim) : dim_(dim) {}

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int i = src[1], j = dst[1], n = dst[0] - src[0];
        if (i < 0 || i > dim_ || j < 0 || j > dim_) return true;
        return n < std::max<Int>(0, i - j);
    }

    Int dim() const { return dim_; }

private:
    Int dim_;
};

/// Formal K-group vanishing pattern for the tower of Tate twists, indexed by
/// Z^ x_lex Z: Hom(Q(i)[a], Q(j)[b]) sits in K_{2(j-i)-(b-a)} of weight j-i.
/// Negative-index and weight-zero K-groups vanish outright; the groups with
/// i < j and b - a <= 0 vanish iff the standard vanishing flag is set and no
/// entry is planted there.
class BeilinsonSouleOracle : public Oracle {
public:
    explicit BeilinsonSouleOracle(bool standard_vanishing)
        : standard_vanishing_(standard_vanishing) {}

    void plant_nonzero(Int i, Int j, Int n) { planted_.insert({i, j, n}); }

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int i = src[0], j = dst[0], n = dst[1] - src[1];
        if (i > j) return true;
        if (i == j) return n != 0;
        Int m = 2 * (j - i) - n;
        if (m <= 0) return true;
        if (planted_.count({i, j, n})) return false;
        if (n <= 0) return standard_vanishing_;
        return false;
    }

private:
    bool standard_vanishing_;
    std::set<std::tuple<Int, Int, Int>> planted_;
};

/// Torsion pair on a heart, weights {0,1}: the only nontrivial vanishing is
/// Hom(heart_1, heart_0) = 0; other weights are zero slices.
class TorsionPairOracle : public Oracle {
public:
    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int phi = src[1], psi = dst[1], n = dst[0] - src[0];
        if (phi < 0 || phi > 1 || psi < 0 || psi > 1) return true;
        return n < 0 || (n == 0 && phi > psi);
    }
};

/// Semiorthogonal pair with per-piece t-structures over {0,1} x_lex Z;
/// `cross_vanishing` grants Hom(piece_0 heart, piece_1 heart [n]) = 0 for
/// all n <= 0, the shape of the gluing hypothesis.
class SemiorthogonalPairOracle : public Oracle {
public:
    explicit SemiorthogonalPairOracle(bool cross_vanishing) : cross_(cross_vanishing) {}

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int i = src[0], j = dst[0], n = dst[1] - src[1];
        if (i > j) return true;
        if (i == j) return n != 0;
        return n <= 0 && cross_;
    }

private:
    bool cross_;
};

/// Relabels an oracle along a bijection of the index set.
class RelabeledOracle : public Oracle {
public:
    RelabeledOracle(std::shared_ptr<const Oracle> base, ZSetMap to_base)
        : base_(std::move(base)), to_base_(std::move(to_base)) {}

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        return base_->hom_vanishes(to_base_.apply(src), to_base_.apply(dst));
    }

private:
    std::shared_ptr<const Oracle> base_;
    ZSetMap to_base_;
};

/// A slicing presented by its index toset and orthogonality oracle.
struct SliceSystem {
    ZToset index;
    std::shared_ptr<const Oracle> oracle;

    /// Hom(slice(phi), slice(psi)[n]) vanishes?  The shift moves the target
    /// label; labels in strictly decreasing position vanish by the slicing
    /// axioms without consulting the oracle.
    bool orthogonal(const Elem& phi, const Elem& psi, Int n) const {
        Elem dst = index.shift(psi, n);
        if (index.compare(phi, dst) == Ordering::gt) return true;
        return oracle->hom_vanishes(phi, dst);
    }
};

inline SliceSystem semisimple_system(ZToset j) {
    return {std::move(j), std::make_shared<SemisimpleOracle>()};
}

struct CompatWitness {
    Elem phi, psi;
    Int shift = 0;
};

struct CheckResult {
    bool holds = true;
    std::optional<CompatWitness> witness;

    explicit operator bool() const { return holds; }
};

/// f-compatibility on a window: wherever f inverts the order, morphisms must
/// vanish at shifts 0 and 1.
CheckResult is_f_compatible(const SliceSystem& s, const ZSetMap& f, const std::vector<Elem>& window);

/// Weight window plus shift range for the heart-level predicates.
struct HeartWindow {
    Int w_lo = -8, w_hi = 8;
    Int n_max = 8;
};

/// Vanishing between heart slices phi > psi at all positive shifts.
/// Evaluated twice, by the direct scan and as compatibility with the
/// exchange of factors over a window spanning the same shifts; the two
/// routes must agree.
CheckResult is_gluable(const SliceSystem& s, const HeartWindow& w);
/// Vanishing for phi > psi + n, plus the diagonal phi = psi + n with n >= 2.
CheckResult is_grading(const SliceSystem& s, const HeartWindow& w);
/// Vanishing for phi > psi + n.
CheckResult is_perverse(const SliceSystem& s, const HeartWindow& w);

struct ImplicationReport {
    CheckResult gluable, grading, perverse;
    bool gluable_implies_grading = true;
    bool grading_implies_perverse = true;
};

ImplicationReport implication_check(const SliceSystem& s, const HeartWindow& w);

/// Cohomology support of an object: slice labels with multiplicities,
/// kept sorted in strictly decreasing label order.
struct SupportObject {
    std::vector<std::pair<Elem, Int>> entries;

    static SupportObject of(const ZToset& j, std::vector<std::pair<Elem, Int>> raw);
    bool empty() const { return entries.empty(); }
    friend bool operator==(const SupportObject&, const SupportObject&) = default;
    std::string str() const;
};

struct PushforwardError : std::runtime_error {
    CompatWitness witness;
    explicit PushforwardError(CompatWitness w)
        : std::runtime_error("pushforward: compatibility fails at (" + w.phi.str() + ", " +
                             w.psi.str() + ") shift " + std::to_string(w.shift)),
          witness(w) {}
};

/// Support of the pushed slicing: multiplicities aggregate along the fibers
/// of f.  Compatibility is checked on the support labels first.
SupportObject pushforward_support(const SliceSystem& s, const ZSetMap& f, const SupportObject& x);

/// Slicing with slices indexed by f's codomain; orthogonality between pushed
/// slices quantifies over the fibers inside the given window.
SliceSystem system_pushforward(const SliceSystem& s, const ZSetMap& f, const std::vector<Elem>& window);

struct FunctorialityReport {
    bool f_compatible = true, g_compatible_after_f = true;
    bool composite_compatible = true;
    bool supports_agree = true;
    std::optional<SupportObject> mismatch;
};

FunctorialityReport functoriality_check(const SliceSystem& s, const ZSetMap& f, const ZSetMap& g,
                                        const std::vector<Elem>& window,
                                        const std::vector<SupportObject>& samples);

/// Labels (n, n') with p(n') = -n make up the perverse heart.
bool perverse_heart_membership(const Perversity& p, const SupportObject& x);

/// Label classifiers of the t-structure attached to an extended perversity:
/// upper class n + p(n') >= 0, lower class its complement, heart p(n') = -n.
struct TStructureDescriptor {
    Perversity p;

    bool in_upper(Int n, Int w) const {
        if (!p.is_finite()) return p.infinity() == Perversity::Inf::plus;
        return n + p(w) >= 0;
    }
    bool in_lower(Int n, Int w) const { return !in_upper(n, w); }
    bool in_heart(Int n, Int w) const { return p.is_finite() && p(w) == -n; }
};

struct PsiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PsiResult {
    TStructureDescriptor descriptor;
    bool grading_checked = false;   // grading held on the window
    bool strict_fallback = false;   // only perverse held, strictness carried it
};

/// The t-structure attached to a perversity (or to an upper set through
/// to_perversity).  Requires grading on the window, or perverse plus a
/// strict perversity.
PsiResult psi(const SliceSystem& s, const Perversity& p, const HeartWindow& w);
PsiResult psi(const SliceSystem& s, const UpperSet2D& u, const HeartWindow& w);

}  // namespace heartglue
