#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>

#include "heartglue/perversity.hpp"

namespace heartglue {

/// A point of a Z-toset, stored as the flattened list of leaf coordinates.
struct Elem {
    std::uint32_t size = 0;
    std::array<Int, 4> c{};

    Int& operator[](size_t i) { return c[i]; }
    Int operator[](size_t i) const { return c[i]; }

    friend bool operator==(const Elem& a, const Elem& b) {
        if (a.size != b.size) return false;
        for (std::uint32_t i = 0; i < a.size; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
    friend bool operator<(const Elem& a, const Elem& b) {
        for (std::uint32_t i = 0; i < std::min(a.size, b.size); ++i) {
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        }
        return a.size < b.size;
    }

    std::string str() const {
        if (size == 1) return std::to_string(c[0]);
        std::string s = "(";
        for (std::uint32_t i = 0; i < size; ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

inline Elem elem(Int a) { return {1, {a}}; }
inline Elem elem(Int a, Int b) { return {2, {a, b}}; }

enum class Ordering { lt, eq, gt };

/// A totally ordered set with a monotone Z-action: Z with translation,
/// Z with the trivial action, a finite interval of Z with the trivial
/// action, or a lexicographic product acted on diagonally.
class ZToset {
public:
    enum class Kind { int_translation, int_trivial, finite_interval, lex_product };

    static ZToset integers() { return ZToset(Kind::int_translation, 0, 0, nullptr, nullptr); }
    static ZToset integers_trivial() { return ZToset(Kind::int_trivial, 0, 0, nullptr, nullptr); }
    static ZToset interval(Int a, Int b) {
        if (a > b) throw std::invalid_argument("interval: empty range");
        return ZToset(Kind::finite_interval, a, b, nullptr, nullptr);
    }
    static ZToset lex(ZToset left, ZToset right) {
        return ZToset(Kind::lex_product, 0, 0,
                      std::make_shared<ZToset>(std::move(left)),
                      std::make_shared<ZToset>(std::move(right)));
    }

    Kind kind() const { return kind_; }
    const ZToset& left() const { return *left_; }
    const ZToset& right() const { return *right_; }
    Int lo() const { return lo_; }
    Int hi() const { return hi_; }

    std::uint32_t arity() const {
        if (kind_ != Kind::lex_product) return 1;
        return left_->arity() + right_->arity();
    }

    bool contains(const Elem& x) const {
        if (x.size != arity()) return false;
        return contains_at(x, 0);
    }

    Ordering compare(const Elem& x, const Elem& y) const {
        require(x);
        require(y);
        for (std::uint32_t i = 0; i < x.size; ++i) {
            if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? Ordering::lt : Ordering::gt;
        }
        return Ordering::eq;
    }

    bool le(const Elem& x, const Elem& y) const { return compare(x, y) != Ordering::gt; }

    /// x + n under the action; translation leaves move, trivial ones do not.
    Elem shift(const Elem& x, Int n) const {
        require(x);
        Elem y = x;
        shift_at(y, 0, n);
        if (!contains(y))
            throw std::domain_error("shift: " + y.str() + " leaves the toset");
        return y;
    }

    /// All elements with every coordinate in [lo, hi] (finite intervals clip),
    /// listed in increasing lexicographic order.
    std::vector<Elem> window(Int lo, Int hi) const {
        std::vector<std::pair<Int, Int>> ranges;
        leaf_ranges(lo, hi, ranges);
        std::vector<Elem> out;
        Elem cur;
        cur.size = static_cast<std::uint32_t>(ranges.size());
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == ranges.size()) {
                out.push_back(cur);
                return;
            }
            for (Int v = ranges[i].first; v <= ranges[i].second; ++v) {
                cur.c[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        return out;
    }

    friend bool operator==(const ZToset& a, const ZToset& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::finite_interval: return a.lo_ == b.lo_ && a.hi_ == b.hi_;
            case Kind::lex_product: return *a.left_ == *b.left_ && *a.right_ == *b.right_;
            default: return true;
        }
    }

    std::string str() const {
        switch (kind_) {
            case Kind::int_translation: return "Z";
            case Kind::int_trivial: return "Z^";
            case Kind::finite_interval: return "[" + std::to_string(lo_) + ".." + std::to_string(hi_) + "]";
            default: return left_->str() + " x_lex " + right_->str();
        }
    }

private:
    ZToset(Kind k, Int lo, Int hi, std::shared_ptr<const ZToset> l, std::shared_ptr<const ZToset> r)
        : kind_(k), lo_(lo), hi_(hi), left_(std::move(l)), right_(std::move(r)) {}

    void require(const Elem& x) const {
        if (!contains(x))
            throw std::domain_error("element " + x.str() + " is not in " + str());
    }

    bool contains_at(const Elem& x, std::uint32_t off) const {
        if (kind_ == Kind::lex_product)
            return left_->contains_at(x, off) && right_->contains_at(x, off + left_->arity());
        if (kind_ == Kind::finite_interval) return x.c[off] >= lo_ && x.c[off] <= hi_;
        return true;
    }

    void shift_at(Elem& x, std::uint32_t off, Int n) const {
        if (kind_ == Kind::lex_product) {
            left_->shift_at(x, off, n);
            right_->shift_at(x, off + left_->arity(), n);
        } else if (kind_ == Kind::int_translation) {
            x.c[off] += n;
        }
    }

    void leaf_ranges(Int lo, Int hi, std::vector<std::pair<Int, Int>>& out) const {
        if (kind_ == Kind::lex_product) {
            left_->leaf_ranges(lo, hi, out);
            right_->leaf_ranges(lo, hi, out);
        } else if (kind_ == Kind::finite_interval) {
            out.emplace_back(std::max(lo, lo_), std::min(hi, hi_));
        } else {
            out.emplace_back(lo, hi);
        }
    }

    Kind kind_;
    Int lo_, hi_;
    std::shared_ptr<const ZToset> left_, right_;
};

inline ZToset z_lex_zhat() { return ZToset::lex(ZToset::integers(), ZToset::integers_trivial()); }
inline ZToset zhat_lex_z() { return ZToset::lex(ZToset::integers_trivial(), ZToset::integers()); }
inline ZToset z_lex_z() { return ZToset::lex(ZToset::integers(), ZToset::integers()); }

/// A Z-equivariant (not necessarily monotone) map between Z-tosets.
class ZSetMap {
public:
    enum class Kind {
        identity,
        exchange,     // (j1, j2) |-> (j2, j1)
        alpha,        // (n, m) |-> (n+m, -m) on Z x_lex Z^
        beta,         // (n, m) |-> (n, n+m), Z x_lex Z^ -> Z x_lex Z
        beta_inverse, // (n, m) |-> (n, m-n)
        gamma_p,      // (n, w) |-> n + p(w)
        g_p,          // (n, w) |-> (n + p(w), -p(w))
        projection_first,
        translation,  // x |-> x + k under the action
        weight_map,   // (n, w) |-> (n, q(w)) for a nondecreasing q
        composition,
        table,
    };

    static ZSetMap identity(ZToset j) { return ZSetMap(Kind::identity, j, j); }

    static ZSetMap exchange(const ZToset& j1, const ZToset& j2) {
        ZSetMap m(Kind::exchange, ZToset::lex(j1, j2), ZToset::lex(j2, j1));
        m.split_ = j1.arity();
        return m;
    }

    static ZSetMap alpha() { return ZSetMap(Kind::alpha, z_lex_zhat(), z_lex_zhat()); }
    static ZSetMap beta() { return ZSetMap(Kind::beta, z_lex_zhat(), z_lex_z()); }
    static ZSetMap beta_inverse() { return ZSetMap(Kind::beta_inverse, z_lex_z(), z_lex_zhat()); }

    static ZSetMap gamma(const Perversity& p) {
        if (!p.is_finite())
            throw std::domain_error("gamma_p needs a finite perversity");
        ZSetMap m(Kind::gamma_p, z_lex_zhat(), ZToset::integers());
        m.p_ = p;
        return m;
    }

    static ZSetMap g(const Perversity& p) {
        if (!p.is_finite())
            throw std::domain_error("g_p needs a finite perversity");
        ZSetMap m(Kind::g_p, z_lex_zhat(), z_lex_zhat());
        m.p_ = p;
        return m;
    }

    /// Monotone for every toset: the action itself.
    static ZSetMap translation(ZToset j, Int k) {
        ZSetMap m(Kind::translation, j, j);
        m.k_ = k;
        return m;
    }

    /// Monotone reparametrization of the trivially-acted weight factor.
    static ZSetMap weight_remap(const Perversity& q) {
        if (!q.is_finite())
            throw std::domain_error("weight_remap needs a finite function");
        ZSetMap m(Kind::weight_map, z_lex_zhat(), z_lex_zhat());
        m.p_ = q;
        return m;
    }

    static ZSetMap projection_first(const ZToset& j) {
        if (j.kind() != ZToset::Kind::lex_product)
            throw std::invalid_argument("projection_first: domain is not a product");
        ZSetMap m(Kind::projection_first, j, j.left());
        m.split_ = j.left().arity();
        return m;
    }

    static ZSetMap compose(ZSetMap outer, ZSetMap inner) {
        if (!(inner.codomain() == outer.domain()))
            throw std::invalid_argument("compose: codomain/domain mismatch");
        ZSetMap m(Kind::composition, inner.domain(), outer.codomain());
        m.inner_ = std::make_shared<ZSetMap>(std::move(inner));
        m.outer_ = std::make_shared<ZSetMap>(std::move(outer));
        return m;
    }

    static ZSetMap from_table(ZToset dom, ZToset cod, std::map<Elem, Elem> entries) {
        ZSetMap m(Kind::table, std::move(dom), std::move(cod));
        m.table_ = std::move(entries);
        return m;
    }

    const ZToset& domain() const { return dom_; }
    const ZToset& codomain() const { return cod_; }
    Kind kind() const { return kind_; }

    Elem apply(const Elem& x) const {
        if (!dom_.contains(x))
            throw std::domain_error("map: " + x.str() + " is not in the domain");
        switch (kind_) {
            case Kind::identity: return x;
            case Kind::exchange: {
                Elem y;
                y.size = x.size;
                std::uint32_t k = split_, r = x.size - split_;
                for (std::uint32_t i = 0; i < r; ++i) y.c[i] = x.c[k + i];
                for (std::uint32_t i = 0; i < k; ++i) y.c[r + i] = x.c[i];
                return y;
            }
            case Kind::alpha: return elem(x[0] + x[1], -x[1]);
            case Kind::beta: return elem(x[0], x[0] + x[1]);
            case Kind::beta_inverse: return elem(x[0], x[1] - x[0]);
            case Kind::gamma_p: return elem(x[0] + p_(x[1]));
            case Kind::g_p: return elem(x[0] + p_(x[1]), -p_(x[1]));
            case Kind::projection_first: {
                Elem y;
                y.size = split_;
                for (std::uint32_t i = 0; i < split_; ++i) y.c[i] = x.c[i];
                return y;
            }
            case Kind::translation: return dom_.shift(x, k_);
            case Kind::weight_map: return elem(x[0], p_(x[1]));
            case Kind::composition: return outer_->apply(inner_->apply(x));
            default: {
                auto it = table_.find(x);
                if (it == table_.end())
                    throw std::domain_error("table map: no entry for " + x.str());
                return it->second;
            }
        }
    }

    /// True when the table (if any) defines the map at x.
    bool defined_at(const Elem& x) const {
        if (!dom_.contains(x)) return false;
        if (kind_ == Kind::table) return table_.count(x) > 0;
        if (kind_ == Kind::composition)
            return inner_->defined_at(x) && outer_->defined_at(inner_->apply(x));
        return true;
    }

private:
    ZSetMap(Kind k, ZToset dom, ZToset cod) : kind_(k), dom_(std::move(dom)), cod_(std::move(cod)) {}

    Kind kind_;
    ZToset dom_, cod_;
    std::uint32_t split_ = 0;
    Int k_ = 0;
    Perversity p_ = Perversity::zero();
    std::shared_ptr<const ZSetMap> inner_, outer_;
    std::map<Elem, Elem> table_;
};

/// A decomposition of a toset into a lower and an upper part.  Principal
/// cuts put the upper part at {x >= pivot}; first-coordinate cuts sit
/// between the fibers of a product.
struct Cut {
    enum class Kind { at_element, first_coord_at_least, everything_upper, everything_lower };
    Kind kind = Kind::at_element;
    Elem pivot;
    Int c = 0;

    static Cut at(Elem pivot) { return {Kind::at_element, pivot, 0}; }
    static Cut first_coord(Int c) { return {Kind::first_coord_at_least, {}, c}; }
    static Cut all_upper() { return {Kind::everything_upper, {}, 0}; }
    static Cut all_lower() { return {Kind::everything_lower, {}, 0}; }

    bool in_upper(const ZToset& j, const Elem& x) const {
        switch (kind) {
            case Kind::at_element: return j.compare(x, pivot) != Ordering::lt;
            case Kind::first_coord_at_least: return x[0] >= c;
            case Kind::everything_upper: return true;
            default: return false;
        }
    }
};

struct EquivarianceReport {
    bool ok = true;
    std::optional<Elem> witness;
};

/// Checks f(x+1) = f(x)+1 for every window element x whose successor stays
/// available; returns the first offending x otherwise.
inline EquivarianceReport verify_equivariance(const ZSetMap& f, const std::vector<Elem>& window) {
    for (const Elem& x : window) {
        Elem x1;
        try {
            x1 = f.domain().shift(x, 1);
        } catch (const std::domain_error&) {
            continue;
        }
        if (!f.defined_at(x) || !f.defined_at(x1)) continue;
        Elem lhs = f.apply(x1);
        Elem rhs;
        try {
            rhs = f.codomain().shift(f.apply(x), 1);
        } catch (const std::domain_error&) {
            return {false, x};
        }
        if (!(lhs == rhs)) return {false, x};
    }
    return {true, std::nullopt};
}

struct MonotonicityReport {
    bool ok = true;
    std::optional<std::pair<Elem, Elem>> witness;
};

/// Monotonicity is a queryable property of a map, not an invariant.
inline MonotonicityReport monotone_on_window(const ZSetMap& f, const std::vector<Elem>& window) {
    for (const Elem& x : window) {
        if (!f.defined_at(x)) continue;
        for (const Elem& y : window) {
            if (!f.defined_at(y)) continue;
            if (f.domain().le(x, y) && !f.codomain().le(f.apply(x), f.apply(y)))
                return {false, std::make_pair(x, y)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace heartglue
