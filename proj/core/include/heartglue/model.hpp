#pragma once

#include <random>

#include "heartglue/slicing.hpp"

namespace heartglue {

/// Object of the semisimple bigraded model: a formal sum of simple pieces
/// S(degree, weight), one slice per label (degree, weight) in Z x_lex Z^.
struct BigradedEntry {
    Int degree, weight, mult;
    friend bool operator==(const BigradedEntry&, const BigradedEntry&) = default;
};

struct BigradedObject {
    std::vector<BigradedEntry> entries;  // strictly decreasing (degree, weight), merged

    static BigradedObject of(std::vector<BigradedEntry> raw);
    bool is_zero() const { return entries.empty(); }
    BigradedObject shifted(Int k) const;
    SupportObject support() const;
    std::string str() const;
    friend bool operator==(const BigradedObject&, const BigradedObject&) = default;
};

BigradedObject direct_sum(const BigradedObject& x, const BigradedObject& y);

/// dim Hom(X, Y[n]) in the semisimple model: matching entries offset by n.
Int hom_dimension(const BigradedObject& x, const BigradedObject& y, Int n);

/// Object of the derived category of the linear quiver N -> N-1 -> ... -> 1:
/// a formal sum of shifted interval modules M[a,b][s].  Slice label of a
/// summand is (s, a) in Z x_lex Z^ (weight = left endpoint).
struct QuiverSummand {
    Int a, b, shift, mult;
    friend bool operator==(const QuiverSummand&, const QuiverSummand&) = default;
};

struct QuiverObject {
    Int vertices = 2;
    std::vector<QuiverSummand> summands;  // strictly decreasing (shift, a, b), merged

    static QuiverObject of(Int vertices, std::vector<QuiverSummand> raw);
    bool is_zero() const { return summands.empty(); }
    QuiverObject shifted(Int k) const;
    SupportObject support() const;
    std::string str() const;
    // isomorphism = equality of indecomposable multisets; the vertex count
    // is ambient data
    friend bool operator==(const QuiverObject& x, const QuiverObject& y) {
        return x.summands == y.summands;
    }
};

QuiverObject direct_sum(const QuiverObject& x, const QuiverObject& y);

/// Closed-form interval combinatorics (arrows point from i+1 to i):
/// Hom(M[a,b], M[c,d]) is one-dimensional iff a <= c <= b <= d, and
/// Ext^1(M[a,b], M[c,d]) iff c < a <= d+1 <= b.
Int interval_hom(Int a, Int b, Int c, Int d);
Int interval_ext1(Int a, Int b, Int c, Int d);

/// Independent linear-algebra route: dim Hom as the kernel of the
/// commutation constraints, dim Ext^1 through the projective resolution
/// 0 -> P_{a-1} -> P_b -> M[a,b] -> 0 with P_j = M[1,j].
Int matrix_interval_hom(Int vertices, Int a, Int b, Int c, Int d);
Int matrix_interval_ext1(Int vertices, Int a, Int b, Int c, Int d);

/// dim Hom(X, Y[n]); derived homs of the hereditary model live in
/// cohomological distance 0 and 1 only.
Int hom_dimension(const QuiverObject& x, const QuiverObject& y, Int n);

/// Slice-level orthogonality computed from the quiver model.
class QuiverOracle : public Oracle {
public:
    explicit QuiverOracle(Int vertices) : vertices_(vertices) {}

    bool hom_vanishes(const Elem& src, const Elem& dst) const override {
        Int w1 = src[1], w2 = dst[1], d = dst[0] - src[0];
        if (w1 < 1 || w1 > vertices_ || w2 < 1 || w2 > vertices_) return true;
        if (d != 0 && d != 1) return true;
        for (Int b1 = w1; b1 <= vertices_; ++b1)
            for (Int b2 = w2; b2 <= vertices_; ++b2) {
                Int dim = d == 0 ? interval_hom(w1, b1, w2, b2) : interval_ext1(w1, b1, w2, b2);
                if (dim > 0) return false;
            }
        return true;
    }

private:
    Int vertices_;
};

inline SliceSystem quiver_system(Int vertices) {
    return {z_lex_zhat(), std::make_shared<QuiverOracle>(vertices)};
}

/// A factorization of an object into labeled slice pieces.
template <class Obj>
struct Tower {
    struct Factor {
        Elem label;
        Obj piece;
    };
    std::vector<Factor> factors;
};

inline Elem bigraded_label(const BigradedEntry& e) { return elem(e.degree, e.weight); }
inline Elem quiver_label(const QuiverSummand& s) { return elem(s.shift, s.a); }

/// Groups an object by slice label, strictly decreasing.
Tower<BigradedObject> hn_tower(const BigradedObject& x);
Tower<QuiverObject> hn_tower(const QuiverObject& x);

template <class Obj>
Obj reassemble(const Tower<Obj>& t) {
    Obj total{};
    for (const auto& f : t.factors) total = direct_sum(total, f.piece);
    return total;
}

struct SwapRecord {
    size_t position;
    Elem moved_up, moved_down;  // labels exchanged: moved_up passed leftwards
};

struct ReorderBlocked : std::runtime_error {
    size_t position;
    Elem src, dst;
    ReorderBlocked(size_t pos, Elem s, Elem d)
        : std::runtime_error("reorder: swap at position " + std::to_string(pos) +
                             " blocked, Hom(" + s.str() + ", " + d.str() + "[1]) need not vanish"),
          position(pos), src(s), dst(d) {}
};

template <class Obj>
struct ReorderResult {
    Tower<Obj> tower;
    size_t upper_count = 0;
    std::vector<SwapRecord> swaps;
};

/// Bubble pass turning the L/U symbol sequence of the tower into U...UL...L.
/// Each swap exchanges two adjacent factors and is legal only when the
/// oracle grants Hom(lower piece, upper piece [1]) = 0; a refusal carries
/// the position and the offending labels.  At most k(k-1)/2 swaps happen.
template <class Obj>
ReorderResult<Obj> reorder_tower(Tower<Obj> t, const ZSetMap& f, const SliceSystem& s, const Cut& cut) {
    const ZToset& jp = f.codomain();
    auto upper = [&](const Elem& label) { return cut.in_upper(jp, f.apply(label)); };
    ReorderResult<Obj> out;
    size_t k = t.factors.size();
    for (size_t i = 0; i + 1 < k; ++i)
        if (s.index.compare(t.factors[i].label, t.factors[i + 1].label) != Ordering::gt)
            throw std::invalid_argument("reorder: tower labels must be strictly decreasing");
    std::vector<bool> sym(k);
    for (size_t i = 0; i < k; ++i) sym[i] = upper(t.factors[i].label);
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < k; ++i) {
            if (sym[i] || !sym[i + 1]) continue;  // only (L, U) adjacencies move
            const Elem& low = t.factors[i].label;
            const Elem& high = t.factors[i + 1].label;
            if (!s.orthogonal(high, low, 1)) throw ReorderBlocked(i, high, low);
            out.swaps.push_back({i, high, low});
            std::swap(t.factors[i], t.factors[i + 1]);
            std::swap(sym[i], sym[i + 1]);
            moved = true;
            break;
        }
    }
    out.upper_count = static_cast<size_t>(std::count(sym.begin(), sym.end(), true));
    out.tower = std::move(t);
    return out;
}

template <class Obj>
Tower<Obj> object_tower(const Obj& x) {
    return hn_tower(x);
}

/// Splits an object into its upper and lower constituents for the slicing
/// of the codomain pulled back along f.
template <class Obj>
std::pair<Obj, Obj> truncate(const Obj& x, const ZSetMap& f, const SliceSystem& s, const Cut& cut) {
    ReorderResult<Obj> r = reorder_tower(object_tower(x), f, s, cut);
    Tower<Obj> up, low;
    for (size_t i = 0; i < r.tower.factors.size(); ++i)
        (i < r.upper_count ? up : low).factors.push_back(r.tower.factors[i]);
    return {reassemble(up), reassemble(low)};
}

struct TStructureReport {
    bool upper_shift_closed = true;
    bool cross_orthogonal = true;  // oracle-level, upper labels against lower labels
    bool cross_hom_zero = true;    // model-level homs between truncated parts
    bool decompositions_ok = true;
    std::vector<std::string> failures;
    bool ok() const {
        return upper_shift_closed && cross_orthogonal && cross_hom_zero && decompositions_ok;
    }
};

TStructureReport verify_t_structure(const SliceSystem& s, const ZSetMap& f, const Cut& cut,
                                    const std::vector<BigradedObject>& samples);

/// All objects with at most max_entries simple pieces (counted with
/// multiplicity) over the given label box, the zero object included.
std::vector<BigradedObject> enumerate_bigraded(Int max_entries, Int d_lo, Int d_hi, Int w_lo, Int w_hi);

BigradedObject random_bigraded(std::mt19937_64& rng, Int max_entries, Int d_lo, Int d_hi,
                               Int w_lo, Int w_hi);
QuiverObject random_quiver_object(std::mt19937_64& rng, Int vertices, Int max_summands,
                                  Int s_lo, Int s_hi);

}  // namespace heartglue
