#include "heartglue/model.hpp"

#include <algorithm>

namespace heartglue {

BigradedObject BigradedObject::of(std::vector<BigradedEntry> raw) {
    for (const auto& e : raw)
        if (e.mult <= 0) throw std::invalid_argument("bigraded object: multiplicity must be positive");
    std::sort(raw.begin(), raw.end(), [](const BigradedEntry& x, const BigradedEntry& y) {
        return std::pair{x.degree, x.weight} > std::pair{y.degree, y.weight};
    });
    BigradedObject out;
    for (const auto& e : raw) {
        if (!out.entries.empty() && out.entries.back().degree == e.degree &&
            out.entries.back().weight == e.weight)
            out.entries.back().mult += e.mult;
        else
            out.entries.push_back(e);
    }
    return out;
}

BigradedObject BigradedObject::shifted(Int k) const {
    BigradedObject out = *this;
    for (auto& e : out.entries) e.degree += k;
    return out;
}

SupportObject BigradedObject::support() const {
    std::vector<std::pair<Elem, Int>> raw;
    for (const auto& e : entries) raw.emplace_back(bigraded_label(e), e.mult);
    return SupportObject::of(z_lex_zhat(), std::move(raw));
}

std::string BigradedObject::str() const {
    if (entries.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += " + ";
        s += "S(" + std::to_string(entries[i].degree) + "," + std::to_string(entries[i].weight) + ")";
        if (entries[i].mult > 1) s += "^" + std::to_string(entries[i].mult);
    }
    return s;
}

BigradedObject direct_sum(const BigradedObject& x, const BigradedObject& y) {
    std::vector<BigradedEntry> raw = x.entries;
    raw.insert(raw.end(), y.entries.begin(), y.entries.end());
    return BigradedObject::of(std::move(raw));
}

Int hom_dimension(const BigradedObject& x, const BigradedObject& y, Int n) {
    // Hom(S(a), S(b)[n]) = k iff b + (n, 0) = a
    Int dim = 0;
    for (const auto& e : x.entries)
        for (const auto& f : y.entries)
            if (f.degree + n == e.degree && f.weight == e.weight) dim += e.mult * f.mult;
    return dim;
}

QuiverObject QuiverObject::of(Int vertices, std::vector<QuiverSummand> raw) {
    if (vertices < 1) throw std::invalid_argument("quiver: needs at least one vertex");
    for (const auto& s : raw) {
        if (s.mult <= 0) throw std::invalid_argument("quiver object: multiplicity must be positive");
        if (s.a < 1 || s.a > s.b || s.b > vertices)
            throw std::domain_error("quiver object: interval [" + std::to_string(s.a) + "," +
                                    std::to_string(s.b) + "] out of range");
    }
    std::sort(raw.begin(), raw.end(), [](const QuiverSummand& x, const QuiverSummand& y) {
        return std::tuple{x.shift, x.a, x.b} > std::tuple{y.shift, y.a, y.b};
    });
    QuiverObject out;
    out.vertices = vertices;
    for (const auto& s : raw) {
        if (!out.summands.empty() && out.summands.back().a == s.a && out.summands.back().b == s.b &&
            out.summands.back().shift == s.shift)
            out.summands.back().mult += s.mult;
        else
            out.summands.push_back(s);
    }
    return out;
}

QuiverObject QuiverObject::shifted(Int k) const {
    QuiverObject out = *this;
    for (auto& s : out.summands) s.shift += k;
    return out;
}

SupportObject QuiverObject::support() const {
    std::vector<std::pair<Elem, Int>> raw;
    for (const auto& s : summands) raw.emplace_back(quiver_label(s), s.mult);
    return SupportObject::of(z_lex_zhat(), std::move(raw));
}

std::string QuiverObject::str() const {
    if (summands.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " + ";
        s += "M[" + std::to_string(summands[i].a) + "," + std::to_string(summands[i].b) + "]";
        if (summands[i].shift != 0) s += "[" + std::to_string(summands[i].shift) + "]";
        if (summands[i].mult > 1) s += "^" + std::to_string(summands[i].mult);
    }
    return s;
}

QuiverObject direct_sum(const QuiverObject& x, const QuiverObject& y) {
    Int vertices = std::max(x.vertices, y.vertices);
    std::vector<QuiverSummand> raw = x.summands;
    raw.insert(raw.end(), y.summands.begin(), y.summands.end());
    return QuiverObject::of(vertices, std::move(raw));
}

Int interval_hom(Int a, Int b, Int c, Int d) { return (a <= c && c <= b && b <= d) ? 1 : 0; }

Int interval_ext1(Int a, Int b, Int c, Int d) { return (c < a && a <= d + 1 && d + 1 <= b) ? 1 : 0; }

namespace {

/// Kernel dimension of an integer matrix by fraction-free elimination.
Int kernel_dim(std::vector<std::vector<Int>> m, Int cols) {
    Int rank = 0;
    size_t row = 0;
    for (Int col = 0; col < cols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][static_cast<size_t>(col)] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            Int num = m[r][static_cast<size_t>(col)], den = m[row][static_cast<size_t>(col)];
            if (num == 0) continue;
            for (Int c2 = 0; c2 < cols; ++c2)
                m[r][static_cast<size_t>(c2)] =
                    m[r][static_cast<size_t>(c2)] * den - m[row][static_cast<size_t>(c2)] * num;
        }
        ++rank;
        ++row;
    }
    return cols - rank;
}

Int matrix_module_hom(Int vertices, Int a, Int b, Int c, Int d) {
    if (a > b || c > d) return 0;  // one side is the zero module
    // variables: one scalar per vertex in both supports
    std::vector<Int> var_of(static_cast<size_t>(vertices) + 1, -1);
    Int vars = 0;
    for (Int i = std::max(a, c); i <= std::min(b, d); ++i) var_of[static_cast<size_t>(i)] = vars++;
    if (vars == 0) return 0;
    std::vector<std::vector<Int>> rows;
    // arrows i+1 -> i; the square at the arrow lives in Hom(M_{i+1}, N_i)
    for (Int i = 1; i < vertices; ++i) {
        bool m_arrow = (a <= i && i + 1 <= b);
        bool n_arrow = (c <= i && i + 1 <= d);
        bool hom_space = (a <= i + 1 && i + 1 <= b) && (c <= i && i <= d);
        if (!hom_space) continue;
        std::vector<Int> row(static_cast<size_t>(vars), 0);
        if (m_arrow && var_of[static_cast<size_t>(i)] >= 0)
            row[static_cast<size_t>(var_of[static_cast<size_t>(i)])] += 1;
        if (n_arrow && var_of[static_cast<size_t>(i + 1)] >= 0)
            row[static_cast<size_t>(var_of[static_cast<size_t>(i + 1)])] -= 1;
        rows.push_back(std::move(row));
    }
    return kernel_dim(std::move(rows), vars);
}

}  // namespace

Int matrix_interval_hom(Int vertices, Int a, Int b, Int c, Int d) {
    return matrix_module_hom(vertices, a, b, c, d);
}

Int matrix_interval_ext1(Int vertices, Int a, Int b, Int c, Int d) {
    // 0 -> P_{a-1} -> P_b -> M[a,b] -> 0 with P_j = M[1, j]
    Int from_tail = matrix_module_hom(vertices, 1, a - 1, c, d);
    Int from_cover = matrix_module_hom(vertices, 1, b, c, d);
    Int from_self = matrix_module_hom(vertices, a, b, c, d);
    return from_tail - from_cover + from_self;
}

Int hom_dimension(const QuiverObject& x, const QuiverObject& y, Int n) {
    Int dim = 0;
    for (const auto& s : x.summands)
        for (const auto& t : y.summands) {
            Int degree = t.shift + n - s.shift;
            if (degree == 0)
                dim += s.mult * t.mult * interval_hom(s.a, s.b, t.a, t.b);
            else if (degree == 1)
                dim += s.mult * t.mult * interval_ext1(s.a, s.b, t.a, t.b);
        }
    return dim;
}

Tower<BigradedObject> hn_tower(const BigradedObject& x) {
    Tower<BigradedObject> t;
    for (const auto& e : x.entries)
        t.factors.push_back({bigraded_label(e), BigradedObject::of({e})});
    return t;
}

Tower<QuiverObject> hn_tower(const QuiverObject& x) {
    Tower<QuiverObject> t;
    for (const auto& s : x.summands) {
        Elem label = quiver_label(s);
        if (!t.factors.empty() && t.factors.back().label == label)
            t.factors.back().piece = direct_sum(t.factors.back().piece, QuiverObject::of(x.vertices, {s}));
        else
            t.factors.push_back({label, QuiverObject::of(x.vertices, {s})});
    }
    return t;
}

TStructureReport verify_t_structure(const SliceSystem& s, const ZSetMap& f, const Cut& cut,
                                    const std::vector<BigradedObject>& samples) {
    TStructureReport report;
    const ZToset& jp = f.codomain();
    std::vector<std::pair<BigradedObject, BigradedObject>> parts;
    for (const BigradedObject& x : samples) parts.push_back(truncate(x, f, s, cut));

    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& [xu, xl] = parts[i];
        // the upper class absorbs the shift
        for (const auto& e : xu.entries) {
            Elem moved = s.index.shift(bigraded_label(e), 1);
            if (!cut.in_upper(jp, f.apply(moved))) {
                report.upper_shift_closed = false;
                report.failures.push_back("shift leaves the upper class at label " + moved.str());
            }
        }
        if (!(direct_sum(xu, xl) == samples[i])) {
            report.decompositions_ok = false;
            report.failures.push_back("object " + samples[i].str() + " does not decompose");
        }
    }
    for (const auto& [xu, xl_unused] : parts)
        for (const auto& [yu_unused, yl] : parts) {
            for (const auto& e : xu.entries)
                for (const auto& g : yl.entries)
                    if (!s.orthogonal(bigraded_label(e), bigraded_label(g), 0)) {
                        report.cross_orthogonal = false;
                        report.failures.push_back("oracle admits Hom(" + bigraded_label(e).str() +
                                                  ", " + bigraded_label(g).str() + ")");
                    }
            if (hom_dimension(xu, yl, 0) != 0) {
                report.cross_hom_zero = false;
                report.failures.push_back("nonzero model Hom from " + xu.str() + " to " + yl.str());
            }
        }
    return report;
}

std::vector<BigradedObject> enumerate_bigraded(Int max_entries, Int d_lo, Int d_hi, Int w_lo, Int w_hi) {
    std::vector<Elem> slots;
    for (Int d = d_lo; d <= d_hi; ++d)
        for (Int w = w_lo; w <= w_hi; ++w) slots.push_back(elem(d, w));
    std::vector<BigradedObject> out;
    std::vector<BigradedEntry> cur;
    auto rec = [&](auto&& self, size_t slot, Int budget) -> void {
        out.push_back(BigradedObject::of(cur));
        if (budget == 0 || slot == slots.size()) return;
        for (size_t i = slot; i < slots.size(); ++i) {
            cur.push_back({slots[i][0], slots[i][1], 1});
            self(self, i, budget - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_entries);
    return out;
}

BigradedObject random_bigraded(std::mt19937_64& rng, Int max_entries, Int d_lo, Int d_hi,
                               Int w_lo, Int w_hi) {
    std::uniform_int_distribution<Int> count(0, max_entries);
    std::uniform_int_distribution<Int> deg(d_lo, d_hi), wt(w_lo, w_hi);
    std::vector<BigradedEntry> raw;
    for (Int i = 0, k = count(rng); i < k; ++i) raw.push_back({deg(rng), wt(rng), 1});
    return BigradedObject::of(std::move(raw));
}

QuiverObject random_quiver_object(std::mt19937_64& rng, Int vertices, Int max_summands,
                                  Int s_lo, Int s_hi) {
    std::uniform_int_distribution<Int> count(0, max_summands);
    std::uniform_int_distribution<Int> vert(1, vertices), sh(s_lo, s_hi);
    std::vector<QuiverSummand> raw;
    for (Int i = 0, k = count(rng); i < k; ++i) {
        Int a = vert(rng), b = vert(rng);
        if (a > b) std::swap(a, b);
        raw.push_back({a, b, sh(rng), 1});
    }
    return QuiverObject::of(vertices, std::move(raw));
}

}  // namespace heartglue
