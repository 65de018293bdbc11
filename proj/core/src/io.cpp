#include "heartglue/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace heartglue {

using nlohmann::json;

namespace {

json tail_to_json(const Tail& t) { return json{{"T", t.period}, {"S", t.shift}}; }

Tail tail_from_json(const json& j) {
    if (!j.is_object() || !j.contains("T") || !j.contains("S"))
        throw ParseError("tail: expected an object with fields T and S");
    return {j.at("T").get<Int>(), j.at("S").get<Int>()};
}

json perversity_to_value(const Perversity& p) {
    if (p.infinity() == Perversity::Inf::plus) return "+inf";
    if (p.infinity() == Perversity::Inf::minus) return "-inf";
    const StepFunction& f = p.steps();
    return json{{"anchor", f.anchor},
                {"values", f.values},
                {"left_tail", tail_to_json(f.left)},
                {"right_tail", tail_to_json(f.right)}};
}

std::optional<Perversity> named_perversity(const std::string& s) {
    if (s == "zero") return Perversity::zero();
    if (s == "identity") return Perversity::identity();
    if (s == "middle") return Perversity::middle();
    if (s == "+inf") return Perversity::pos_inf();
    if (s == "-inf") return Perversity::neg_inf();
    if (s.rfind("chi:", 0) == 0) return Perversity::chi_upper(std::stoll(s.substr(4)));
    if (s.rfind("const:", 0) == 0) return Perversity::constant(std::stoll(s.substr(6)));
    return std::nullopt;
}

Perversity perversity_from_value(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (auto p = named_perversity(s)) return *p;
        throw ParseError("perversity: unknown literal '" + s + "'");
    }
    if (!j.is_object()) throw ParseError("perversity: expected an object or '+inf'/'-inf'");
    for (const char* field : {"anchor", "values", "left_tail", "right_tail"})
        if (!j.contains(field)) throw ParseError(std::string("perversity: missing field ") + field);
    StepFunction f;
    f.anchor = j.at("anchor").get<Int>();
    f.values = j.at("values").get<std::vector<Int>>();
    f.left = tail_from_json(j.at("left_tail"));
    f.right = tail_from_json(j.at("right_tail"));
    try {
        return Perversity::finite(std::move(f));
    } catch (const std::exception& e) {
        throw ParseError(std::string("perversity: ") + e.what());
    }
}

json upperset_to_value(const UpperSet2D& u) {
    const Boundary& b = u.boundary();
    switch (b.form) {
        case Boundary::Form::all_plus_inf: return json{{"kind", "empty"}};
        case Boundary::Form::all_minus_inf: return json{{"kind", "full"}};
        case Boundary::Form::vertical: return json{{"kind", "half-plane"}, {"cut", b.cut}};
        default: {
            json breakpoints = json::array();
            for (size_t i = 0; i < b.core.values.size(); ++i)
                breakpoints.push_back({b.core.anchor + static_cast<Int>(i), b.core.values[i]});
            json left = b.left_plus_inf ? json("+inf") : tail_to_json(b.core.left);
            json right = b.right_minus_inf ? json("-inf") : tail_to_json(b.core.right);
            return json{{"kind", "staircase"},
                        {"left", left},
                        {"breakpoints", breakpoints},
                        {"right", right}};
        }
    }
}

UpperSet2D upperset_from_value(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("upper set: expected an object with a 'kind' field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return UpperSet2D::empty();
    if (kind == "full") return UpperSet2D::full();
    if (kind == "half-plane") {
        if (!j.contains("cut")) throw ParseError("upper set: half-plane needs a 'cut' field");
        return UpperSet2D::half_plane(j.at("cut").get<Int>());
    }
    if (kind != "staircase") throw ParseError("upper set: unknown kind '" + kind + "'");
    for (const char* field : {"left", "breakpoints", "right"})
        if (!j.contains(field)) throw ParseError(std::string("upper set: missing field ") + field);
    Boundary b;
    b.form = Boundary::Form::staircase;
    const json& bp = j.at("breakpoints");
    if (!bp.is_array() || bp.empty()) throw ParseError("upper set: breakpoints must be nonempty");
    for (size_t i = 0; i < bp.size(); ++i) {
        Int n = bp[i].at(0).get<Int>(), v = bp[i].at(1).get<Int>();
        if (i == 0) b.core.anchor = n;
        if (n != b.core.anchor + static_cast<Int>(i))
            throw ParseError("upper set: breakpoints must list consecutive columns");
        b.core.values.push_back(v);
    }
    if (j.at("left").is_string()) {
        if (j.at("left").get<std::string>() != "+inf")
            throw ParseError("upper set: left end must be '+inf' or a tail");
        b.left_plus_inf = true;
    } else {
        b.core.left = tail_from_json(j.at("left"));
    }
    if (j.at("right").is_string()) {
        if (j.at("right").get<std::string>() != "-inf")
            throw ParseError("upper set: right end must be '-inf' or a tail");
        b.right_minus_inf = true;
    } else {
        b.core.right = tail_from_json(j.at("right"));
    }
    try {
        return UpperSet2D::from_boundary(std::move(b));
    } catch (const std::exception& e) {
        throw ParseError(std::string("upper set: ") + e.what());
    }
}

json parse_document(const std::string& text, const std::string& expected_kind) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("kind") && j.contains("version")) {
        if (j.at("kind").get<std::string>() != expected_kind)
            throw ParseError("document kind is '" + j.at("kind").get<std::string>() +
                             "', expected '" + expected_kind + "'");
        if (j.at("version").get<Int>() != 1) throw ParseError("unsupported format version");
        return j.at("data");
    }
    return j;  // bare value form
}

std::string dump_document(const std::string& kind, const json& data) {
    json doc{{"version", 1}, {"kind", kind}, {"data", data}};
    return doc.dump(2) + "\n";
}

}  // namespace

std::string perversity_to_json(const Perversity& p) {
    return dump_document("perversity", perversity_to_value(p));
}

Perversity perversity_from_json(const std::string& text) {
    return perversity_from_value(parse_document(text, "perversity"));
}

std::string upperset_to_json(const UpperSet2D& u) {
    return dump_document("upperset", upperset_to_value(u));
}

UpperSet2D upperset_from_json(const std::string& text) {
    return upperset_from_value(parse_document(text, "upperset"));
}

std::string support_to_json(const SupportObject& x) {
    json items = json::array();
    for (const auto& [label, mult] : x.entries) {
        json coords = json::array();
        for (std::uint32_t i = 0; i < label.size; ++i) coords.push_back(label[i]);
        items.push_back({{"label", coords}, {"mult", mult}});
    }
    return dump_document("support", items);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Perversity parse_perversity_spec(const std::string& spec) {
    if (auto p = named_perversity(spec)) return *p;
    if (!spec.empty() && spec[0] == '@') return perversity_from_json(read_file(spec.substr(1)));
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '"')) return perversity_from_json(spec);
    throw ParseError("perversity: cannot parse '" + spec +
                     "' (expected a name, chi:k, const:c, inline JSON, or @file)");
}

UpperSet2D parse_upperset_spec(const std::string& spec) {
    if (spec == "empty") return UpperSet2D::empty();
    if (spec == "full") return UpperSet2D::full();
    if (spec.rfind("half-plane:", 0) == 0)
        return UpperSet2D::half_plane(std::stoll(spec.substr(11)));
    if (!spec.empty() && spec[0] == '@') return upperset_from_json(read_file(spec.substr(1)));
    if (!spec.empty() && spec[0] == '{') return upperset_from_json(spec);
    throw ParseError("upper set: cannot parse '" + spec +
                     "' (expected empty, full, half-plane:c, inline JSON, or @file)");
}

std::shared_ptr<TableOracle> table_oracle_from_json(const std::string& text) {
    json data = parse_document(text, "ext-table");
    for (const char* field : {"labels", "default", "entries"})
        if (!data.contains(field)) throw ParseError(std::string("ext-table: missing field ") + field);
    Int lo = data.at("labels").at("lo").get<Int>();
    Int hi = data.at("labels").at("hi").get<Int>();
    std::string def = data.at("default").get<std::string>();
    if (def != "vanish" && def != "nonvanish")
        throw ParseError("ext-table: default must be 'vanish' or 'nonvanish'");
    auto oracle = std::make_shared<TableOracle>(lo, hi, def == "vanish");
    for (const json& e : data.at("entries")) {
        std::string flag = e.at(3).get<std::string>();
        if (flag != "vanish" && flag != "nonvanish")
            throw ParseError("ext-table: entry flag must be 'vanish' or 'nonvanish'");
        oracle->set(e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>(), flag == "vanish");
    }
    return oracle;
}

Manifest manifest_from_json(const std::string& text) {
    json data = parse_document(text, "manifest");
    Manifest m;
    if (data.contains("label_space")) m.label_space = data.at("label_space").get<std::string>();
    if (data.contains("window")) {
        const json& w = data.at("window");
        m.window.w_lo = w.at("lo").get<Int>();
        m.window.w_hi = w.at("hi").get<Int>();
        if (w.contains("nmax")) m.window.n_max = w.at("nmax").get<Int>();
        if (m.window.w_lo > m.window.w_hi) throw ParseError("manifest: empty window");
    }
    if (!data.contains("oracle")) throw ParseError("manifest: missing field oracle");
    const json& o = data.at("oracle");
    m.oracle.kind = o.at("kind").get<std::string>();
    if (o.contains("dim")) m.oracle.dim = o.at("dim").get<Int>();
    if (o.contains("vertices")) m.oracle.vertices = o.at("vertices").get<Int>();
    if (o.contains("vanishing")) m.oracle.vanishing = o.at("vanishing").get<bool>();
    if (o.contains("preset")) {
        std::string preset = o.at("preset").get<std::string>();
        if (preset == "number-field")
            m.oracle.vanishing = true;
        else
            throw ParseError("manifest: unknown preset '" + preset + "'");
    }
    if (o.contains("planted"))
        for (const json& e : o.at("planted"))
            m.oracle.planted.push_back({e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>()});
    if (o.contains("path")) m.oracle.table_path = o.at("path").get<std::string>();
    if (o.contains("table")) m.oracle.table_inline = o.at("table").dump();
    if (data.contains("map")) {
        MapSpec spec;
        spec.name = data.at("map").at("name").get<std::string>();
        if (data.at("map").contains("p"))
            spec.p = perversity_from_value(data.at("map").at("p"));
        m.map = std::move(spec);
    }
    if (data.contains("objects"))
        for (const json& item : data.at("objects")) {
            std::vector<BigradedEntry> entries;
            for (const json& e : item.at("entries"))
                entries.push_back({e.at(0).get<Int>(), e.at(1).get<Int>(), e.at(2).get<Int>()});
            m.objects.push_back(BigradedObject::of(std::move(entries)));
        }
    return m;
}

Manifest load_manifest(const std::string& path) { return manifest_from_json(read_file(path)); }

ZToset label_space_of(const Manifest& m) {
    if (m.label_space == "Z_lex_Zhat") return z_lex_zhat();
    if (m.label_space == "Zhat_lex_Z") return zhat_lex_z();
    if (m.label_space == "Z_lex_Z") return z_lex_z();
    if (m.label_space == "interval01_lex_Z")
        return ZToset::lex(ZToset::interval(0, 1), ZToset::integers());
    throw ParseError("manifest: unknown label_space '" + m.label_space + "'");
}

SliceSystem system_of(const Manifest& m) {
    const OracleSpec& o = m.oracle;
    std::shared_ptr<const Oracle> oracle;
    std::string space = m.label_space;
    if (o.kind == "koszul") {
        oracle = std::make_shared<KoszulOracle>();
    } else if (o.kind == "semisimple") {
        oracle = std::make_shared<SemisimpleOracle>();
    } else if (o.kind == "torsion-pair") {
        oracle = std::make_shared<TorsionPairOracle>();
    } else if (o.kind == "coherent-support") {
        oracle = std::make_shared<CoherentSupportOracle>(o.dim);
    } else if (o.kind == "quiver") {
        oracle = std::make_shared<QuiverOracle>(o.vertices);
    } else if (o.kind == "beilinson-soule") {
        auto bs = std::make_shared<BeilinsonSouleOracle>(o.vanishing);
        for (const auto& e : o.planted) bs->plant_nonzero(e[0], e[1], e[2]);
        oracle = bs;
        space = "Zhat_lex_Z";
    } else if (o.kind == "semiorthogonal-pair") {
        oracle = std::make_shared<SemiorthogonalPairOracle>(o.vanishing);
        space = "interval01_lex_Z";
    } else if (o.kind == "table") {
        if (!o.table_path.empty())
            oracle = table_oracle_from_json(read_file(o.table_path));
        else if (!o.table_inline.empty())
            oracle = table_oracle_from_json(o.table_inline);
        else
            throw ParseError("manifest: table oracle needs a 'path' or an inline 'table'");
    } else {
        throw ParseError("manifest: unknown oracle kind '" + o.kind + "'");
    }
    Manifest fixed = m;
    fixed.label_space = space;
    return {label_space_of(fixed), std::move(oracle)};
}

ZSetMap map_of(const MapSpec& spec, const ZToset& domain) {
    if (spec.name == "identity") return ZSetMap::identity(domain);
    if (spec.name == "alpha") return ZSetMap::alpha();
    if (spec.name == "beta") return ZSetMap::beta();
    if (spec.name == "beta-inverse") return ZSetMap::beta_inverse();
    if (spec.name == "projection-first") return ZSetMap::projection_first(domain);
    if (spec.name == "exchange") {
        if (domain.kind() != ZToset::Kind::lex_product)
            throw ParseError("map: exchange needs a product label space");
        return ZSetMap::exchange(domain.left(), domain.right());
    }
    if (spec.name == "gamma" || spec.name == "g") {
        if (!spec.p) throw ParseError("map: '" + spec.name + "' needs a perversity");
        return spec.name == "gamma" ? ZSetMap::gamma(*spec.p) : ZSetMap::g(*spec.p);
    }
    throw ParseError("map: unknown name '" + spec.name + "'");
}

HeartWindow window_from_env(HeartWindow fallback) {
    const char* env = std::getenv("HEARTGLUE_WINDOW");
    if (!env) return fallback;
    std::string s(env);
    try {
        auto colon = s.find(':');
        if (colon == std::string::npos) {
            Int k = std::stoll(s);
            if (k < 0) throw ParseError("negative window");
            return {-k, k, fallback.n_max};
        }
        Int lo = std::stoll(s.substr(0, colon)), hi = std::stoll(s.substr(colon + 1));
        if (lo > hi) throw ParseError("empty window");
        return {lo, hi, fallback.n_max};
    } catch (const std::exception&) {
        throw ParseError("HEARTGLUE_WINDOW: expected 'k' or 'lo:hi', got '" + s + "'");
    }
}

}  // namespace heartglue
