#pragma once

#include <variant>

#include "heartglue/model.hpp"

namespace heartglue {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- value (de)serialization; all output is deterministic ----

std::string perversity_to_json(const Perversity& p);
Perversity perversity_from_json(const std::string& text);

std::string upperset_to_json(const UpperSet2D& u);
UpperSet2D upperset_from_json(const std::string& text);

std::string support_to_json(const SupportObject& x);

/// Shorthand accepted on the command line: a name (zero, identity, middle,
/// chi:k, +inf, -inf), inline JSON, or @file.
Perversity parse_perversity_spec(const std::string& spec);
UpperSet2D parse_upperset_spec(const std::string& spec);

// ---- check manifests ----

struct OracleSpec {
    std::string kind;                       // koszul, semisimple, table, beilinson-soule,
                                            // coherent-support, torsion-pair, quiver,
                                            // semiorthogonal-pair
    Int dim = 3;                            // coherent-support
    Int vertices = 2;                       // quiver
    bool vanishing = true;                  // beilinson-soule / semiorthogonal-pair
    std::vector<std::array<Int, 3>> planted;  // beilinson-soule
    std::string table_path;                 // table
    std::string table_inline;               // table, JSON text
};

struct MapSpec {
    std::string name;  // exchange, alpha, beta, beta-inverse, gamma, g, projection-first, identity
    std::optional<Perversity> p;
};

struct Manifest {
    std::string label_space = "Z_lex_Zhat";  // or Zhat_lex_Z, interval01_lex_Z
    OracleSpec oracle;
    HeartWindow window;
    std::optional<MapSpec> map;
    std::vector<BigradedObject> objects;
};

Manifest manifest_from_json(const std::string& text);
Manifest load_manifest(const std::string& path);

ZToset label_space_of(const Manifest& m);
SliceSystem system_of(const Manifest& m);
ZSetMap map_of(const MapSpec& spec, const ZToset& domain);

/// Table oracle file: {labels:{lo,hi}, default, entries:[[phi,psi,n,flag]]}.
std::shared_ptr<TableOracle> table_oracle_from_json(const std::string& text);

/// HEARTGLUE_WINDOW accepts "k" for [-k, k] or "lo:hi".
HeartWindow window_from_env(HeartWindow fallback);

std::string read_file(const std::string& path);

}  // namespace heartglue
