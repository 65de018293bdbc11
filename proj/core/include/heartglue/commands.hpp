#pragma once

#include "heartglue/io.hpp"

namespace heartglue {

struct CmdResult {
    int exit_code = 0;
    std::string out;
};

// Exit codes across all commands: 0 success / predicate holds,
// 1 predicate fails (a witness is printed), 2 input error.

CmdResult cmd_perv_enumerate(Int n_lo, Int n_hi, Int v_lo, Int v_hi);

/// route "direct": the image of the upper graph under the shear
/// (inverted by from-upperset --route graph); route "op": the
/// complement-of-opposite parametrization (inverted by the default
/// from-upperset).
CmdResult cmd_perv_to_upperset(const Perversity& p, const std::string& route = "direct");

/// route "op" (default): reads the perversity off the opposite complement,
/// inverse of to-upperset --route op; route "graph": antidiagonal sections,
/// inverse of the default to-upperset.
CmdResult cmd_perv_from_upperset(const UpperSet2D& u, const std::string& route = "op");
CmdResult cmd_perv_act(const Perversity& p, const std::string& op, Int k);
CmdResult cmd_perv_compare(const Perversity& p, const Perversity& q);
CmdResult cmd_perv_is_strict(const Perversity& p);

CmdResult cmd_check(const std::string& which, const Manifest& manifest);

CmdResult cmd_heart(const Manifest& manifest, const Perversity& p,
                    const std::vector<BigradedObject>& objects);

CmdResult cmd_push(const Manifest& manifest, const MapSpec& map, const SupportObject& support);

struct PlotOptions {
    Int n_lo = -8, n_hi = 8, m_lo = -8, m_hi = 8;
    std::string format = "ascii";  // or "svg"
};

CmdResult cmd_plot(const UpperSet2D& u, const PlotOptions& opts);

struct DemoOptions {
    Int k = 0;        // torsion-tilt
    Int dim = 3;      // coherent
    HeartWindow window;
};

/// Scenario walkthroughs: koszul, motives, coherent, torsion-tilt, bbd-gluing.
CmdResult cmd_demo(const std::string& name, const DemoOptions& opts);

}  // namespace heartglue
