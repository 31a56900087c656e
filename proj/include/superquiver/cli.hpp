#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "superquiver/quiver.hpp"
#include "superquiver/roots.hpp"

namespace superquiver {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_domain_error = 3,
};

/// Runs the command line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Simple system from a --simple value: "" or "default" (distinguished),
/// "st:S/T" or "st:S/T/-" with comma-separated breakpoints (e.g.
/// "st:1,2/1,2"), or "refl:i,j,..." (1-based reflections applied to the
/// distinguished system).
SimpleSystem parse_simple_system(const SuperRootSystem& rs, const std::string& text);

}  // namespace superquiver
