#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tc {

// Full command-line surface.  Subcommands: quandle check|info|galex|conj|homog,
// cocycle extract|check, psi, symmetry, sweep.  Writes results to out and a
// single "error: <Kind>: <witness>" diagnostic to err on failure.  Returns
// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tc
