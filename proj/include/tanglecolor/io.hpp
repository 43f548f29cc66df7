#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tanglecolor/braid.hpp"
#include "tanglecolor/finite_group.hpp"
#include "tanglecolor/galex.hpp"
#include "tanglecolor/psi.hpp"
#include "tanglecolor/quandle.hpp"

namespace tc {

// Line-oriented ASCII formats; # starts a comment, labels are 1-based.
// Every reader validates what it returns and reports the first offense with
// a line number.  Files may hold several records.

std::vector<Quandle> read_quandles(std::istream& in, const std::string& origin = "input");
std::vector<FiniteGroup> read_groups(std::istream& in, const std::string& origin = "input");
std::vector<BraidWord> read_braids(std::istream& in, const std::string& origin = "input");

struct NamedPermGroup {
  std::string name;
  PermGroup group;
};
std::vector<NamedPermGroup> read_perm_groups(std::istream& in,
                                             const std::string& origin = "input");

// image rows; bind against a group with automorphism_from_images
struct RawAutomorphism {
  std::string name;
  std::vector<int> images;  // 0-based
};
std::vector<RawAutomorphism> read_automorphisms(std::istream& in,
                                                const std::string& origin = "input");

// cocycle table plus section, not yet tied to a base quandle or group
struct RawCocycle {
  std::string name;
  int base_order = 0;
  int coeff_order = 0;
  std::vector<int> table;    // 0-based coefficient indices
  std::vector<int> section;  // 0-based total-space elements
};
std::vector<RawCocycle> read_cocycles(std::istream& in, const std::string& origin = "input");

// Ties a raw table to its base quandle and coefficient group; validates the
// cocycle laws (InvalidCocycle on failure).
Cocycle bind_cocycle(const RawCocycle& raw, const Quandle& base, const FiniteGroup& coeff);

void write_quandle(std::ostream& out, const Quandle& q);
void write_group(std::ostream& out, const FiniteGroup& g);
void write_braid(std::ostream& out, const BraidWord& b);
void write_cocycle(std::ostream& out, const Cocycle& c);
void write_automorphism(std::ostream& out, const std::string& name,
                        const std::vector<int>& images);

// "1,0,0,4"
std::string format_counts(const std::vector<long long>& counts);

// Tab-separated sweep line for the requested symmetries (subset of m,r,rm):
// knot, quandle, psi=..., the requested psi_s=..., distinguishes=...
std::string report_line(const SymmetryReport& rep, const std::vector<std::string>& wanted);

// Resolves a path, falling back to $TANGLECOLOR_FIXTURES/<path> when the
// literal path does not exist.
std::string resolve_input_path(const std::string& path);

// convenience file readers
std::vector<Quandle> read_quandles_file(const std::string& path);
std::vector<FiniteGroup> read_groups_file(const std::string& path);
std::vector<BraidWord> read_braids_file(const std::string& path);
std::vector<NamedPermGroup> read_perm_groups_file(const std::string& path);
std::vector<RawAutomorphism> read_automorphisms_file(const std::string& path);
std::vector<RawCocycle> read_cocycles_file(const std::string& path);

}  // namespace tc
