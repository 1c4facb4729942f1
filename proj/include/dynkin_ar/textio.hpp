#pragma once

// Text front door shared by the command-line tool and the report layer:
// parsers for quiver, partition, and monomial specs, the canonical text
// renderings used inside reports, and small CSV/table helpers. JSON assembly
// lives with the report types.

#include <string>
#include <vector>

#include "dynkin_ar/kostant.hpp"
#include "dynkin_ar/minors.hpp"
#include "dynkin_ar/rootsys.hpp"

namespace dar {

// `orientation` is a preset name ("linear", "bipartite") or an explicit arrow
// list like "1>2,3>2" covering every diagram edge exactly once.
Quiver quiver_from_text(const std::string& type, const std::string& orientation);

// A root written either as coordinates "a1,...,an" or, in type A, as a
// segment "[i,j]". Returns the word position of that positive root.
int parse_root_text(const RootSystem& rs, const std::string& text);

// Canonical rendering: segment form in type A, coordinates otherwise.
std::string root_text(const RootSystem& rs, int position);

// "tau-orbit base=<root> len=<k>"
TauOrbitPartition parse_tau_orbit_text(const RootSystem& rs, const std::string& text);
std::string tau_orbit_text(const RootSystem& rs, const TauOrbitPartition& p);

// "parts=[<root>;<root>;...]"
KostantPartition parse_kostant_text(const RootSystem& rs, const std::string& text);

// "D(j,l)^e * D(j',l')^e'" with "^e" optional (defaults to 1).
ClusterMonomial parse_monomial_text(const RootSystem& rs, const std::string& text);

std::string csv_escape(const std::string& s);
std::string csv_line(const std::vector<std::string>& cells);

// Fixed-width text table with a header row and a dashed rule.
std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace dar
