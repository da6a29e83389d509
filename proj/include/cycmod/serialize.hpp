#pragma once

// Pinned wire formats: module JSON {p,n,d,T,generator_marks} with row-major
// residue arrays, graph JSON {vertices:[{basis,rep}],edges:[[i,j]],marked},
// canonical DOT, and the search report CSV (header row, UTF-8, LF). Loaders
// re-validate every invariant and report the offending path.

#include <string>

#include "cycmod/towers.hpp"
#include "cycmod/zdomain.hpp"

namespace cycmod {

std::string module_to_json(const AModule& m);
AModule module_from_json(const std::string& text);

std::string graph_to_json(const CycGraph& g);
std::string graph_to_json(const ZGraph& g);

std::string graph_to_dot(const CycGraph& g);
std::string graph_to_dot(const ZGraph& g);

std::string search_to_csv(const SearchReport& rep);
std::string search_to_json(const SearchReport& rep);

std::string thm31_to_text(const Thm31Report& rep);

std::string seq_to_string(const std::vector<u32>& terms); // "2.2.1", empty = "-"
std::vector<u32> seq_from_string(const std::string& s);

} // namespace cycmod
