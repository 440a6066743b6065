#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polypair/incidence.hpp"

namespace polypair {

// Line format: optional "dim=<d>" (or a lone integer) header, one facet per
// line as space-separated ids, '#' comments. Text containing '[' is handed to
// the bracket parser.
VertexFacetIncidence parse_facet_list(std::string_view text, int default_dim = 4);

// Concatenated "[digits]" groups, whitespace ignored; each digit is a vertex id.
VertexFacetIncidence parse_bracket_format(std::string_view text, int dim = 4);

// One bracket-format polytope per non-empty line.
std::vector<VertexFacetIncidence> parse_bracket_lines(std::string_view text, int dim = 4);

std::string serialize(const VertexFacetIncidence& p, std::string_view comment = {});
std::string serialize_bracket(const VertexFacetIncidence& p);

VertexFacetIncidence read_facet_file(const std::string& path);
void write_facet_file(const std::string& path, const VertexFacetIncidence& p, std::string_view comment = {});

} // namespace polypair
