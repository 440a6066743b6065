#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polypair/incidence.hpp"

namespace polypair {

struct SeedEntry {
    std::string name;
    VertexFacetIncidence incidence;
    std::pair<std::int64_t, std::int64_t> expected_pair;
    std::string source;
};

/// Throws Error(UnknownSeed).
const SeedEntry& load_seed(const std::string& name);
std::vector<std::string> seed_names();

/// The 27 reference facet lists in bracket format, index 0 = P1.
const std::vector<std::string>& reference_facet_lists();

/// One row of the small-pair table: the pair, the seed realizing it and the
/// block it is listed in.
struct TableRow {
    std::int64_t f0;
    std::int64_t f03;
    std::string seed;
    bool simplex_facet;
    bool simple_vertex;
};
const std::vector<TableRow>& small_pair_rows();

} // namespace polypair
