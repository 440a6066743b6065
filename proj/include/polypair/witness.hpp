#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypair/characterize.hpp"
#include "polypair/incidence.hpp"

namespace polypair {

enum class Op { StackSimplexFacet, TruncateSimpleVertex, StackSquarePyramidFacet, SplitBipyramid, StackBeyondPair, Dualize };

std::string_view to_string(Op op);
std::optional<Op> parse_op(std::string_view name);

using FlagPair = std::pair<std::int64_t, std::int64_t>;

struct Recipe {
    std::string seed;  // seed name or family call: C4(n), R(i,n), delta_star(k,i,n), delta_star3_double(n), cyclic(d,n)
    std::vector<Op> ops;
    FlagPair expected{0, 0};
    PairKind kind = PairKind::F0F03;  // coordinates of `expected`: f0,f03 or f3,f03

    /// Compact identifier, e.g. "P1+stack_simplex+truncate_simple".
    std::string id() const;
    std::string to_json() const;
    static Recipe from_json(const std::string& text);

    friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Builds the polytope behind a seed reference.
VertexFacetIncidence resolve_seed(const std::string& ref);

/// Pair change an op is expected to cause on a 4-polytope.
FlagPair op_increment(Op op, const VertexFacetIncidence& before);

/// Applies one op to its lowest-index eligible facet or vertex. Throws
/// Error(StepPreconditionFailure) when nothing is eligible.
VertexFacetIncidence apply_op(const VertexFacetIncidence& p, Op op);

struct StepReport {
    Op op;
    FlagPair before;
    FlagPair after;
    FlagPair predicted_delta;
    bool checks_pass;
};

struct Execution {
    VertexFacetIncidence polytope;
    std::vector<StepReport> steps;
    CheckReport final_check;
    bool matches_expected = false;

    bool ok() const;
};

Execution execute(const Recipe& recipe);

/// A recipe realizing (f0, f03). Throws Error(PlanFailure) if the pair is not
/// polytopal or no construction is found.
Recipe plan(std::int64_t f0, std::int64_t f03);
/// Same for (f3, f03): the dual of a plan for (f3, f03).
Recipe plan_dual(std::int64_t f3, std::int64_t f03);

/// Pairs {f0 >= 8, 53 <= f03 <= 64, 4 f0 <= f03} used as stacking bases.
std::vector<FlagPair> lower_base_pairs();

/// Values i with (n+1, 2n(n-3)+i) listed as impossible in the upper region.
std::vector<std::int64_t> upper_dead_ends(std::int64_t n);

class WitnessCache {
public:
    /// Empty dir: $POLYPAIR_CACHE or ".polypair_cache".
    explicit WitnessCache(std::string dir = {});

    const std::string& dir() const noexcept { return dir_; }
    std::string path(PairKind kind, std::int64_t a, std::int64_t b) const;
    std::optional<VertexFacetIncidence> load(PairKind kind, std::int64_t a, std::int64_t b) const;
    void store(PairKind kind, std::int64_t a, std::int64_t b, const VertexFacetIncidence& p, const Recipe& recipe) const;

private:
    std::string dir_;
};

struct RegionCell {
    std::int64_t a;
    std::int64_t b;
    PairStatus status;
    std::string recipe_id;
    bool witness_verified = false;
};

struct RegionBounds {
    std::int64_t a_lo, a_hi, b_lo, b_hi;
};

/// Default rectangle for a kind: for f0,f03 every f0 with 4 f0 <= max_b.
RegionBounds default_bounds(PairKind kind, std::int64_t max_b);

/// Verdict for every cell; f0,f03 and f3,f03 polytopal cells carry a recipe id,
/// and with `witnesses` the recipe is executed, verified and cached.
std::vector<RegionCell> region_scan(PairKind kind, const RegionBounds& bounds, bool witnesses,
                                    const WitnessCache* cache = nullptr);

} // namespace polypair
