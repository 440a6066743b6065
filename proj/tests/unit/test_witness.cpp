#include <doctest.h>

#include <filesystem>

#include "../oracles.hpp"
#include "polypair/error.hpp"
#include "polypair/witness.hpp"

using namespace polypair;

TEST_SUITE("witness") {

TEST_CASE("plan and execute small pairs") {
    for (auto [f0, f03] : std::vector<FlagPair>{{5, 20}, {7, 35}, {9, 53}, {10, 60}, {12, 90}}) {
        CAPTURE(f0);
        CAPTURE(f03);
        auto r = plan(f0, f03);
        auto ex = execute(r);
        CHECK(ex.ok());
        CHECK(ex.polytope.pair() == FlagPair{f0, f03});
    }
}

TEST_CASE("exceptional pairs have no plan") {
    try {
        plan(6, 24);
        FAIL("expected PlanFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PlanFailure);
    }
    CHECK_THROWS_AS(plan(9, 2 * 9 * 6 - 13), Error);
}

TEST_CASE("recipe json round trip") {
    Recipe r{"P1", {Op::StackSimplexFacet, Op::TruncateSimpleVertex, Op::Dualize}, {11, 59}};
    CHECK(Recipe::from_json(r.to_json()) == r);
    CHECK(r.id() == "P1+stack_simplex+truncate_simple+dualize");
    CHECK_THROWS_AS(Recipe::from_json("{\"seed\":\"P1\",\"ops\":[\"fly\"],\"expected\":[1,2]}"), Error);
    CHECK_THROWS_AS(Recipe::from_json("not json"), Error);
}

TEST_CASE("step preconditions") {
    Recipe r{"C4(7)", {Op::TruncateSimpleVertex}, {10, 68}};
    try {
        execute(r);
        FAIL("expected StepPreconditionFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepPreconditionFailure);
    }
    CHECK_THROWS_AS(resolve_seed("nope"), Error);
}

TEST_CASE("dual plans") {
    auto r = plan_dual(8, 50);
    auto ex = execute(r);
    CHECK(ex.ok());
    CHECK(ex.polytope.num_facets() == 8);
}

TEST_CASE("lower base pairs") {
    auto pairs = lower_base_pairs();
    CHECK(pairs.size() == 87);
    int with_plan = 0;
    for (auto [f0, f03] : pairs)
        if (membership4(PairKind::F0F03, f0, f03).verdict == Verdict::Polytopal && f0 >= 9) {
            auto loc = classify_local(execute(plan(f0, f03)).polytope);
            CHECK(loc.has_simplex_facet());
            CHECK(loc.has_simple_vertex());
            ++with_plan;
        }
    CHECK(with_plan == 75);
}

TEST_CASE("upper region dead ends are exceptional") {
    for (std::int64_t n = 8; n <= 20; ++n)
        for (auto i : upper_dead_ends(n))
            CHECK(membership4(PairKind::F0F03, n + 1, 2 * n * (n - 3) + i).verdict == Verdict::Exceptional);
}

TEST_CASE("upper region plans") {
    for (std::int64_t f0 = 9; f0 <= 30; ++f0) {
        std::int64_t n = f0 - 1;
        for (std::int64_t b = 2 * n * (n - 3); b <= 2 * f0 * (f0 - 3); ++b)
            if (oracle::f0f03_polytopal(f0, b)) CHECK_NOTHROW(plan(f0, b));
    }
}

TEST_CASE("cache") {
    auto dir = std::filesystem::temp_directory_path() / "polypair_cache_test";
    std::filesystem::remove_all(dir);
    WitnessCache cache(dir.string());
    CHECK_FALSE(cache.load(PairKind::F0F03, 7, 35).has_value());
    auto r = plan(7, 35);
    cache.store(PairKind::F0F03, 7, 35, execute(r).polytope, r);
    auto loaded = cache.load(PairKind::F0F03, 7, 35);
    REQUIRE(loaded.has_value());
    CHECK(loaded->pair() == FlagPair{7, 35});
    CHECK(cache.path(PairKind::F0F03, 7, 35) == (dir / "f0f03" / "7_35.facets").string());
    std::filesystem::remove_all(dir);
}

TEST_CASE("region scan") {
    auto cells = region_scan(PairKind::F0F03, default_bounds(PairKind::F0F03, 40), true);
    for (const auto& c : cells) {
        CHECK((c.status.verdict == Verdict::Polytopal) == oracle::f0f03_polytopal(c.a, c.b));
        if (c.status.verdict == Verdict::Polytopal) {
            CHECK(!c.recipe_id.empty());
            CHECK(c.witness_verified);
        }
    }
}

}
