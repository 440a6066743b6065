#include "polypair/witness.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include <json.hpp>

#include "polypair/constructions.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/io.hpp"
#include "polypair/seeds.hpp"

namespace polypair {

namespace {

constexpr std::array<std::pair<Op, std::string_view>, 6> kOpNames{{
    {Op::StackSimplexFacet, "stack_simplex"},
    {Op::TruncateSimpleVertex, "truncate_simple"},
    {Op::StackSquarePyramidFacet, "stack_square_pyramid"},
    {Op::SplitBipyramid, "split_bipyramid"},
    {Op::StackBeyondPair, "stack_beyond_pair"},
    {Op::Dualize, "dualize"},
}};

constexpr std::int64_t kBfsLimit = 80;

// Parses "name(a,b,...)" with exactly `count` integer arguments.
bool parse_call(const std::string& ref, std::string_view name, std::size_t count, std::vector<int>& args) {
    if (ref.size() < name.size() + 2 || ref.compare(0, name.size(), name) != 0) return false;
    if (ref[name.size()] != '(' || ref.back() != ')') return false;
    std::string body = ref.substr(name.size() + 1, ref.size() - name.size() - 2);
    args.clear();
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) return false;
        args.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return args.size() == count;
}

struct Base {
    std::string seed;
    std::int64_t f0;
    std::int64_t f03;
    bool simplex;
    bool simple;
};

const std::vector<Base>& table_bases() {
    static const std::vector<Base> bases = [] {
        std::vector<Base> out;
        for (const auto& row : small_pair_rows()) {
            auto loc = classify_local(load_seed(row.seed).incidence);
            out.push_back({row.seed, row.f0, row.f03, loc.has_simplex_facet(), loc.has_simple_vertex()});
        }
        return out;
    }();
    return bases;
}

// Cyclic-polytope families with f0 <= max_f0, in catalog order. Only the
// simplex facet is assumed; execution re-checks every precondition.
std::vector<Base> family_bases(std::int64_t max_f0) {
    std::vector<Base> out;
    for (int n = 6; n <= max_f0; ++n) {
        std::int64_t n64 = n;
        std::int64_t top = 2 * n64 * (n64 - 3);
        out.push_back({"C4(" + std::to_string(n) + ")", n64, top, true, false});
        if (n + 1 <= max_f0) {
            for (int j = 1; j <= n - 3; ++j)
                out.push_back({"R(" + std::to_string(j) + "," + std::to_string(n) + ")", n64 + 1, top + 4 * j + 8,
                               true, false});
            for (int k = 0; k <= 3; ++k)
                for (int i = 3; i <= n; ++i)
                    if (delta_legal(k, i, n))
                        out.push_back({"delta_star(" + std::to_string(k) + "," + std::to_string(i) + "," +
                                           std::to_string(n) + ")",
                                       n64 + 1, top + 4 * i - 3 * k, true, false});
        }
        if (n + 2 <= max_f0 && delta_legal(3, n - 3, n))
            out.push_back({"delta_star3_double(" + std::to_string(n) + ")", n64 + 2,
                           2 * (n64 + 1) * (n64 - 2) - 1, true, false});
    }
    return out;
}

std::optional<Recipe> stacking_plan(std::int64_t f0, std::int64_t f03) {
    std::optional<Recipe> best;
    std::int64_t best_n = std::numeric_limits<std::int64_t>::max();
    auto consider = [&](const Base& b) {
        if (b.f0 > f0 || b.f03 > f03) return;
        std::int64_t d3 = f03 - b.f03;
        if (d3 % 12 != 0) return;
        std::int64_t steps = d3 / 12;
        std::int64_t d0 = f0 - b.f0 - steps;
        if (d0 < 0 || d0 % 2 != 0) return;
        std::int64_t m = d0 / 2;
        if (m > steps) return;
        if (steps > 0) {
            if (!b.simplex && !b.simple) return;
            if (!b.simplex && m == 0) return;
            if (!b.simple && m == steps) return;
        }
        if (steps >= best_n) return;
        Recipe r;
        r.seed = b.seed;
        r.expected = {f0, f03};
        std::vector<Op> ops;
        if (b.simplex) {
            ops.assign(static_cast<std::size_t>(steps - m), Op::StackSimplexFacet);
            ops.insert(ops.end(), static_cast<std::size_t>(m), Op::TruncateSimpleVertex);
        } else {
            ops.assign(static_cast<std::size_t>(m), Op::TruncateSimpleVertex);
            ops.insert(ops.end(), static_cast<std::size_t>(steps - m), Op::StackSimplexFacet);
        }
        r.ops = std::move(ops);
        best = std::move(r);
        best_n = steps;
    };
    for (const auto& b : table_bases()) consider(b);
    for (const auto& b : family_bases(f0)) consider(b);
    return best;
}

using BfsKey = std::tuple<std::int64_t, std::int64_t, int, unsigned>;

unsigned signature(const VertexFacetIncidence& p, const LocalStructure& loc) {
    unsigned s = 0;
    if (loc.has_simplex_facet()) s |= 1u;
    if (loc.has_simple_vertex()) s |= 2u;
    if (!loc.square_pyramid_facets.empty()) s |= 4u;
    if (loc.splittable_bipyramid()) s |= 8u;
    if (adjacent_simplex_pair(p).first >= 0) s |= 16u;
    return s;
}

// Breadth-first search over all ops from the table seeds, bounded by f03.
const std::map<FlagPair, Recipe>& bfs_table() {
    static const std::map<FlagPair, Recipe> table = [] {
        std::map<FlagPair, Recipe> found;
        std::set<BfsKey> seen;
        std::deque<std::pair<VertexFacetIncidence, Recipe>> queue;
        auto push = [&](VertexFacetIncidence p, Recipe r) {
            auto loc = classify_local(p);
            auto pr = p.pair();
            BfsKey key{pr.first, pr.second, p.num_facets(), signature(p, loc)};
            if (!seen.insert(key).second) return;
            r.expected = pr;
            found.emplace(pr, r);
            queue.emplace_back(std::move(p), std::move(r));
        };
        std::set<std::string> seeds;
        for (const auto& row : small_pair_rows())
            if (seeds.insert(row.seed).second) push(load_seed(row.seed).incidence, Recipe{row.seed, {}, {}});
        while (!queue.empty()) {
            auto [p, r] = std::move(queue.front());
            queue.pop_front();
            for (const auto& [op, name] : kOpNames) {
                (void)name;
                VertexFacetIncidence next;
                try {
                    next = apply_op(p, op);
                } catch (const Error&) {
                    continue;
                }
                if (next.vertex_facet_incidences() > kBfsLimit) continue;
                Recipe nr = r;
                nr.ops.push_back(op);
                push(std::move(next), std::move(nr));
            }
        }
        return found;
    }();
    return table;
}

FlagPair kind_pair(const VertexFacetIncidence& p, PairKind kind) {
    if (kind == PairKind::F3F03) return {p.num_facets(), p.vertex_facet_incidences()};
    return p.pair();
}

} // namespace

std::string_view to_string(Op op) {
    for (const auto& [o, name] : kOpNames)
        if (o == op) return name;
    return "unknown";
}

std::optional<Op> parse_op(std::string_view name) {
    for (const auto& [o, n] : kOpNames)
        if (n == name) return o;
    return std::nullopt;
}

std::string Recipe::id() const {
    std::string out = seed;
    for (Op op : ops) {
        out += '+';
        out += to_string(op);
    }
    return out;
}

std::string Recipe::to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["ops"] = nlohmann::json::array();
    for (Op op : ops) j["ops"].push_back(std::string(to_string(op)));
    j["expected"] = {expected.first, expected.second};
    if (kind != PairKind::F0F03) j["kind"] = std::string(polypair::to_string(kind));
    return j.dump();
}

Recipe Recipe::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    Recipe r;
    try {
        r.seed = j.at("seed").get<std::string>();
        for (const auto& item : j.at("ops")) {
            auto op = parse_op(item.get<std::string>());
            if (!op) throw Error(ErrorCode::SyntaxError, "unknown op " + item.get<std::string>());
            r.ops.push_back(*op);
        }
        const auto& e = j.at("expected");
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::SyntaxError, "expected must be [a, b]");
        r.expected = {e[0].get<std::int64_t>(), e[1].get<std::int64_t>()};
        if (j.contains("kind")) {
            auto kind = parse_pair_kind(j["kind"].get<std::string>());
            if (!kind || (*kind != PairKind::F0F03 && *kind != PairKind::F3F03))
                throw Error(ErrorCode::SyntaxError, "unsupported recipe kind");
            r.kind = *kind;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    return r;
}

VertexFacetIncidence resolve_seed(const std::string& ref) {
    std::vector<int> a;
    if (parse_call(ref, "R", 2, a)) return generalized_stack(a[0], a[1]);
    if (parse_call(ref, "delta_star", 3, a)) return delta_star(a[0], a[1], a[2]);
    if (parse_call(ref, "delta_star3_double", 1, a)) return delta_star3_double_stack(a[0]);
    if (parse_call(ref, "cyclic", 2, a)) return cyclic_polytope(a[0], a[1]);
    try {
        return load_seed(ref).incidence;
    } catch (const Error&) {
        if (parse_call(ref, "C4", 1, a)) return cyclic_polytope(4, a[0]);
        throw;
    }
}

FlagPair op_increment(Op op, const VertexFacetIncidence& before) {
    switch (op) {
    case Op::StackSimplexFacet: return {1, 12};
    case Op::TruncateSimpleVertex: return {3, 12};
    case Op::StackSquarePyramidFacet: return {1, 16};
    case Op::SplitBipyramid: return {0, 3};
    case Op::StackBeyondPair: return {1, 16};
    case Op::Dualize: return {before.num_facets() - before.num_vertices(), 0};
    }
    return {0, 0};
}

VertexFacetIncidence apply_op(const VertexFacetIncidence& p, Op op) {
    auto fail = [&](const char* what) {
        return Error(ErrorCode::StepPreconditionFailure, std::string(to_string(op)) + ": no " + what);
    };
    if (op == Op::Dualize) return dualize(p);
    if (op == Op::StackBeyondPair) {
        auto [f, g] = adjacent_simplex_pair(p);
        if (f < 0) throw fail("adjacent simplex facets");
        return stack_beyond_facet_set(p, {f, g});
    }
    auto loc = classify_local(p);
    switch (op) {
    case Op::StackSimplexFacet:
        if (!loc.has_simplex_facet()) throw fail("simplex facet");
        return stack_beyond_facet(p, loc.simplex_facets.front());
    case Op::TruncateSimpleVertex:
        if (!loc.has_simple_vertex()) throw fail("simple vertex");
        return truncate_simple_vertex(p, loc.simple_vertices.front());
    case Op::StackSquarePyramidFacet:
        if (loc.square_pyramid_facets.empty()) throw fail("square pyramid facet");
        return stack_beyond_facet(p, loc.square_pyramid_facets.front());
    case Op::SplitBipyramid: {
        const auto* bip = loc.splittable_bipyramid();
        if (!bip) throw fail("bipyramid facet with a simple apex");
        return split_bipyramid_facet(p, bip->facet);
    }
    default: break;
    }
    throw fail("handler");
}

bool Execution::ok() const {
    if (!matches_expected || !final_check.all_pass()) return false;
    for (const auto& s : steps)
        if (!s.checks_pass) return false;
    return true;
}

Execution execute(const Recipe& recipe) {
    Execution ex;
    ex.polytope = resolve_seed(recipe.seed);
    for (Op op : recipe.ops) {
        StepReport step{op, ex.polytope.pair(), {}, op_increment(op, ex.polytope), false};
        ex.polytope = apply_op(ex.polytope, op);
        step.after = ex.polytope.pair();
        bool delta_ok = step.after.first - step.before.first == step.predicted_delta.first &&
                        step.after.second - step.before.second == step.predicted_delta.second;
        step.checks_pass = delta_ok && check_polytope(ex.polytope).all_pass();
        ex.steps.push_back(step);
    }
    ex.final_check = check_polytope(ex.polytope);
    ex.matches_expected = kind_pair(ex.polytope, recipe.kind) == recipe.expected;
    return ex;
}

Recipe plan(std::int64_t f0, std::int64_t f03) {
    auto status = membership4(PairKind::F0F03, f0, f03);
    if (status.verdict != Verdict::Polytopal)
        throw Error(ErrorCode::PlanFailure, "(" + std::to_string(f0) + ", " + std::to_string(f03) +
                                                ") is not polytopal: " + status.reason);
    if (auto r = stacking_plan(f0, f03)) return *r;
    if (f03 <= kBfsLimit) {
        const auto& table = bfs_table();
        if (auto it = table.find({f0, f03}); it != table.end()) return it->second;
    }
    throw Error(ErrorCode::PlanFailure,
                "no construction found for (" + std::to_string(f0) + ", " + std::to_string(f03) + ")");
}

Recipe plan_dual(std::int64_t f3, std::int64_t f03) {
    Recipe r = plan(f3, f03);
    r.ops.push_back(Op::Dualize);
    r.kind = PairKind::F3F03;
    r.expected = {f3, f03};
    return r;
}

std::vector<FlagPair> lower_base_pairs() {
    std::vector<FlagPair> out;
    for (std::int64_t f0 = 8; 4 * f0 <= 64; ++f0)
        for (std::int64_t f03 = std::max<std::int64_t>(53, 4 * f0); f03 <= 64; ++f03) out.emplace_back(f0, f03);
    return out;
}

std::vector<std::int64_t> upper_dead_ends(std::int64_t n) {
    std::vector<std::int64_t> out{4 * n - 17, 4 * n - 13, 4 * n - 10, 4 * n - 9, 4 * n - 7, 4 * n - 6, 4 * n - 5};
    return out;
}

WitnessCache::WitnessCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) {
        const char* env = std::getenv("POLYPAIR_CACHE");
        dir_ = env && *env ? env : ".polypair_cache";
    }
}

std::string WitnessCache::path(PairKind kind, std::int64_t a, std::int64_t b) const {
    std::string k;
    for (char c : polypair::to_string(kind))
        if (c != ',') k += c;
    return (std::filesystem::path(dir_) / k / (std::to_string(a) + "_" + std::to_string(b) + ".facets")).string();
}

std::optional<VertexFacetIncidence> WitnessCache::load(PairKind kind, std::int64_t a, std::int64_t b) const {
    auto file = path(kind, a, b);
    if (!std::filesystem::exists(file)) return std::nullopt;
    try {
        auto p = read_facet_file(file);
        if (kind_pair(p, kind) != FlagPair{a, b}) return std::nullopt;
        return p;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void WitnessCache::store(PairKind kind, std::int64_t a, std::int64_t b, const VertexFacetIncidence& p,
                         const Recipe& recipe) const {
    write_facet_file(path(kind, a, b), p.canonical(), "recipe " + recipe.to_json());
}

RegionBounds default_bounds(PairKind kind, std::int64_t max_b) {
    switch (kind) {
    case PairKind::F0F03:
    case PairKind::F3F03: return {5, std::max<std::int64_t>(5, max_b / 4), 20, max_b};
    default: return {5, max_b, 5, max_b};
    }
}

std::vector<RegionCell> region_scan(PairKind kind, const RegionBounds& bounds, bool witnesses,
                                    const WitnessCache* cache) {
    std::vector<RegionCell> cells;
    bool plannable = kind == PairKind::F0F03 || kind == PairKind::F3F03;
    for (std::int64_t a = bounds.a_lo; a <= bounds.a_hi; ++a) {
        for (std::int64_t b = bounds.b_lo; b <= bounds.b_hi; ++b) {
            RegionCell cell{a, b, membership4(kind, a, b), {}, false};
            if (plannable && cell.status.verdict == Verdict::Polytopal) {
                try {
                    Recipe r = kind == PairKind::F0F03 ? plan(a, b) : plan_dual(a, b);
                    cell.recipe_id = r.id();
                    if (witnesses) {
                        std::optional<VertexFacetIncidence> cached;
                        if (cache) cached = cache->load(kind, a, b);
                        if (cached) {
                            cell.witness_verified = check_polytope(*cached).all_pass();
                        } else {
                            auto ex = execute(r);
                            cell.witness_verified = ex.ok();
                            if (cell.witness_verified && cache) cache->store(kind, a, b, ex.polytope, r);
                        }
                    }
                } catch (const Error&) {
                    cell.witness_verified = false;
                }
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace polypair
