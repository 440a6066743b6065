// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "polypair/characterize.hpp"
#include "polypair/constructions.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/hull_oracle.hpp"
#include "polypair/io.hpp"
#include "polypair/seeds.hpp"
#include "polypair/witness.hpp"

using namespace polypair;
using Pair = std::pair<std::int64_t, std::int64_t>;

namespace {

struct Failure {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

std::string show(Pair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

// Polytopes produced in criteria 1-4, revisited by criterion 5.
std::vector<VertexFacetIncidence> touched;

Pair recount(const VertexFacetIncidence& p) {
    auto faces = oracle::faces_of(p);
    return {oracle::flag_count(faces, {0}), oracle::flag_count(faces, {0, 3})};
}

// Identities evaluated directly on flag-vector entries.
bool identities_hold(const FlagVector& fl, std::string& why) {
    auto f = [&](std::initializer_list<int> s) { return fl.at(s); };
    std::int64_t f0 = f({0}), f1 = f({1}), f2 = f({2}), f3 = f({3}), f02 = f({0, 2}), f03 = f({0, 3});
    std::vector<std::pair<const char*, bool>> checks{
        {"euler", f0 - f1 + f2 - f3 == 0},
        {"f02", f02 == -2 * f0 + 2 * f1 + f03},
        {"f01", f({0, 1}) == 2 * f1},
        {"f12", f({1, 2}) == f02},
        {"f13", f({1, 3}) == f02},
        {"f23", f({2, 3}) == 2 * f2},
        {"f012", f({0, 1, 2}) == 2 * f02},
        {"f013", f({0, 1, 3}) == 2 * f02},
        {"f023", f({0, 2, 3}) == 2 * f02},
        {"f123", f({1, 2, 3}) == 2 * f02},
        {"f0123", f({0, 1, 2, 3}) == 4 * f02},
        {"bayer-upper", f02 - 3 * f2 + f1 - 4 * f0 + 10 >= 0},
        {"bayer-center", -6 * f0 + 6 * f1 - f02 >= 0},
        {"facet-upper", -3 * f0 - 3 * f3 + f03 + 10 >= 0},
        {"edge-lower", 4 * f0 - 4 * f1 + f03 <= 0},
    };
    for (auto& [name, ok] : checks)
        if (!ok) {
            why = name;
            return false;
        }
    return true;
}

// Reference pairs of the listed polytopes and of those duals that are listed.
const std::map<int, Pair> kReferencePairs{
    {1, {7, 35}},  {2, {7, 36}},  {3, {7, 39}},  {4, {7, 42}},  {5, {7, 45}},  {6, {7, 46}},  {7, {7, 49}},
    {8, {8, 39}},  {9, {8, 42}},  {10, {8, 43}}, {11, {8, 45}}, {12, {8, 46}}, {13, {8, 49}}, {14, {8, 52}},
    {15, {8, 55}}, {16, {8, 59}}, {17, {8, 60}}, {18, {8, 62}}, {19, {8, 63}}, {20, {8, 65}}, {21, {8, 66}},
    {22, {8, 68}}, {23, {8, 69}}, {24, {8, 70}}, {25, {8, 72}}, {26, {8, 73}}, {27, {8, 76}}};
const std::map<int, Pair> kDualPairs{{1, {8, 35}},   {2, {8, 36}},   {3, {9, 39}},   {4, {10, 42}}, {5, {11, 45}},
                                     {6, {11, 46}},  {7, {12, 49}},  {9, {9, 42}},   {10, {9, 43}}, {11, {10, 45}},
                                     {12, {10, 46}}, {13, {11, 49}}, {14, {12, 52}}, {15, {13, 55}}};

void criterion1() {
    const auto& lists = reference_facet_lists();
    expect(lists.size() == 27, "27 lists");
    for (int i = 1; i <= 27; ++i) {
        auto p = parse_bracket_format(lists[static_cast<std::size_t>(i - 1)]);
        auto report = check_polytope(p);
        expect(report.all_pass(), "P" + std::to_string(i) + " checks");
        expect(p.pair() == kReferencePairs.at(i), "P" + std::to_string(i) + " pair " + show(p.pair()));
        auto d = dualize(p);
        expect(check_polytope(d).all_pass(), "P" + std::to_string(i) + "* checks");
        Pair dual_expected = kDualPairs.count(i) ? kDualPairs.at(i) : Pair{p.num_facets(), p.vertex_facet_incidences()};
        expect(d.pair() == dual_expected, "P" + std::to_string(i) + "* pair " + show(d.pair()));
        expect(load_seed("P" + std::to_string(i)).incidence.canonical() == p.canonical(), "seed P" + std::to_string(i));
        touched.push_back(p);
        touched.push_back(d);
    }
}

void criterion2() {
    std::int64_t max_f03 = 80;
    auto cells = region_scan(PairKind::F0F03, default_bounds(PairKind::F0F03, max_f03), true);
    std::set<Pair> exceptional, reference;
    int polytopal = 0;
    for (const auto& c : cells) {
        Pair p{c.a, c.b};
        expect((c.status.verdict == Verdict::Polytopal) == oracle::f0f03_polytopal(c.a, c.b), "verdict " + show(p));
        if (c.status.verdict == Verdict::Polytopal) {
            ++polytopal;
            expect(!c.recipe_id.empty() && c.witness_verified, "witness " + show(p));
            auto ex = execute(plan(c.a, c.b));
            touched.push_back(ex.polytope);
        }
        if (c.status.verdict == Verdict::Exceptional) exceptional.insert(p);
    }
    for (auto [a, b] : oracle::f0f03_sporadic()) reference.insert({a, b});
    for (std::int64_t f0 = 5; 4 * f0 <= max_f03; ++f0)
        for (int k : {1, 2, 3, 5, 6, 9, 13}) {
            std::int64_t b = 2 * f0 * (f0 - 3) - k;
            if (b <= max_f03 && oracle::f0f03_in_bounds(f0, b)) reference.insert({f0, b});
        }
    expect(exceptional == reference, "exceptional set differs");
    expect(polytopal > 0, "no polytopal cells");
}

void criterion3() {
    std::mt19937 rng(20240531);
    std::vector<std::string> starts;
    for (const auto& name : seed_names())
        if (load_seed(name).incidence.num_vertices() <= 8 && load_seed(name).incidence.num_facets() <= 14)
            starts.push_back(name);
    const std::set<Pair> allowed{{1, 12}, {3, 12}, {1, 16}, {0, 3}};
    int steps = 0;
    for (int chain = 0; chain < 200; ++chain) {
        auto p = load_seed(starts[rng() % starts.size()]).incidence;
        int length = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < length; ++s) {
            auto loc = classify_local(p);
            std::vector<std::function<VertexFacetIncidence()>> moves;
            std::vector<Pair> predicted;
            auto pick = [&](const std::vector<int>& v) { return v[rng() % v.size()]; };
            if (loc.has_simplex_facet()) {
                int f = pick(loc.simplex_facets);
                moves.push_back([&, f] { return stack_beyond_facet(p, f); });
                predicted.push_back({1, 12});
            }
            if (loc.has_simple_vertex()) {
                int v = pick(loc.simple_vertices);
                moves.push_back([&, v] { return truncate_simple_vertex(p, v); });
                predicted.push_back({3, 12});
            }
            if (!loc.square_pyramid_facets.empty()) {
                int f = pick(loc.square_pyramid_facets);
                moves.push_back([&, f] { return stack_beyond_facet(p, f); });
                predicted.push_back({1, 16});
            }
            std::vector<int> splittable;
            for (const auto& b : loc.bipyramid_facets)
                if (b.apex_simple[0] || b.apex_simple[1]) splittable.push_back(b.facet);
            if (!splittable.empty()) {
                int f = pick(splittable);
                moves.push_back([&, f] { return split_bipyramid_facet(p, f); });
                predicted.push_back({0, 3});
            }
            if (moves.empty()) break;
            std::size_t m = rng() % moves.size();
            Pair before = p.pair();
            auto next = moves[m]();
            expect(check_polytope(next).all_pass(), "revalidation failed");
            Pair after = recount(next);
            Pair delta{after.first - before.first, after.second - before.second};
            expect(delta == predicted[m], "delta " + show(delta) + " expected " + show(predicted[m]));
            expect(allowed.count(delta) == 1, "delta not in the allowed set");
            p = std::move(next);
            touched.push_back(p);
            ++steps;
        }
    }
    expect(steps >= 200, "too few steps");
}

void criterion4() {
    for (int n = 7; n <= 10; ++n)
        for (int i = 1; i <= n - 3; ++i) {
            auto p = generalized_stack(i, n);
            Pair expected{n + 1, 2 * n * (n - 3) + 4 * i + 8};
            expect(recount(p) == expected, "R_" + std::to_string(i) + "(" + std::to_string(n) + ")");
            touched.push_back(p);
        }
    int legal = 0;
    for (int n = 8; n <= 10; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int i = 3; i <= n; ++i) {
                if (!delta_legal(k, i, n)) continue;
                ++legal;
                auto p = delta_star(k, i, n);
                Pair expected{n + 1, 2 * n * (n - 3) + 4 * i - 3 * k};
                expect(recount(p) == expected, "delta*_" + std::to_string(k) + "(" + std::to_string(i) + "," +
                                                   std::to_string(n) + ") " + show(recount(p)));
                touched.push_back(p);
            }
    expect(legal > 0, "no legal families");
}

void criterion5() {
    expect(!touched.empty(), "nothing to check");
    for (const auto& p : touched) {
        auto report = check_polytope(p);
        std::string why;
        expect(identities_hold(report.flags, why), "identity " + why + " fails on " + show(p.pair()));
        expect(report.all_pass(), "library checks fail on " + show(p.pair()));
    }
}

void criterion6() {
    for (int d = 3; d <= 6; ++d)
        for (int n = d + 1; n <= 9; ++n)
            expect(brute_hull_facets(moment_curve_points(d, n)) == gale_facets(d, n),
                   "C_" + std::to_string(d) + "(" + std::to_string(n) + ")");
    for (int n = 5; n <= 9; ++n)
        expect(recount(cyclic_polytope(4, n)).second == 2 * n * (n - 3), "f03 of C_4(" + std::to_string(n) + ")");
}

std::set<Pair> reference_exceptions(PairKind kind, std::int64_t lo, std::int64_t hi) {
    std::set<Pair> out;
    for (std::int64_t a = lo; a <= hi; ++a)
        for (std::int64_t b = 1; b <= a * a + 10; ++b) {
            bool in = false, excluded = false;
            switch (kind) {
            case PairKind::F0F1:
                in = oracle::f0f1_in_bounds(a, b);
                excluded = oracle::f0f1_sporadic().count({int(a), int(b)}) > 0;
                break;
            case PairKind::F0F2:
                in = oracle::f0f2_in_bounds(a, b);
                excluded = b == a * a - 3 * a - 1 || oracle::f0f2_sporadic().count({int(a), int(b)}) > 0;
                break;
            case PairKind::F1F2:
                in = oracle::f1f2_in_bounds(a, b);
                excluded = oracle::f1f2_on_curve(a, b) || oracle::f1f2_on_curve(b, a) ||
                           oracle::f1f2_sporadic().count({int(a), int(b)}) > 0;
                break;
            default: break;
            }
            if (in && excluded) out.insert({a, b});
        }
    return out;
}

void criterion7() {
    auto as_set = [](const std::vector<ExceptionalPair>& v) {
        std::set<Pair> s;
        for (const auto& e : v) s.insert({e.a, e.b});
        return s;
    };
    const std::int64_t hi = 40;
    for (auto kind : {PairKind::F0F1, PairKind::F0F2, PairKind::F1F2}) {
        auto got = as_set(exceptional_pairs4(kind, 1, hi));
        expect(got == reference_exceptions(kind, 1, hi), std::string("exceptions of ") + std::string(to_string(kind)));
    }
    auto f0f1 = as_set(exceptional_pairs4(PairKind::F0F1, 1, hi));
    for (auto [a, b] : oracle::f0f1_sporadic()) expect(f0f1.count({a, b}) == 1, "f0f1 sporadic");
    auto f0f2 = as_set(exceptional_pairs4(PairKind::F0F2, 1, hi));
    for (auto [a, b] : oracle::f0f2_sporadic()) expect(f0f2.count({a, b}) == 1, "f0f2 sporadic");
    auto f1f2 = as_set(exceptional_pairs4(PairKind::F1F2, 1, hi));
    for (auto [a, b] : oracle::f1f2_sporadic()) expect(f1f2.count({a, b}) == 1, "f1f2 sporadic");
    expect(f1f2.count({27, 21}) == 1 && f1f2.count({21, 27}) == 1, "curve pair (27,21)");
    expect(membership4(PairKind::F1F2, 27, 21).verdict == Verdict::Exceptional, "(27,21) verdict");
    expect(exceptional_pairs4(PairKind::F0F3, 1, 200).empty(), "f0,f3 has exceptions");
}

void criterion8() {
    for (int d = 2; d <= 8; ++d)
        for (int n = d + 1; n <= 15; ++n) {
            BigInt count = cyclic_facet_count(d, n);
            expect(count == static_cast<std::int64_t>(gale_facets(d, n).size()), "facet count d=" + std::to_string(d));
            expect(count == oracle::cyclic_facets(d, n), "closed form d=" + std::to_string(d));
            expect(simplicial_facet_count(d, cyclic_g_vector(d, n)) == count, "g-vector count d=" + std::to_string(d));
        }
    std::vector<BigInt> expected{27, 30, 31};
    for (int m = 33; m <= 77; ++m) expected.push_back(m);
    expect(simplicial_fd_spectrum(6, 11) == expected, "spectrum (6,11)");
    int n = 11;
    expect(expected[0] == 5 * n - 28 && expected[1] == 5 * n - 25 && expected[2] == 5 * n - 24, "spectrum pattern");
    expect(d_large_threshold(6, false) == oracle::binom(19, 3) && oracle::binom(19, 3) == 969, "threshold 969");
    expect(d_large_threshold(6, true) == 132 && d_large_threshold(5, true) == 58, "refined thresholds");
    expect(membership_high(6, 60, 72, true).verdict == Verdict::Polytopal, "d=6 large refined");
    expect(membership_high(6, 60, 71, true).verdict == Verdict::Unknown, "d=6 small refined");
    expect(membership_high(6, 60, 72, false).verdict == Verdict::Unknown, "d=6 unrefined");
    expect(membership_high(6, 480, 489, false).verdict == Verdict::Polytopal, "d=6 large unrefined");
    expect(membership_high(5, 29, 29, true).verdict == Verdict::Polytopal, "d=5 large refined");
    expect(membership_high(5, 29, 28, true).verdict == Verdict::Unknown, "d=5 small refined");
}

void criterion9() {
    expect(membership_high(6, 8, 14).verdict == Verdict::Exceptional, "(6,8,14)");
    expect(membership_high(5, 8, 19).verdict == Verdict::Exceptional, "(5,8,19)");
    for (std::int64_t a = 5; a <= 30; ++a)
        for (std::int64_t b = 5; b <= 30; ++b)
            expect(membership_high(4, a, b).verdict == membership4(PairKind::F0F3, a, b).verdict,
                   "d=4 disagreement at " + show({a, b}));
}

// i-th Macaulay pseudopower via an independent greedy expansion.
std::int64_t pseudopower(std::int64_t a, int i) {
    std::int64_t out = 0;
    for (int k = i; k >= 1 && a > 0; --k) {
        std::int64_t top = k;
        while (oracle::binom(top + 1, k) <= a) ++top;
        a -= oracle::binom(top, k);
        out += oracle::binom(top + 1, k + 1);
    }
    return out;
}

bool is_m_sequence(const std::vector<std::int64_t>& g) {
    if (g.empty() || g[0] != 1) return false;
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] < 0) return false;
        if (i >= 2 && g[i] > pseudopower(g[i - 1], static_cast<int>(i - 1))) return false;
    }
    return true;
}

void criterion10() {
    std::mt19937 rng(7);
    int instances = 0;
    std::vector<std::string> names = seed_names();
    while (instances < 250) {
        VertexFacetIncidence p = instances % 5 == 0
                                     ? cyclic_polytope(4, 5 + static_cast<int>(rng() % 5))
                                     : load_seed(names[rng() % names.size()]).incidence;
        if (p.num_facets() > 30 || p.num_vertices() > 30) continue;
        for (int s = static_cast<int>(rng() % 3); s > 0; --s) {
            auto loc = classify_local(p);
            if (loc.has_simplex_facet() && rng() % 2 == 0)
                p = stack_beyond_facet(p, loc.simplex_facets[rng() % loc.simplex_facets.size()]);
            else if (loc.has_simple_vertex())
                p = truncate_simple_vertex(p, loc.simple_vertices[rng() % loc.simple_vertices.size()]);
        }
        auto d = dualize(p);
        expect(dualize(d) == p, "dual involution");
        auto lp = build_face_lattice(p);
        auto ld = build_face_lattice(d);
        auto fp = flag_vector(lp);
        auto fd = flag_vector(ld);
        for (unsigned mask = 1; mask < 16; ++mask) {
            unsigned rev = 0;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) rev |= 1u << (3 - i);
            expect(fp[mask] == fd[rev], "dual flag vector");
        }
        // diamond: every interval of length two has exactly two middle elements
        auto faces = oracle::faces_of(p);
        std::vector<oracle::VSet> sets = faces.sets;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j) {
                if (faces.dims[j] != faces.dims[i] + 2 || !oracle::subset(sets[i], sets[j])) continue;
                int middle = 0;
                for (std::size_t k = 0; k < sets.size(); ++k)
                    if (faces.dims[k] == faces.dims[i] + 1 && oracle::subset(sets[i], sets[k]) &&
                        oracle::subset(sets[k], sets[j]))
                        ++middle;
                expect(middle == 2, "diamond");
            }
        lp.check_diamond();
        ++instances;
    }
    while (instances < 500) {
        int d = 3 + static_cast<int>(rng() % 8);
        int n = d + 1 + static_cast<int>(rng() % 12);
        auto g = cyclic_g_vector(d, n);
        std::vector<std::int64_t> gi;
        for (const auto& x : g) gi.push_back(static_cast<std::int64_t>(x));
        expect(is_m_sequence(gi), "cyclic g-vector is not an M-sequence");
        expect(m_sequence_valid(g), "library rejects cyclic g-vector");
        // random perturbations, compared against the independent check
        GVector h = g;
        std::vector<std::int64_t> hi = gi;
        if (hi.size() > 2) {
            std::size_t k = 2 + rng() % (hi.size() - 2);
            std::int64_t bump = static_cast<std::int64_t>(rng() % 5) - 2;
            hi[k] = std::max<std::int64_t>(0, hi[k] * (rng() % 3) + bump);
            h[k] = hi[k];
        }
        expect(m_sequence_valid(h) == is_m_sequence(hi), "M-sequence checks disagree");
        int i = 1 + static_cast<int>(rng() % 5);
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 200);
        expect(macaulay_pseudopower(a, i) == pseudopower(a, i), "pseudopower value");
        ++instances;
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        void (*run)();
    };
    const Criterion criteria[] = {
        {1, "reference facet lists", 1.0, criterion1},
        {2, "f0,f03 predicate vs construction", 30.0, criterion2},
        {3, "increment laws on random chains", 60.0, criterion3},
        {4, "family formulas by recount", 60.0, criterion4},
        {5, "flag identities on touched polytopes", 120.0, criterion5},
        {6, "gale evenness vs exact hull", 120.0, criterion6},
        {7, "f-vector pair exceptions", 1.0, criterion7},
        {8, "high-dimensional calculators", 30.0, criterion8},
        {9, "known high-dimensional verdicts", 1.0, criterion9},
        {10, "property suite", 120.0, criterion10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget) {
            ok = false;
            detail = "over time budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << secs << " s]";
        if (!detail.empty()) line << " " << detail;
        std::cout << line.str() << std::endl;
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
