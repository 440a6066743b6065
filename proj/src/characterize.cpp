#include "polypair/characterize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <utility>

#include "polypair/error.hpp"
#include "polypair/seeds.hpp"

namespace polypair {

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

const std::set<Pair> kF0F1Sporadic = {{6, 12}, {7, 14}, {8, 17}, {10, 20}};

const std::set<Pair> kF0F2Sporadic = {{6, 12}, {6, 14}, {7, 13}, {7, 15}, {8, 15},
                                      {8, 16}, {9, 16}, {10, 17}, {11, 20}, {13, 21}};

const std::set<Pair> kF1F2Sporadic = {{12, 12}, {13, 14}, {14, 13}, {14, 14}, {15, 15}, {15, 16}, {16, 15}, {16, 17},
                                      {16, 18}, {17, 16}, {17, 20}, {18, 16}, {18, 18}, {19, 21}, {20, 17}, {20, 23},
                                      {20, 24}, {21, 19}, {21, 26}, {23, 20}, {24, 20}, {26, 21}};

const std::set<Pair> kF0F03Sporadic = {{6, 24},  {6, 25},  {6, 28},  {7, 28},  {7, 30}, {7, 31},
                                       {7, 33},  {7, 34},  {7, 37},  {7, 40},  {8, 33}, {8, 34},
                                       {8, 37},  {8, 40},  {9, 37},  {9, 40},  {10, 40}, {10, 43}};

constexpr std::array<std::int64_t, 7> kF03Gaps = {1, 2, 3, 5, 6, 9, 13};

// Known small exceptions in higher dimension, (d, n, m).
struct HighException {
    int d;
    std::int64_t n;
    std::int64_t m;
};
constexpr HighException kHighRegistry[] = {{6, 8, 14}};

PairStatus status(Verdict v, std::string reason) { return {v, std::move(reason), {}}; }

// Least t with (2t - 1)^2 >= 4x + 9, i.e. ceil(sqrt(x + 9/4) + 1/2).
std::int64_t ceil_shift_sqrt(std::int64_t x) {
    std::int64_t t = 1;
    while ((2 * t - 1) * (2 * t - 1) < 4 * x + 9) ++t;
    return t;
}

// x/2 + ceil(sqrt(x + 9/4) + 1/2) + 1 <= y, doubled.
bool f1f2_lower(std::int64_t x, std::int64_t y) {
    const auto t = ceil_shift_sqrt(x);
    return x + 2 * t + 2 >= 20 && x + 2 * t + 2 <= 2 * y;
}

// y = x/2 + sqrt(x + 13/4) + 2  <=>  (2y - x - 4)^2 = 4x + 13 with 2y - x - 4 > 0.
bool f1f2_curve(std::int64_t x, std::int64_t y) {
    const auto s = 2 * y - x - 4;
    return s > 0 && s * s == 4 * x + 13;
}

PairStatus f0f3(std::int64_t f0, std::int64_t f3) {
    if (f0 < 5 || f3 < 5 || 2 * f3 > f0 * (f0 - 3) || 2 * f0 > f3 * (f3 - 3))
        return status(Verdict::OutOfBounds, "outside 5 <= f0 <= f3(f3-3)/2, 5 <= f3 <= f0(f0-3)/2");
    return status(Verdict::Polytopal, "within bounds");
}

PairStatus f0f1(std::int64_t f0, std::int64_t f1) {
    if (2 * f0 < 10 || f1 < 2 * f0 || 2 * f1 > f0 * (f0 - 1))
        return status(Verdict::OutOfBounds, "outside 10 <= 2f0 <= f1 <= f0(f0-1)/2");
    if (kF0F1Sporadic.count({f0, f1})) return status(Verdict::Exceptional, "sporadic");
    return status(Verdict::Polytopal, "within bounds");
}

PairStatus f0f2(std::int64_t f0, std::int64_t f2) {
    // (2f0 + 3 + sqrt(8f0 + 9)) / 2 <= f2  <=>  r >= 0 and r^2 >= 8f0 + 9, r = 2f2 - 2f0 - 3.
    const auto r = 2 * f2 - 2 * f0 - 3;
    if (f0 < 5 || r < 0 || r * r < 8 * f0 + 9 || f2 > f0 * f0 - 3 * f0)
        return status(Verdict::OutOfBounds, "outside (2f0+3+sqrt(8f0+9))/2 <= f2 <= f0^2-3f0");
    if (f2 == f0 * f0 - 3 * f0 - 1) return status(Verdict::Exceptional, "excluded value f2 = f0^2-3f0-1");
    if (kF0F2Sporadic.count({f0, f2})) return status(Verdict::Exceptional, "sporadic");
    return status(Verdict::Polytopal, "within bounds");
}

PairStatus f1f2(std::int64_t f1, std::int64_t f2) {
    if (!f1f2_lower(f1, f2) || !f1f2_lower(f2, f1))
        return status(Verdict::OutOfBounds, "outside f1/2 + ceil(sqrt(f1+9/4)+1/2) + 1 <= f2 and its mirror");
    if (f1f2_curve(f1, f2)) return status(Verdict::Exceptional, "excluded curve f2 = f1/2 + sqrt(f1+13/4) + 2");
    if (f1f2_curve(f2, f1)) return status(Verdict::Exceptional, "excluded curve f1 = f2/2 + sqrt(f2+13/4) + 2");
    if (kF1F2Sporadic.count({f1, f2})) return status(Verdict::Exceptional, "sporadic");
    return status(Verdict::Polytopal, "within bounds");
}

PairStatus f0f03(std::int64_t f0, std::int64_t f03) {
    const auto top = 2 * f0 * (f0 - 3);
    if (4 * f0 < 20 || f03 < 4 * f0 || f03 > top)
        return status(Verdict::OutOfBounds, "outside 20 <= 4f0 <= f03 <= 2f0(f0-3)");
    const auto k = top - f03;
    if (std::find(kF03Gaps.begin(), kF03Gaps.end(), k) != kF03Gaps.end())
        return status(Verdict::Exceptional, "excluded value f03 = 2f0(f0-3)-" + std::to_string(k));
    if (kF0F03Sporadic.count({f0, f03})) return status(Verdict::Exceptional, "sporadic");
    PairStatus s = status(Verdict::Polytopal, "within bounds");
    for (const auto& row : small_pair_rows())
        if (row.f0 == f0 && row.f03 == f03) s.witness_hint = row.seed;
    return s;
}

std::int64_t scan_upper(PairKind kind, std::int64_t a) {
    switch (kind) {
    case PairKind::F0F1: return a * (a - 1) / 2;
    case PairKind::F0F2: return a * a - 3 * a;
    case PairKind::F0F3: return a * (a - 3) / 2;
    case PairKind::F1F2: return 2 * a;
    case PairKind::F1F3: return a;
    case PairKind::F2F3: return a / 2;
    case PairKind::F0F03: return 2 * a * (a - 3);
    case PairKind::F3F03: return 2 * a * (a - 3);
    }
    return 0;
}

} // namespace

std::string_view to_string(PairKind kind) {
    switch (kind) {
    case PairKind::F0F1: return "f0,f1";
    case PairKind::F0F2: return "f0,f2";
    case PairKind::F0F3: return "f0,f3";
    case PairKind::F1F2: return "f1,f2";
    case PairKind::F1F3: return "f1,f3";
    case PairKind::F2F3: return "f2,f3";
    case PairKind::F0F03: return "f0,f03";
    case PairKind::F3F03: return "f3,f03";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Polytopal: return "Polytopal";
    case Verdict::Exceptional: return "Exceptional";
    case Verdict::OutOfBounds: return "OutOfBounds";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<PairKind> parse_pair_kind(std::string_view text) {
    std::string key;
    for (char c : text)
        if (std::isalnum(static_cast<unsigned char>(c))) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (auto kind : {PairKind::F0F1, PairKind::F0F2, PairKind::F0F3, PairKind::F1F2, PairKind::F1F3, PairKind::F2F3,
                      PairKind::F0F03, PairKind::F3F03}) {
        std::string name;
        for (char c : to_string(kind))
            if (c != ',') name += c;
        if (name == key) return kind;
    }
    return std::nullopt;
}

PairStatus membership4(PairKind kind, std::int64_t a, std::int64_t b) {
    switch (kind) {
    case PairKind::F0F3: return f0f3(a, b);
    case PairKind::F0F1: return f0f1(a, b);
    case PairKind::F0F2: return f0f2(a, b);
    case PairKind::F1F2: return f1f2(a, b);
    // Dual kinds: f_i <-> f_{3-i}.
    case PairKind::F1F3: return f0f2(b, a);
    case PairKind::F2F3: return f0f1(b, a);
    case PairKind::F0F03: return f0f03(a, b);
    case PairKind::F3F03: {
        auto s = f0f03(a, b);
        if (!s.witness_hint.empty()) s.witness_hint = "dual of " + s.witness_hint;
        return s;
    }
    }
    return {};
}

std::vector<ExceptionalPair> exceptional_pairs4(PairKind kind, std::int64_t lo, std::int64_t hi) {
    std::vector<ExceptionalPair> out;
    for (auto a = std::max<std::int64_t>(lo, 1); a <= hi; ++a) {
        const auto top = std::max<std::int64_t>(scan_upper(kind, a), 2 * a * (a - 3));
        for (std::int64_t b = 1; b <= top; ++b) {
            auto s = membership4(kind, a, b);
            if (s.verdict == Verdict::Exceptional) out.push_back({a, b, s.reason});
        }
    }
    return out;
}

BigInt d_large_threshold(int d, bool refined) {
    if (refined && d == 5) return 58;
    if (refined && d == 6) return 132;
    return binomial(3 * d + 1, d / 2);
}

BigInt nonsimplicial_facet_bound(int d, int n) { return cyclic_facet_count(d, n) - d / 2; }

PairStatus membership_high(int d, std::int64_t n, std::int64_t m, bool refined) {
    if (d < 2) throw Error(ErrorCode::InvalidDimension, "dimension must be at least 2");
    if (n < d + 1 || m < d + 1) return status(Verdict::OutOfBounds, "fewer than d+1 vertices or facets");
    const BigInt upper_n = cyclic_facet_count(d, static_cast<int>(n));
    const BigInt upper_m = cyclic_facet_count(d, static_cast<int>(m));
    if (BigInt(m) > upper_n || BigInt(n) > upper_m)
        return status(Verdict::OutOfBounds, "violates the upper bound inequalities");
    if (d <= 4) return status(Verdict::Polytopal, "no exceptional pairs for d <= 4");

    for (const auto& e : kHighRegistry)
        if (e.d == d && ((e.n == n && e.m == m) || (e.n == m && e.m == n)))
            return status(Verdict::Exceptional, "known small exception");

    const bool large = BigInt(n + m) >= d_large_threshold(d, refined);
    if (d % 2 == 0) {
        if (large) return status(Verdict::Polytopal, "d-large pair");
        return status(Verdict::Unknown, "d-small pair");
    }

    const int half = d / 2;
    // Odd dimension: simplicial polytopes have an even number of facets, the
    // others at most f(C_d(n)) - floor(d/2).
    auto in_band = [&](std::int64_t x, const BigInt& upper) {
        return x % 2 != 0 && BigInt(x) > upper - half && BigInt(x) < upper;
    };
    if (in_band(m, upper_n) || in_band(n, upper_m))
        return status(Verdict::Exceptional, "odd count strictly between the non-simplicial bound and the maximum");

    auto unresolved = [&](std::int64_t vertices, std::int64_t facets) {
        if (facets % 2 == 0 || vertices <= d + 1) return false;
        const BigInt below = cyclic_facet_count(d, static_cast<int>(vertices - 1));
        return BigInt(facets) > below && BigInt(facets) <= cyclic_facet_count(d, static_cast<int>(vertices)) - half;
    };
    if (unresolved(n, m) || unresolved(m, n)) return status(Verdict::Unknown, "odd count in the unresolved band");
    if (large) return status(Verdict::Polytopal, "d-large pair");
    return status(Verdict::Unknown, "d-small pair");
}

bool flag_necessary_bounds(FlagPairKind kind, std::int64_t a, std::int64_t b) {
    if (kind == FlagPairKind::F0F02) return 6 * a <= b && b <= 3 * a * (a - 3);
    // f02 <= 6f1 - 3 sqrt(8f1 + 1) - 3  <=>  r >= 0 and r^2 >= 9(8f1 + 1), r = 6f1 - 3 - f02.
    const auto r = 6 * a - 3 - b;
    return 3 * a <= b && r >= 0 && r * r >= 9 * (8 * a + 1);
}

Rational fatness(const std::vector<std::int64_t>& f) {
    if (f.size() != 4) throw Error(ErrorCode::InvalidDimension, "fatness needs a 4-polytope f-vector");
    const auto den = f[0] + f[3] - 10;
    if (den == 0) throw Error(ErrorCode::DegenerateDenominator, "f0 + f3 = 10");
    return Rational(f[1] + f[2] - 20, den);
}

} // namespace polypair
