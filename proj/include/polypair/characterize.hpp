#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polypair/cyclic.hpp"

namespace polypair {

enum class PairKind { F0F1, F0F2, F0F3, F1F2, F1F3, F2F3, F0F03, F3F03 };
enum class FlagPairKind { F0F02, F1F02 };
enum class Verdict { Polytopal, Exceptional, OutOfBounds, Unknown };

std::string_view to_string(PairKind kind);
std::string_view to_string(Verdict verdict);
/// Accepts "f0,f03", "f0f03", "F0F03" and the like.
std::optional<PairKind> parse_pair_kind(std::string_view text);

struct PairStatus {
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::string witness_hint;
};

PairStatus membership4(PairKind kind, std::int64_t a, std::int64_t b);

struct ExceptionalPair {
    std::int64_t a;
    std::int64_t b;
    std::string reason;
};

/// Exceptional pairs with first coordinate in [lo, hi], sorted.
std::vector<ExceptionalPair> exceptional_pairs4(PairKind kind, std::int64_t lo, std::int64_t hi);

/// C(3d+1, floor(d/2)), or 58 / 132 for d = 5 / 6 when refined.
BigInt d_large_threshold(int d, bool refined);

PairStatus membership_high(int d, std::int64_t n, std::int64_t m, bool refined = true);

BigInt nonsimplicial_facet_bound(int d, int n);

bool flag_necessary_bounds(FlagPairKind kind, std::int64_t a, std::int64_t b);

using Rational = boost::rational<std::int64_t>;

/// (f1 + f2 - 20) / (f0 + f3 - 10) for a 4-polytope f-vector.
Rational fatness(const std::vector<std::int64_t>& f);

} // namespace polypair
