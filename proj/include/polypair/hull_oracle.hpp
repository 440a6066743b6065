#pragma once

#include <vector>

#include "polypair/cyclic.hpp"
#include "polypair/incidence.hpp"

namespace polypair {

struct PointSet {
    int d = 0;
    std::vector<std::vector<BigInt>> points;
};

/// (t, t^2, ..., t^d) for t = 1..n.
PointSet moment_curve_points(int d, int n);

/// Facets of conv(points) as sorted point-index sets, by testing every
/// hyperplane through d points with exact integer arithmetic.
std::vector<Facet> brute_hull_facets(const PointSet& ps);

/// Determinant by fraction-free elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

} // namespace polypair
