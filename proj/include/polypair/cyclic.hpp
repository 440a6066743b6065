#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "polypair/incidence.hpp"

namespace polypair {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// g_0 = 1, g_1, ..., g_{floor(d/2)}.
using GVector = std::vector<BigInt>;

/// Facets of C_d(n) on vertices 0..n-1 in moment-curve order, sorted.
std::vector<Facet> gale_facets(int d, int n);
VertexFacetIncidence cyclic_polytope(int d, int n);

BigInt cyclic_facet_count(int d, int n);
GVector cyclic_g_vector(int d, int n);
BigInt simplicial_facet_count(int d, const GVector& g);

/// a^<i>, the i-th Macaulay pseudopower.
BigInt macaulay_pseudopower(const BigInt& a, int i);
bool m_sequence_valid(const GVector& g);

/// Facet counts of simplicial d-polytopes with n vertices permitted by the
/// g-theorem, ascending. Throws TooLarge past `budget` enumeration nodes.
std::vector<BigInt> simplicial_fd_spectrum(int d, int n, std::uint64_t budget = 5'000'000);

} // namespace polypair
