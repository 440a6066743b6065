#include "polypair/cyclic.hpp"

#include <algorithm>
#include <set>

#include "polypair/error.hpp"

namespace polypair {

namespace {

void require_cyclic(int d, int n) {
    if (d < 2 || n <= d)
        throw Error(ErrorCode::InvalidDimension, "need n > d >= 2, got d=" + std::to_string(d) + " n=" + std::to_string(n));
}

bool gale_even(const std::vector<char>& in, int n) {
    // Between two consecutive non-members the count of members must be even.
    int last_out = -1;
    int run = 0;
    for (int v = 0; v < n; ++v) {
        if (in[static_cast<std::size_t>(v)]) {
            ++run;
        } else {
            if (last_out >= 0 && run % 2 != 0) return false;
            last_out = v;
            run = 0;
        }
    }
    return true;
}

} // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<Facet> gale_facets(int d, int n) {
    require_cyclic(d, n);
    std::vector<Facet> out;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::fill(in.begin(), in.begin() + d, 1);
    // prev_permutation walks subsets in lexicographic order of members.
    do {
        if (gale_even(in, n)) {
            Facet f;
            for (int v = 0; v < n; ++v)
                if (in[static_cast<std::size_t>(v)]) f.push_back(v);
            out.push_back(std::move(f));
        }
    } while (std::prev_permutation(in.begin(), in.end()));
    std::sort(out.begin(), out.end());
    return out;
}

VertexFacetIncidence cyclic_polytope(int d, int n) { return VertexFacetIncidence(d, gale_facets(d, n)); }

BigInt cyclic_facet_count(int d, int n) {
    require_cyclic(d, n);
    const int k = d / 2;
    if (d % 2 == 0) return binomial(n - k, k) + binomial(n - k - 1, k - 1);
    return 2 * binomial(n - k - 1, k);
}

GVector cyclic_g_vector(int d, int n) {
    require_cyclic(d, n);
    GVector g;
    g.push_back(1);
    for (int i = 1; i <= d / 2; ++i) g.push_back(binomial(n - d - 2 + i, i));
    return g;
}

BigInt simplicial_facet_count(int d, const GVector& g) {
    BigInt total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) total += g[i] * (d + 1 - 2 * static_cast<int>(i));
    return total;
}

BigInt macaulay_pseudopower(const BigInt& a, int i) {
    if (a <= 0 || i <= 0) return 0;
    // Greedy i-binomial expansion a = C(a_i,i) + C(a_{i-1},i-1) + ...
    BigInt rest = a;
    BigInt result = 0;
    for (int j = i; j >= 1 && rest > 0; --j) {
        std::int64_t top = j;
        while (binomial(top + 1, j) <= rest) ++top;
        rest -= binomial(top, j);
        result += binomial(top + 1, j + 1);
    }
    return result;
}

bool m_sequence_valid(const GVector& g) {
    if (g.empty() || g[0] != 1) return false;
    for (const auto& x : g)
        if (x < 0) return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (g[i + 1] > macaulay_pseudopower(g[i], static_cast<int>(i))) return false;
    return true;
}

std::vector<BigInt> simplicial_fd_spectrum(int d, int n, std::uint64_t budget) {
    require_cyclic(d, n);
    if (d > 10) throw Error(ErrorCode::TooLarge, "dimension above 10");
    const GVector cap = cyclic_g_vector(d, n);
    const int top = d / 2;
    std::set<BigInt> values;
    std::uint64_t nodes = 0;
    GVector g(cap.size());
    g[0] = 1;
    if (top >= 1) g[1] = n - d - 1;

    auto recurse = [&](auto&& self, int i, const BigInt& partial) -> void {
        if (++nodes > budget) throw Error(ErrorCode::TooLarge, "spectrum enumeration budget exceeded");
        if (i > top) {
            values.insert(partial);
            return;
        }
        BigInt hi = std::min(cap[static_cast<std::size_t>(i)], macaulay_pseudopower(g[static_cast<std::size_t>(i - 1)], i - 1));
        for (BigInt x = 0; x <= hi; ++x) {
            g[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, partial + x * (d + 1 - 2 * i));
        }
    };
    BigInt base = d + 1;
    if (top >= 1) base += g[1] * (d - 1);
    recurse(recurse, 2, base);
    return {values.begin(), values.end()};
}

} // namespace polypair
