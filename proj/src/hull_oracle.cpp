#include "polypair/hull_oracle.hpp"

#include <algorithm>
#include <set>

#include "polypair/error.hpp"

namespace polypair {

PointSet moment_curve_points(int d, int n) {
    if (d < 1 || n < d + 1) throw Error(ErrorCode::InvalidDimension, "need n >= d + 1");
    PointSet ps{d, {}};
    for (int t = 1; t <= n; ++t) {
        std::vector<BigInt> p;
        BigInt power = 1;
        for (int k = 0; k < d; ++k) {
            power *= t;
            p.push_back(power);
        }
        ps.points.push_back(std::move(p));
    }
    return ps;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

std::size_t affine_rank(const PointSet& ps) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 1; i < ps.points.size(); ++i) {
        std::vector<BigInt> r(static_cast<std::size_t>(ps.d));
        for (int k = 0; k < ps.d; ++k)
            r[static_cast<std::size_t>(k)] = ps.points[i][static_cast<std::size_t>(k)] - ps.points[0][static_cast<std::size_t>(k)];
        rows.push_back(std::move(r));
    }
    // Integer row echelon form.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(ps.d) && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            BigInt a = rows[rank][col], b = rows[i][col];
            for (std::size_t j = col; j < static_cast<std::size_t>(ps.d); ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<Facet> brute_hull_facets(const PointSet& ps) {
    const int d = ps.d;
    const int n = static_cast<int>(ps.points.size());
    if (n > 12) throw Error(ErrorCode::TooLarge, "hull oracle limited to 12 points");
    if (n < d + 1 || affine_rank(ps) < static_cast<std::size_t>(d))
        throw Error(ErrorCode::DegenerateInput, "points do not span dimension " + std::to_string(d));

    std::set<Facet> facets;
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + d, 1);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
        const auto& base = ps.points[static_cast<std::size_t>(s[0])];

        // Normal via cofactors of the (d-1) x d difference matrix.
        std::vector<std::vector<BigInt>> diff;
        for (int j = 1; j < d; ++j) {
            std::vector<BigInt> r(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k)
                r[static_cast<std::size_t>(k)] =
                    ps.points[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])][static_cast<std::size_t>(k)] -
                    base[static_cast<std::size_t>(k)];
            diff.push_back(std::move(r));
        }
        std::vector<BigInt> normal(static_cast<std::size_t>(d));
        bool nonzero = false;
        for (int c = 0; c < d; ++c) {
            std::vector<std::vector<BigInt>> minor;
            for (const auto& row : diff) {
                std::vector<BigInt> r;
                for (int k = 0; k < d; ++k)
                    if (k != c) r.push_back(row[static_cast<std::size_t>(k)]);
                minor.push_back(std::move(r));
            }
            normal[static_cast<std::size_t>(c)] = ((c % 2) ? -1 : 1) * bareiss_determinant(std::move(minor));
            if (normal[static_cast<std::size_t>(c)] != 0) nonzero = true;
        }
        if (!nonzero) continue;

        BigInt offset = 0;
        for (int k = 0; k < d; ++k) offset += normal[static_cast<std::size_t>(k)] * base[static_cast<std::size_t>(k)];
        bool pos = false, neg = false;
        Facet on;
        for (int i = 0; i < n; ++i) {
            BigInt v = -offset;
            for (int k = 0; k < d; ++k)
                v += normal[static_cast<std::size_t>(k)] * ps.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (v > 0) pos = true;
            else if (v < 0) neg = true;
            else on.push_back(i);
        }
        if (!(pos && neg)) facets.insert(std::move(on));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {facets.begin(), facets.end()};
}

} // namespace polypair
