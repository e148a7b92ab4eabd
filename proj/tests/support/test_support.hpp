#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>
#include <gmpxx.h>

#include "bezout/forge.hpp"
#include "bezout/matrix.hpp"
#include "bezout/matrix_io.hpp"
#include "bezout/rings.hpp"

namespace bezout::test {

using ZMat = Mat<IntegerRing>;
using QMat = Mat<RationalRing>;
using PMat = Mat<PolyRing>;

/// Runs body(tag) once for each ring.
template <class F>
void for_each_ring(F&& body) {
    body(IntegerRing{});
    body(RationalRing{});
    body(PolyRing{});
}

/// Leibniz expansion. Deliberately naive: it shares nothing with the
/// elimination code it checks.
template <BezoutRing R>
typename R::value_type leibniz_det(const Mat<R>& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    typename R::value_type total = R::zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        typename R::value_type term = R::one();
        for (std::size_t i = 0; i < n; ++i)
            term = term * a(i, perm[i]);
        if (inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// gcd of all k x k minors, for k = 1 .. min(m, n).
inline std::vector<mpz_class> determinantal_divisors(const ZMat& a) {
    std::vector<mpz_class> out;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(a.rows(), k, 0, cur, rs);
        subsets(a.cols(), k, 0, cur, cs);
        mpz_class g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                ZMat sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub(i, j) = a(r[i], c[j]);
                g = gcd(g, leibniz_det(sub));
            }
        out.push_back(g);
    }
    return out;
}

/// Invariant factors from the determinantal divisors: d_k / d_{k-1}.
inline std::vector<mpz_class> invariant_factors_by_minors(const ZMat& a) {
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (const auto& d : determinantal_divisors(a)) {
        if (d == 0)
            break;
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

inline GenConfig config(RingKind ring, std::size_t n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.ring = ring;
    cfg.n = n;
    cfg.seed = seed;
    return cfg;
}

template <BezoutRing R>
std::string show(const Mat<R>& m) {
    return matrix_to_json(m).dump();
}

} // namespace bezout::test
