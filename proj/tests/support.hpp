#pragma once

#include "cftnvm/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using cftnvm::CycMatrix;
using cftnvm::CycNum;

inline CycNum random_cycnum(std::mt19937& rng, unsigned long max_order,
                            bool allow_fraction = true) {
    std::uniform_int_distribution<unsigned long> ord(1, max_order);
    unsigned long n = ord(rng);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<mpz_class> cs(n);
    for (auto& c : cs) c = coeff(rng);
    CycNum v = CycNum::from_exponent_coeffs(n, std::move(cs));
    if (allow_fraction) {
        std::uniform_int_distribution<long> d(1, 4);
        long den = d(rng);
        if (den > 1) v.scale(mpq_class(1, den));
    }
    return v;
}

inline CycMatrix random_matrix(std::mt19937& rng, std::size_t n, unsigned long max_order,
                               bool allow_fraction = true) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = random_cycnum(rng, max_order, allow_fraction);
        }
    }
    return m;
}

// Reference determinant by signed permutation expansion; independent of
// the elimination-based implementation under test.
inline CycNum naive_det(const CycMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return CycNum(1L);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    CycNum acc(0L);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        CycNum term(1L);
        for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        if (inversions % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace testsupport
