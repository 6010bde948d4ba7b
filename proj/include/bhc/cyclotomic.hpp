#pragma once

#include <cstdint>
#include <vector>

#include "bhc/poly.hpp"
#include "bhc/ring.hpp"

namespace bhc {

/// Exponent multiplicities of a sum of k-th roots of unity:
/// counts[j] copies of zeta_k^j.
struct CountVector {
    std::vector<std::int64_t> counts;
    std::int64_t k;

    CountVector(std::vector<std::int64_t> counts_, std::int64_t k_);
    std::int64_t total() const;
};

/// k-th cyclotomic polynomial, computed by exact division of x^k - 1 by the
/// product of Phi_d over proper divisors d of k. Memoized; safe for
/// concurrent callers.
const IntPolynomial& cyclotomic_poly(std::int64_t k);

std::int64_t euler_phi(std::int64_t k);

/// Decides exactly whether sum_j counts[j] * zeta_k^j = 0, by reducing
/// sum_j counts[j] x^j modulo Phi_k over the integers. No factorization of k,
/// no floating point.
bool is_vanishing(const CountVector& c);

/// Hermitian-orthogonality of two log-form rows: builds the count vector of
/// the differences x_i - y_i mod k and asks is_vanishing.
bool rows_orthogonal(const Word& x, const Word& y);
bool rows_orthogonal(const std::int32_t* x, const std::int32_t* y, int n, std::int64_t k);

} // namespace bhc
