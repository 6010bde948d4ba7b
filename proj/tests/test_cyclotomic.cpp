#include <cmath>
#include <complex>
#include <random>

#include "bhc/cyclotomic.hpp"
#include "doctest.h"

using namespace bhc;

namespace {

// Independent oracle: direct complex evaluation of sum c_j * e^(2*pi*i*j/k).
bool vanishes_float(const CountVector& c) {
    std::complex<double> s{0.0, 0.0};
    for (std::int64_t j = 0; j < c.k; ++j) {
        double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(c.k);
        s += static_cast<double>(c.counts[static_cast<std::size_t>(j)]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return std::abs(s) < 1e-9 * static_cast<double>(std::max<std::int64_t>(1, c.total()));
}

} // namespace

TEST_CASE("cyclotomic polynomials: small cases") {
    CHECK(cyclotomic_poly(1) == IntPolynomial({-1, 1}));
    CHECK(cyclotomic_poly(2) == IntPolynomial({1, 1}));
    CHECK(cyclotomic_poly(4) == IntPolynomial({1, 0, 1}));
    CHECK(cyclotomic_poly(12) == IntPolynomial({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(12).to_string() == "x^4 - x^2 + 1");
    // first index with a coefficient beyond +-1
    bool big = false;
    for (auto c : cyclotomic_poly(105).coeffs()) big = big || std::abs(c) == 2;
    CHECK(big);
}

TEST_CASE("deg Phi_k = phi(k) and product identity, k <= 200") {
    for (std::int64_t k = 1; k <= 200; ++k) {
        CHECK(cyclotomic_poly(k).degree() == euler_phi(k));
        CHECK(cyclotomic_poly(k).is_monic());
        IntPolynomial prod({1});
        for (std::int64_t d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic_poly(d);
        CHECK(prod == IntPolynomial::xn_minus_one(static_cast<int>(k)));
    }
}

TEST_CASE("is_vanishing: pinned cases") {
    CHECK(is_vanishing(CountVector({1, 1, 1}, 3)));
    std::vector<std::int64_t> c8(8, 0);
    c8[0] = c8[6] = c8[4] = c8[2] = 1; // rows 2,3 of the BH(4,8) example
    CHECK(is_vanishing(CountVector(c8, 8)));
    std::vector<std::int64_t> c8b(8, 0);
    c8b[0] = c8b[1] = 1;
    CHECK_FALSE(is_vanishing(CountVector(c8b, 8)));
    CHECK(is_vanishing(CountVector({0, 0, 0, 0}, 4))); // empty sum
    CHECK_FALSE(is_vanishing(CountVector({2}, 1)));
}

TEST_CASE("oracle agreement on seeded random count vectors") {
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> kdist(2, 60);
    std::uniform_int_distribution<int> cdist(0, 20);
    for (int it = 0; it < 10000; ++it) {
        std::int64_t k = kdist(rng);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
        for (auto& c : counts) c = cdist(rng);
        counts[static_cast<std::size_t>(it) % counts.size()] += 1; // never the empty sum
        CountVector cv(counts, k);
        CHECK(is_vanishing(cv) == vanishes_float(cv));
    }
}

TEST_CASE("is_vanishing is invariant under cyclic rotation") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> cdist(0, 6);
    for (std::int64_t k : {6, 8, 12, 30}) {
        for (int it = 0; it < 200; ++it) {
            std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
            for (auto& c : counts) c = cdist(rng);
            bool base = is_vanishing(CountVector(counts, k));
            for (int r = 1; r < k; ++r) {
                std::vector<std::int64_t> rot(static_cast<std::size_t>(k));
                for (std::int64_t j = 0; j < k; ++j) rot[static_cast<std::size_t>((j + r) % k)] = counts[static_cast<std::size_t>(j)];
                CHECK(is_vanishing(CountVector(rot, k)) == base);
            }
        }
    }
}

TEST_CASE("rows_orthogonal") {
    Word r1({0, 2, 4, 6}, 8), r0({0, 0, 0, 0}, 8);
    CHECK(rows_orthogonal(r0, r1));
    CHECK_FALSE(rows_orthogonal(r0, r0));
    CHECK_FALSE(rows_orthogonal(Word({0, 0}, 4), Word({0, 1}, 4)));
}

TEST_CASE("overflow is detected, never wrapped") {
    // Reduction mod Phi_12 = x^4 - x^2 + 1 feeds eliminated coefficients back
    // with positive sign, so huge counts must blow past int64 and throw.
    std::vector<std::int64_t> c(12, std::int64_t{1} << 62);
    CHECK_THROWS_AS(is_vanishing(CountVector(c, 12)), OverflowError);
}
