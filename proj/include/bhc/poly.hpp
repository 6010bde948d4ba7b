#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/error.hpp"

namespace bhc {

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
/// All arithmetic is overflow-checked and throws OverflowError instead of wrapping.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial monomial(std::int64_t coeff, int degree);
    /// x^n - 1
    static IntPolynomial xn_minus_one(int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    bool operator==(const IntPolynomial&) const = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    /// Exact division: throws unless the remainder is zero.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    /// Remainder of division by a monic divisor (stays integral).
    IntPolynomial remainder_monic(const IntPolynomial& divisor) const;

    std::string to_string() const; // e.g. "x^4 - x^2 + 1"

private:
    std::vector<std::int64_t> c_;
    void trim();
};

} // namespace bhc
