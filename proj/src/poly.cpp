#include "bhc/poly.hpp"

#include <sstream>

#include "bhc/checked.hpp"

namespace bhc {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t coeff, int degree) {
    if (coeff == 0) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::xn_minus_one(int n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

std::int64_t IntPolynomial::leading() const {
    if (is_zero()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = add_ck(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = sub_ck(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = add_ck(c[i + j], mul_ck(a.c_[i], b.c_[j]));
    }
    return IntPolynomial(std::move(c));
}

namespace {

// Long division; divisor must be monic so everything stays in Z.
void divmod_monic(const IntPolynomial& dividend, const IntPolynomial& divisor,
                  IntPolynomial& quotient, IntPolynomial& remainder) {
    if (!divisor.is_monic()) throw Error("divisor must be monic");
    std::vector<std::int64_t> rem(dividend.coeffs());
    int dd = divisor.degree();
    std::vector<std::int64_t> quo;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        quo.assign(rem.size() - static_cast<std::size_t>(dd), 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        std::int64_t f = rem[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dd + j)];
            r = sub_ck(r, mul_ck(f, divisor.coeff(j)));
        }
    }
    quotient = IntPolynomial(std::move(quo));
    rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
    remainder = IntPolynomial(std::move(rem));
}

} // namespace

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    IntPolynomial q, r;
    divmod_monic(*this, divisor, q, r);
    if (!r.is_zero()) throw Error("exact polynomial division left a nonzero remainder");
    return q;
}

IntPolynomial IntPolynomial::remainder_monic(const IntPolynomial& divisor) const {
    IntPolynomial q, r;
    divmod_monic(*this, divisor, q, r);
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::int64_t c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace bhc
