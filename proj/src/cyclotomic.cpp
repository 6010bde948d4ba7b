#include "bhc/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "bhc/checked.hpp"

namespace bhc {

CountVector::CountVector(std::vector<std::int64_t> counts_, std::int64_t k_)
    : counts(std::move(counts_)), k(k_) {
    if (k < 1) throw Error("count vector modulus must be >= 1");
    if (static_cast<std::int64_t>(counts.size()) != k) throw Error("count vector length must equal its modulus");
    for (auto c : counts)
        if (c < 0) throw Error("count vector entries must be nonnegative");
}

std::int64_t CountVector::total() const {
    std::int64_t t = 0;
    for (auto c : counts) t = add_ck(t, c);
    return t;
}

namespace {

std::mutex memo_mutex;
std::map<std::int64_t, IntPolynomial> memo;

IntPolynomial compute_cyclotomic(std::int64_t k); // fwd

const IntPolynomial& cached_cyclotomic(std::int64_t k) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
    }
    IntPolynomial p = compute_cyclotomic(k);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(k, std::move(p)).first->second;
}

IntPolynomial compute_cyclotomic(std::int64_t k) {
    IntPolynomial divisor_product({1});
    for (std::int64_t d = 1; d < k; ++d)
        if (k % d == 0) divisor_product = divisor_product * cached_cyclotomic(d);
    return IntPolynomial::xn_minus_one(static_cast<int>(k)).divide_exact(divisor_product);
}

} // namespace

const IntPolynomial& cyclotomic_poly(std::int64_t k) {
    if (k < 1) throw Error("cyclotomic index must be >= 1");
    return cached_cyclotomic(k);
}

std::int64_t euler_phi(std::int64_t k) {
    std::int64_t r = k;
    for (std::int64_t p : prime_factors(k)) r = r / p * (p - 1);
    return r;
}

bool is_vanishing(const CountVector& c) {
    IntPolynomial p(std::vector<std::int64_t>(c.counts));
    if (p.is_zero()) return true;
    if (c.k == 1) return false; // a positive multiple of zeta_1 = 1
    return p.remainder_monic(cyclotomic_poly(c.k)).is_zero();
}

bool rows_orthogonal(const std::int32_t* x, const std::int32_t* y, int n, std::int64_t k) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(mod_pos(std::int64_t{x[i]} - y[i], k))];
    return is_vanishing(CountVector(std::move(counts), k));
}

bool rows_orthogonal(const Word& x, const Word& y) {
    if (x.k != y.k) throw Error("words have different moduli");
    if (x.v.size() != y.v.size()) throw Error("words have different lengths");
    return rows_orthogonal(x.v.data(), y.v.data(), x.n(), x.k);
}

} // namespace bhc
