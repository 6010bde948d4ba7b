#include "bhc/ring.hpp"

#include <algorithm>
#include <numeric>

#include "bhc/checked.hpp"

namespace bhc {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t ipow(int64_t base, int64_t exp) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) r = mul_ck(r, base);
    return r;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int64_t inverse_mod(int64_t a, int64_t m) {
    if (m == 1) return 0;
    int64_t t = 0, new_t = 1;
    int64_t r = m, new_r = mod_pos(a, m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw Error("inverse_mod: arguments are not coprime");
    return mod_pos(t, m);
}

PhaseParams::PhaseParams(int64_t p_, int64_t s_, int64_t m_) : p(p_), s(s_), m(m_) {
    if (!is_prime(p)) throw Error("PhaseParams: p = " + std::to_string(p) + " is not prime");
    if (s < 1) throw Error("PhaseParams: s must be >= 1");
    if (m < 1) throw Error("PhaseParams: m must be >= 1");
    if (m % p == 0) throw Error("PhaseParams: m must be coprime to p");
    k = mul_ck(m, ipow(p, s));
    inv_ps_mod_m_ = inverse_mod(ipow(p, s), m);
    inv_m_mod_ps_ = inverse_mod(m, ipow(p, s));
}

PhaseParams PhaseParams::prime_power(int64_t k) {
    auto ps = prime_factors(k);
    if (ps.size() != 1) throw Error("phase " + std::to_string(k) + " is not a prime power");
    int64_t p = ps[0], s = 0, t = k;
    while (t % p == 0) { t /= p; ++s; }
    if (t != 1) throw Error("phase " + std::to_string(k) + " is not a prime power");
    return PhaseParams(p, s, 1);
}

PhaseParams PhaseParams::with_prime(int64_t k, int64_t p) {
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    if (k < 2 || k % p != 0) throw Error("p = " + std::to_string(p) + " does not divide phase " + std::to_string(k));
    int64_t s = 0, m = k;
    while (m % p == 0) { m /= p; ++s; }
    return PhaseParams(p, s, m);
}

PhaseParams PhaseParams::default_split(int64_t k) {
    if (k < 2) throw Error("phase must be >= 2");
    auto ps = prime_factors(k);
    std::vector<int64_t> squared;
    for (int64_t p : ps)
        if (k % (p * p) == 0) squared.push_back(p);
    if (squared.size() > 1)
        throw Error("phase " + std::to_string(k) + " has two distinct squared primes; no canonical m*p^s split");
    int64_t p = squared.size() == 1 ? squared[0] : ps.back();
    return with_prime(k, p);
}

Decomposition decompose(int64_t x, const PhaseParams& pp) {
    if (x < 0 || x >= pp.k) throw Error("residue " + std::to_string(x) + " out of range for modulus " + std::to_string(pp.k));
    int64_t a = pp.m == 1 ? 0 : mod_pos(x % pp.m * pp.inv_ps_mod_m_, pp.m);
    int64_t b = mod_pos(x % pp.ps() * pp.inv_m_mod_ps_, pp.ps());
    return {a, b};
}

Metric metric_from_string(const std::string& s) {
    if (s == "hamming") return Metric::hamming;
    if (s == "lee") return Metric::lee;
    if (s == "star") return Metric::star;
    if (s == "dagger") return Metric::dagger;
    throw Error("unknown metric '" + s + "'");
}

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::hamming: return "hamming";
        case Metric::lee: return "lee";
        case Metric::star: return "star";
        case Metric::dagger: return "dagger";
    }
    return "?";
}

namespace {

int64_t star_weight(int64_t x, const PhaseParams& pp) {
    if (pp.m != 1) throw Error("star weight requires a prime-power modulus (m = 1)");
    if (x == 0) return 0;
    int64_t ps1 = pp.ps1();
    if (x % ps1 == 0) return ps1;
    return (pp.p - 1) * ipow(pp.p, pp.s - 2);
}

} // namespace

int64_t weight(Metric metric, int64_t x, const PhaseParams& pp) {
    if (x < 0 || x >= pp.k) throw Error("residue " + std::to_string(x) + " out of range for modulus " + std::to_string(pp.k));
    switch (metric) {
        case Metric::hamming:
            return x != 0 ? 1 : 0;
        case Metric::lee:
            return std::min(x, pp.k - x);
        case Metric::star:
            return star_weight(x, pp);
        case Metric::dagger: {
            auto d = decompose(x, pp);
            if (d.a != 0) return pp.ps1();
            return star_weight(d.b, PhaseParams(pp.p, pp.s, 1));
        }
    }
    throw Error("unreachable metric");
}

Word::Word(std::vector<std::int32_t> entries, int64_t modulus) : v(std::move(entries)), k(modulus) {
    if (k < 1) throw Error("word modulus must be >= 1");
    if (v.empty()) throw Error("word length must be >= 1");
    for (auto e : v)
        if (e < 0 || e >= k) throw Error("word entry " + std::to_string(e) + " out of range [0," + std::to_string(k) + ")");
}

bool Word::is_constant() const {
    return std::all_of(v.begin(), v.end(), [&](std::int32_t e) { return e == v[0]; });
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : w.v) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
void check_compatible(const Word& x, const Word& y) {
    if (x.k != y.k) throw Error("words have different moduli");
    if (x.v.size() != y.v.size()) throw Error("words have different lengths");
}
} // namespace

Word add(const Word& x, const Word& y) {
    check_compatible(x, y);
    Word r = x;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = static_cast<std::int32_t>(mod_pos(x.v[i] + int64_t{y.v[i]}, x.k));
    return r;
}

Word sub(const Word& x, const Word& y) {
    check_compatible(x, y);
    Word r = x;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = static_cast<std::int32_t>(mod_pos(x.v[i] - int64_t{y.v[i]}, x.k));
    return r;
}

Word translate(const Word& x, int64_t alpha) {
    Word r = x;
    for (auto& e : r.v) e = static_cast<std::int32_t>(mod_pos(e + alpha, x.k));
    return r;
}

Word scale(const Word& x, int64_t c) {
    Word r = x;
    for (auto& e : r.v) e = static_cast<std::int32_t>(mod_pos(e * c, x.k));
    return r;
}

Word zero_word(int n, int64_t k) {
    return Word(std::vector<std::int32_t>(static_cast<std::size_t>(n), 0), k);
}

int64_t distance(Metric metric, const Word& x, const Word& y, const PhaseParams& pp) {
    check_compatible(x, y);
    if (x.k != pp.k) throw Error("word modulus does not match phase parameters");
    int64_t d = 0;
    for (std::size_t i = 0; i < x.v.size(); ++i)
        d = add_ck(d, weight(metric, mod_pos(int64_t{y.v[i]} - x.v[i], pp.k), pp));
    return d;
}

int64_t hamming_distance(const Word& x, const Word& y) {
    check_compatible(x, y);
    int64_t d = 0;
    for (std::size_t i = 0; i < x.v.size(); ++i) d += x.v[i] != y.v[i];
    return d;
}

} // namespace bhc
