#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/error.hpp"

namespace bhc {

using std::int64_t;

bool is_prime(int64_t n);
int64_t ipow(int64_t base, int64_t exp);
std::vector<int64_t> prime_factors(int64_t n); // distinct primes, ascending
int64_t inverse_mod(int64_t a, int64_t m);     // gcd(a, m) = 1

struct PhaseParams;

/// x = a*p^s + b*m (mod k) with 0 <= a < m and 0 <= b < p^s; always unique.
struct Decomposition {
    int64_t a;
    int64_t b;
};

Decomposition decompose(int64_t x, const PhaseParams& pp);

/// Phase decomposition k = m * p^s with p prime and gcd(m, p) = 1.
struct PhaseParams {
    int64_t p;
    int64_t s;
    int64_t m;
    int64_t k;

    PhaseParams(int64_t p_, int64_t s_, int64_t m_);

    /// Requires k to be a prime power p^s (m = 1).
    static PhaseParams prime_power(int64_t k);

    /// Splits k at the given prime: s = v_p(k) >= 1, m = k / p^s.
    static PhaseParams with_prime(int64_t k, int64_t p);

    /// Deterministic default split: the unique prime whose square divides k,
    /// or the largest prime factor when k is squarefree. Errors when two
    /// distinct squared primes divide k.
    static PhaseParams default_split(int64_t k);

    int64_t ps() const { return ipow(p, s); }       // p^s
    int64_t ps1() const { return ipow(p, s - 1); }  // p^(s-1)

private:
    int64_t inv_ps_mod_m_ = 0; // (p^s)^-1 mod m
    int64_t inv_m_mod_ps_ = 0; // m^-1 mod p^s
    friend Decomposition decompose(int64_t, const PhaseParams&);
};

enum class Metric { hamming, lee, star, dagger };

Metric metric_from_string(const std::string& s);
std::string metric_name(Metric m);

/// Weight of a single residue x in [0, k).
///   hamming: [x != 0]
///   lee:     min(x, k - x)
///   star:    requires m = 1; 0 / p^(s-1) on multiples of p^(s-1) / (p-1)p^(s-2) otherwise.
///            For s = 1 every residue is a multiple of p^0 = 1, so the last
///            branch is vacuous and the weight degenerates to the Hamming weight.
///   dagger:  wt*(b) when a = 0, else p^(s-1), for x = a*p^s + b*m.
int64_t weight(Metric metric, int64_t x, const PhaseParams& pp);

/// Codeword over Z_k. All entries are canonical representatives in [0, k).
struct Word {
    std::vector<std::int32_t> v;
    int64_t k = 0;

    Word() = default;
    Word(std::vector<std::int32_t> entries, int64_t modulus);

    int n() const { return static_cast<int>(v.size()); }
    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return v < o.v; }

    bool is_constant() const;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

Word add(const Word& x, const Word& y);
Word sub(const Word& x, const Word& y);
Word translate(const Word& x, int64_t alpha); // x + alpha*1
Word scale(const Word& x, int64_t c);
Word zero_word(int n, int64_t k);

int64_t distance(Metric metric, const Word& x, const Word& y, const PhaseParams& pp);

/// Hamming distance shortcut (no PhaseParams needed).
int64_t hamming_distance(const Word& x, const Word& y);

} // namespace bhc
