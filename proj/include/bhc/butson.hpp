#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bhc/logmatrix.hpp"

namespace bhc {

/// Fourier matrix F_n in log form: entry (i,j) = (i-1)(j-1) mod n, phase n.
LogMatrix fourier(int n);

/// Re-expresses M over the ell-th roots of unity (k | ell): every entry is
/// multiplied by ell/k. Orthogonality is untouched.
LogMatrix embed_phase(const LogMatrix& m, std::int64_t ell);

/// Kronecker product with the left factor major:
/// entry((i,a),(j,b)) = A[i][j] + B[a][b] mod lcm(k_A, k_B),
/// both factors first embedded into the common phase.
LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b);

/// HH* = nI in log form: every pair of distinct rows passes rows_orthogonal.
bool is_butson(const LogMatrix& m);

/// First failing row pair, if any (1-based), for diagnostics.
std::optional<std::pair<int, int>> butson_violation(const LogMatrix& m);

/// Column-orthogonality check (used by tests; analytically equivalent for
/// square matrices but asserted independently).
bool columns_orthogonal(const LogMatrix& m);

/// Normalizes first row and column to zero via an equivalence operation;
/// returns the dephased matrix and the MonomialPair that maps m to it.
std::pair<LogMatrix, MonomialPair> dephase(const LogMatrix& m);

LogMatrix apply_monomial(const LogMatrix& m, const MonomialPair& pair);

/// Recursive generator A^{t_1,...,t_s} over Z_{p^s}: r = sum t_i rows,
/// n = p^{s t_1 + (s-1) t_2 + ... + t_s - s} columns; the row added at stage i
/// is [0, 1, ..., p^{s-i+1}-1] * p^{i-1} tiled over the previous block and has
/// additive order p^{s-i+1}.
struct GeneratorMatrix {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::vector<std::int64_t> t;
    int rows = 0;
    int cols = 0;
    std::vector<std::int32_t> a;            // row-major
    std::vector<std::int64_t> stage_order;  // additive order per row

    const std::int32_t* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
    Word row_word(int i) const;
};

GeneratorMatrix build_generator(std::int64_t p, std::int64_t s, const std::vector<std::int64_t>& t);

/// All Z_{p^s}-combinations of the generator rows, deduplicated. Coefficient
/// tuples run through a mixed-radix counter whose digit for row j ranges over
/// that row's additive order, with the first row's coefficient varying
/// fastest; the first occurrence of each row is kept. Throws if the distinct
/// row count differs from n.
LogMatrix span_rows(const GeneratorMatrix& g);

/// Row-set equality of span_rows(A^{t}) with
/// (F_p)^{t_s} (x) (F_{p^2})^{t_{s-1}} (x) ... (x) (F_{p^s})^{t_1 - 1},
/// every factor embedded into phase p^s.
bool verify_kron_factorization(std::int64_t p, std::int64_t s, const std::vector<std::int64_t>& t,
                               int max_order = 4096);

/// Per-symbol repetition maxima r_H(l) over rows 2..n, plus (for prime-power
/// phase) the bound r_H(l) <= n/p (multiples of p^{s-1}) or n/p - 1 (others),
/// and the row pattern check: every non-initial row splits into n/p translates
/// of u = [0, p^{s-1}, ..., (p-1)p^{s-1}], i.e. within each residue class mod
/// p^{s-1} the p symbol counts are uniform.
struct RowStats {
    std::map<std::int64_t, std::int64_t> max_repetitions; // r_H(l), rows 2..n
    bool prime_power_phase = false;
    bool bound_ok = false;   // meaningful only when prime_power_phase
    bool pattern_ok = false; // meaningful only when prime_power_phase
    std::vector<int> pattern_violations; // 1-based rows breaking the pattern
};

RowStats row_stats(const LogMatrix& m);

} // namespace bhc
