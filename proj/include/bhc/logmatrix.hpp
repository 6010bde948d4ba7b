#pragma once

#include <cstdint>
#include <vector>

#include "bhc/ring.hpp"

namespace bhc {

/// Square matrix of residues mod k: the logarithmic form L(H) of a phase-k matrix.
struct LogMatrix {
    int n = 0;
    std::int64_t k = 1;
    std::vector<std::int32_t> a; // row-major, n*n entries in [0, k)

    LogMatrix() = default;
    LogMatrix(int n_, std::int64_t k_); // zero-filled
    LogMatrix(int n_, std::int64_t k_, std::vector<std::int32_t> entries);

    std::int32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    std::int32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::int32_t* row(int i) const { return a.data() + static_cast<std::size_t>(i) * n; }

    Word row_word(int i) const;
    bool operator==(const LogMatrix&) const = default;
};

/// Row/column permutations plus phase vectors: the log form of a pair of
/// monomial matrices (P, Q). apply_monomial computes
///   out[i][j] = row_phase[i] + M[row_perm[i]][col_perm[j]] - col_phase[j]  (mod k),
/// i.e. phases add on rows and conjugate (subtract) on columns.
struct MonomialPair {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::vector<std::int32_t> row_phase;
    std::vector<std::int32_t> col_phase;

    static MonomialPair identity(int n);
    bool is_identity() const;
};

} // namespace bhc
