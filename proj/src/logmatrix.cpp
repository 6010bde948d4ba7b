#include "bhc/logmatrix.hpp"

#include <numeric>

#include "bhc/checked.hpp"

namespace bhc {

LogMatrix::LogMatrix(int n_, std::int64_t k_) : n(n_), k(k_) {
    if (n < 1) throw Error("matrix order must be >= 1");
    if (k < 1) throw Error("matrix phase must be >= 1");
    a.assign(static_cast<std::size_t>(n) * n, 0);
}

LogMatrix::LogMatrix(int n_, std::int64_t k_, std::vector<std::int32_t> entries)
    : n(n_), k(k_), a(std::move(entries)) {
    if (n < 1) throw Error("matrix order must be >= 1");
    if (k < 1) throw Error("matrix phase must be >= 1");
    if (a.size() != static_cast<std::size_t>(n) * n) throw Error("matrix entry count does not match order");
    for (auto e : a)
        if (e < 0 || e >= k) throw Error("matrix entry out of range [0,k)");
}

Word LogMatrix::row_word(int i) const {
    return Word(std::vector<std::int32_t>(row(i), row(i) + n), k);
}

MonomialPair MonomialPair::identity(int n) {
    MonomialPair mp;
    mp.row_perm.resize(static_cast<std::size_t>(n));
    mp.col_perm.resize(static_cast<std::size_t>(n));
    std::iota(mp.row_perm.begin(), mp.row_perm.end(), 0);
    std::iota(mp.col_perm.begin(), mp.col_perm.end(), 0);
    mp.row_phase.assign(static_cast<std::size_t>(n), 0);
    mp.col_phase.assign(static_cast<std::size_t>(n), 0);
    return mp;
}

bool MonomialPair::is_identity() const {
    for (std::size_t i = 0; i < row_perm.size(); ++i)
        if (row_perm[i] != static_cast<int>(i) || col_perm[i] != static_cast<int>(i) ||
            row_phase[i] != 0 || col_phase[i] != 0)
            return false;
    return true;
}

} // namespace bhc
