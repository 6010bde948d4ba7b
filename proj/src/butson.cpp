#include "bhc/butson.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "bhc/checked.hpp"
#include "bhc/cyclotomic.hpp"

namespace bhc {

LogMatrix fourier(int n) {
    if (n < 1) throw Error("fourier order must be >= 1");
    LogMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = static_cast<std::int32_t>((std::int64_t{i} * j) % n);
    return m;
}

LogMatrix embed_phase(const LogMatrix& m, std::int64_t ell) {
    if (ell < 1 || ell % m.k != 0)
        throw Error("phase " + std::to_string(m.k) + " does not divide target phase " + std::to_string(ell));
    std::int64_t f = ell / m.k;
    LogMatrix out(m.n, ell);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = static_cast<std::int32_t>(m.a[i] * f);
    return out;
}

LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b) {
    std::int64_t ell = std::lcm(a.k, b.k);
    LogMatrix ea = embed_phase(a, ell);
    LogMatrix eb = embed_phase(b, ell);
    int n = ea.n * eb.n;
    LogMatrix out(n, ell);
    for (int i = 0; i < ea.n; ++i)
        for (int x = 0; x < eb.n; ++x)
            for (int j = 0; j < ea.n; ++j)
                for (int y = 0; y < eb.n; ++y)
                    out.at(i * eb.n + x, j * eb.n + y) =
                        static_cast<std::int32_t>(mod_pos(std::int64_t{ea.at(i, j)} + eb.at(x, y), ell));
    return out;
}

std::optional<std::pair<int, int>> butson_violation(const LogMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (!rows_orthogonal(m.row(i), m.row(j), m.n, m.k)) return std::make_pair(i + 1, j + 1);
    return std::nullopt;
}

bool is_butson(const LogMatrix& m) {
    return !butson_violation(m).has_value();
}

bool columns_orthogonal(const LogMatrix& m) {
    std::vector<std::int32_t> ci(static_cast<std::size_t>(m.n)), cj(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            for (int r = 0; r < m.n; ++r) {
                ci[static_cast<std::size_t>(r)] = m.at(r, i);
                cj[static_cast<std::size_t>(r)] = m.at(r, j);
            }
            if (!rows_orthogonal(ci.data(), cj.data(), m.n, m.k)) return false;
        }
    return true;
}

std::pair<LogMatrix, MonomialPair> dephase(const LogMatrix& m) {
    MonomialPair mp = MonomialPair::identity(m.n);
    // row_phase[i] = -M[i][0]; col_phase[j] = M[0][j] - M[0][0]
    for (int i = 0; i < m.n; ++i) mp.row_phase[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(mod_pos(-std::int64_t{m.at(i, 0)}, m.k));
    for (int j = 0; j < m.n; ++j)
        mp.col_phase[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(mod_pos(std::int64_t{m.at(0, j)} - m.at(0, 0), m.k));
    return {apply_monomial(m, mp), mp};
}

LogMatrix apply_monomial(const LogMatrix& m, const MonomialPair& p) {
    if (static_cast<int>(p.row_perm.size()) != m.n || static_cast<int>(p.col_perm.size()) != m.n ||
        static_cast<int>(p.row_phase.size()) != m.n || static_cast<int>(p.col_phase.size()) != m.n)
        throw Error("monomial pair size does not match matrix order");
    LogMatrix out(m.n, m.k);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.at(i, j) = static_cast<std::int32_t>(mod_pos(
                std::int64_t{p.row_phase[static_cast<std::size_t>(i)]} +
                    m.at(p.row_perm[static_cast<std::size_t>(i)], p.col_perm[static_cast<std::size_t>(j)]) -
                    p.col_phase[static_cast<std::size_t>(j)],
                m.k));
    return out;
}

Word GeneratorMatrix::row_word(int i) const {
    return Word(std::vector<std::int32_t>(row(i), row(i) + cols), ipow(p, s));
}

GeneratorMatrix build_generator(std::int64_t p, std::int64_t s, const std::vector<std::int64_t>& t) {
    if (!is_prime(p)) throw Error("p must be prime");
    if (s < 1) throw Error("s must be >= 1");
    if (static_cast<std::int64_t>(t.size()) != s) throw Error("t must have exactly s entries");
    if (t[0] < 1) throw Error("t_1 must be >= 1");
    for (auto ti : t)
        if (ti < 0) throw Error("t entries must be nonnegative");

    GeneratorMatrix g;
    g.p = p;
    g.s = s;
    g.t = t;
    std::int64_t k = ipow(p, s);

    // A^{1,0,...,0} = [0]
    g.rows = 1;
    g.cols = 1;
    g.a = {0};
    g.stage_order = {k};

    for (std::int64_t stage = 1; stage <= s; ++stage) {
        std::int64_t target = t[static_cast<std::size_t>(stage - 1)] - (stage == 1 ? 1 : 0);
        std::int64_t step = ipow(p, stage - 1);         // entry stride p^{i-1}
        std::int64_t copies = ipow(p, s - stage + 1);   // p^{s-i+1} blocks
        for (std::int64_t rep = 0; rep < target; ++rep) {
            int new_cols = static_cast<int>(mul_ck(g.cols, copies));
            std::vector<std::int32_t> na(static_cast<std::size_t>(g.rows + 1) * new_cols);
            for (int r = 0; r < g.rows; ++r)
                for (std::int64_t c = 0; c < copies; ++c)
                    std::copy(g.row(r), g.row(r) + g.cols,
                              na.begin() + static_cast<std::ptrdiff_t>(r) * new_cols + c * g.cols);
            for (std::int64_t c = 0; c < copies; ++c)
                for (int j = 0; j < g.cols; ++j)
                    na[static_cast<std::size_t>(g.rows) * new_cols + static_cast<std::size_t>(c * g.cols + j)] =
                        static_cast<std::int32_t>(mod_pos(c * step, k));
            g.a = std::move(na);
            g.cols = new_cols;
            g.rows += 1;
            g.stage_order.push_back(copies); // additive order of the u_i row
        }
    }
    return g;
}

LogMatrix span_rows(const GeneratorMatrix& g) {
    std::int64_t k = ipow(g.p, g.s);
    int n = g.cols;
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(g.rows), 0);
    std::vector<std::int32_t> acc(static_cast<std::size_t>(n), 0);

    LogMatrix out(n, k);
    std::unordered_set<Word, WordHash> seen;
    int found = 0;

    auto emit = [&]() {
        Word w(std::vector<std::int32_t>(acc.begin(), acc.end()), k);
        if (seen.insert(w).second) {
            if (found >= n) throw Error("span produced more than n distinct rows");
            std::copy(acc.begin(), acc.end(), out.a.begin() + static_cast<std::ptrdiff_t>(found) * n);
            ++found;
        }
    };

    // Mixed-radix counter, first row's coefficient fastest.
    while (true) {
        acc.assign(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < g.rows; ++r) {
            if (coeff[static_cast<std::size_t>(r)] == 0) continue;
            const std::int32_t* row = g.row(r);
            for (int j = 0; j < n; ++j)
                acc[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(
                    mod_pos(acc[static_cast<std::size_t>(j)] + coeff[static_cast<std::size_t>(r)] * std::int64_t{row[j]}, k));
        }
        emit();
        int pos = 0;
        while (pos < g.rows) {
            if (++coeff[static_cast<std::size_t>(pos)] < g.stage_order[static_cast<std::size_t>(pos)]) break;
            coeff[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == g.rows) break;
    }
    if (found != n)
        throw Error("span produced " + std::to_string(found) + " distinct rows, expected " + std::to_string(n));
    return out;
}

namespace {

std::set<Word> row_set(const LogMatrix& m) {
    std::set<Word> s;
    for (int i = 0; i < m.n; ++i) s.insert(m.row_word(i));
    return s;
}

} // namespace

bool verify_kron_factorization(std::int64_t p, std::int64_t s, const std::vector<std::int64_t>& t, int max_order) {
    GeneratorMatrix g = build_generator(p, s, t);
    if (g.cols > max_order) throw Error("order exceeds configured bound");
    LogMatrix lhs = span_rows(g);

    std::int64_t k = ipow(p, s);
    LogMatrix rhs(1, k); // Kronecker identity [[0]]
    for (std::int64_t stage = s; stage >= 1; --stage) {
        std::int64_t reps = t[static_cast<std::size_t>(stage - 1)] - (stage == 1 ? 1 : 0);
        std::int64_t order = ipow(p, s - stage + 1);
        for (std::int64_t r = 0; r < reps; ++r)
            rhs = kronecker(rhs, embed_phase(fourier(static_cast<int>(order)), k));
    }
    if (rhs.n != lhs.n || rhs.k != lhs.k) return false;
    return row_set(lhs) == row_set(rhs);
}

RowStats row_stats(const LogMatrix& m) {
    RowStats st;
    for (std::int64_t l = 0; l < m.k; ++l) st.max_repetitions[l] = 0;
    for (int i = 1; i < m.n; ++i) {
        std::vector<std::int64_t> cnt(static_cast<std::size_t>(m.k), 0);
        for (int j = 0; j < m.n; ++j) ++cnt[static_cast<std::size_t>(m.at(i, j))];
        for (std::int64_t l = 0; l < m.k; ++l)
            st.max_repetitions[l] = std::max(st.max_repetitions[l], cnt[static_cast<std::size_t>(l)]);
    }

    auto factors = prime_factors(m.k);
    st.prime_power_phase = factors.size() == 1;
    if (!st.prime_power_phase) return st;
    if (m.n == 1) { // no non-initial rows: both checks vacuous
        st.bound_ok = true;
        st.pattern_ok = true;
        return st;
    }

    std::int64_t p = factors[0];
    std::int64_t ps1 = m.k / p; // p^{s-1}
    if (m.n % p != 0) {
        st.bound_ok = false;
        st.pattern_ok = false;
        return st;
    }
    std::int64_t tcount = m.n / p;

    st.bound_ok = true;
    for (std::int64_t l = 0; l < m.k; ++l) {
        std::int64_t limit = (l % ps1 == 0) ? tcount : tcount - 1;
        if (st.max_repetitions[l] > limit) st.bound_ok = false;
    }

    st.pattern_ok = true;
    for (int i = 1; i < m.n; ++i) {
        std::vector<std::int64_t> cnt(static_cast<std::size_t>(m.k), 0);
        for (int j = 0; j < m.n; ++j) ++cnt[static_cast<std::size_t>(m.at(i, j))];
        bool row_ok = true;
        for (std::int64_t r = 0; r < ps1 && row_ok; ++r)
            for (std::int64_t x = 1; x < p; ++x)
                if (cnt[static_cast<std::size_t>(r + x * ps1)] != cnt[static_cast<std::size_t>(r)]) {
                    row_ok = false;
                    break;
                }
        if (!row_ok) {
            st.pattern_ok = false;
            st.pattern_violations.push_back(i + 1);
        }
    }
    return st;
}

} // namespace bhc
