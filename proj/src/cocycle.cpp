#include "bhc/cocycle.hpp"

#include "bhc/checked.hpp"
#include "bhc/cyclotomic.hpp"

namespace bhc {

std::optional<CocycleWitness> cocycle_violation(const LogMatrix& psi, const FiniteGroup& g) {
    if (psi.n != g.order()) throw Error("cocycle table order does not match group order");
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::int64_t lhs = std::int64_t{psi.at(a, b)} + psi.at(g.mul(a, b), c);
                std::int64_t rhs = std::int64_t{psi.at(a, g.mul(b, c))} + psi.at(b, c);
                if (mod_pos(lhs - rhs, psi.k) != 0) return CocycleWitness{a, b, c};
            }
    return std::nullopt;
}

bool is_cocycle(const LogMatrix& psi, const FiniteGroup& g) {
    return !cocycle_violation(psi, g).has_value();
}

bool is_normalized(const LogMatrix& psi) {
    for (int i = 0; i < psi.n; ++i)
        if (psi.at(i, 0) != 0 || psi.at(0, i) != 0) return false;
    return true;
}

LogMatrix coboundary(const Word& phi_map, const FiniteGroup& g) {
    if (phi_map.n() != g.order()) throw Error("phi map length does not match group order");
    if (phi_map.v[0] != 0) throw Error("phi map must be normalized (phi(identity) = 0)");
    int n = g.order();
    LogMatrix psi(n, phi_map.k);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            psi.at(a, b) = static_cast<std::int32_t>(
                mod_pos(-std::int64_t{phi_map.v[static_cast<std::size_t>(a)]} - phi_map.v[static_cast<std::size_t>(b)] +
                            phi_map.v[static_cast<std::size_t>(g.mul(a, b))],
                        phi_map.k));
    return psi;
}

std::optional<CocycleWitness> group_invariance_violation(const LogMatrix& a, const FiniteGroup& g) {
    if (a.n != g.order()) throw Error("matrix order does not match group order");
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int t = 0; t < n; ++t)
                if (a.at(g.mul(x, t), g.mul(y, t)) != a.at(x, y)) return CocycleWitness{x, y, t};
    return std::nullopt;
}

bool is_group_invariant(const LogMatrix& a, const FiniteGroup& g) {
    return !group_invariance_violation(a, g).has_value();
}

LogMatrix cocycle_from_invariant(const LogMatrix& a, const FiniteGroup& g) {
    if (auto w = group_invariance_violation(a, g))
        throw Error("matrix is not group invariant: a[" + g.label(w->g) + "*" + g.label(w->k) + "][" +
                    g.label(w->h) + "*" + g.label(w->k) + "] differs from a[" + g.label(w->g) + "][" + g.label(w->h) + "]");
    int n = g.order();
    LogMatrix psi(n, a.k);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int yi = g.inv(y);
            std::int64_t v = -std::int64_t{a.at(x, 0)} + a.at(x, yi) - a.at(0, yi) + a.at(0, 0);
            psi.at(x, y) = static_cast<std::int32_t>(mod_pos(v, a.k));
        }
    return psi;
}

bool is_orthogonal_cocycle(const LogMatrix& psi, const FiniteGroup& g) {
    if (auto w = cocycle_violation(psi, g))
        throw Error("not a cocycle at (" + g.label(w->g) + "," + g.label(w->h) + "," + g.label(w->k) + ")");
    std::int64_t k = psi.k;
    for (int i = 1; i < psi.n; ++i) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < psi.n; ++j) ++counts[static_cast<std::size_t>(psi.at(i, j))];
        if (!is_vanishing(CountVector(std::move(counts), k))) return false;
    }
    return true;
}

FiniteGroup extension_group(const LogMatrix& psi, const FiniteGroup& g, std::int64_t k) {
    if (psi.k != k) throw Error("cocycle modulus does not match coefficient group order");
    if (auto w = cocycle_violation(psi, g))
        throw Error("not a cocycle at (" + g.label(w->g) + "," + g.label(w->h) + "," + g.label(w->k) + ")");
    if (!is_normalized(psi)) throw Error("cocycle must be normalized");
    int n = g.order();
    std::int64_t big = mul_ck(k, n);
    if (big > 1 << 16) throw Error("extension group too large");
    int bn = static_cast<int>(big);

    auto idx = [&](std::int64_t u, int a) { return static_cast<int>(u * n + a); };
    std::vector<int> table(static_cast<std::size_t>(bn) * bn);
    for (std::int64_t u = 0; u < k; ++u)
        for (int a = 0; a < n; ++a)
            for (std::int64_t v = 0; v < k; ++v)
                for (int b = 0; b < n; ++b)
                    table[static_cast<std::size_t>(idx(u, a)) * bn + idx(v, b)] =
                        idx(mod_pos(u + v + psi.at(a, b), k), g.mul(a, b));
    std::vector<std::string> labels(static_cast<std::size_t>(bn));
    for (std::int64_t u = 0; u < k; ++u)
        for (int a = 0; a < n; ++a)
            labels[static_cast<std::size_t>(idx(u, a))] = "(" + std::to_string(u) + "," + g.label(a) + ")";
    return FiniteGroup(bn, std::move(table), std::move(labels));
}

LogMatrix transversal_cocycle(const FiniteGroup& ext, const FiniteGroup& g, std::int64_t k) {
    int n = g.order();
    if (ext.order() != static_cast<int>(k) * n) throw Error("extension order is not k*|G|");
    auto idx = [&](std::int64_t u, int a) { return static_cast<int>(u * n + a); };
    LogMatrix psi(n, k);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int prod = ext.mul(idx(0, a), idx(0, b));      // sigma(a) sigma(b) = (psi(a,b), ab)
            int back = ext.mul(prod, ext.inv(idx(0, g.mul(a, b)))); // ... sigma(ab)^-1 = (psi(a,b), 1)
            if (back % n != 0) throw Error("transversal section did not land in the centre");
            psi.at(a, b) = static_cast<std::int32_t>(back / n);
        }
    return psi;
}

namespace {

bool pairs_balanced(const LogMatrix& m, bool rows) {
    if (m.n % m.k != 0) return m.n == 1;
    std::int64_t quota = m.n / m.k;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            std::vector<std::int64_t> cnt(static_cast<std::size_t>(m.k), 0);
            for (int t = 0; t < m.n; ++t) {
                std::int64_t d = rows ? std::int64_t{m.at(i, t)} - m.at(j, t) : std::int64_t{m.at(t, i)} - m.at(t, j);
                ++cnt[static_cast<std::size_t>(mod_pos(d, m.k))];
            }
            for (auto c : cnt)
                if (c != quota) return false;
        }
    return true;
}

} // namespace

bool is_balanced(const LogMatrix& m) {
    return pairs_balanced(m, true) && pairs_balanced(m, false);
}

} // namespace bhc
