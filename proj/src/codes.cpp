#include "bhc/codes.hpp"

#include <algorithm>
#include <cmath>

#include "bhc/checked.hpp"

namespace bhc {

int Code::index_of(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

bool Code::insert(const Word& w) {
    if (w.k != k || w.n() != n) throw Error("codeword length/modulus does not match code");
    auto [it, fresh] = index_.emplace(w, static_cast<int>(words.size()));
    if (!fresh) {
        ++merged_duplicates;
        return false;
    }
    words.push_back(w);
    return true;
}

std::pair<Code, Code> build_codes(const LogMatrix& m) {
    Code f(m.n, m.k, CodeTag::f_code);
    for (int i = 0; i < m.n; ++i) f.insert(m.row_word(i));
    Code c(m.n, m.k, CodeTag::c_code);
    for (std::int64_t alpha = 0; alpha < m.k; ++alpha)
        for (int i = 0; i < m.n; ++i) c.insert(translate(m.row_word(i), alpha));
    return {std::move(f), std::move(c)};
}

namespace {

std::int64_t pair_scan_min(const Code& c, const std::vector<std::int64_t>& wt_table) {
    if (c.size() < 2) throw Error("minimum distance needs at least two codewords");
    std::int64_t best = -1;
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& x = c.words[i].v;
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& y = c.words[j].v;
            std::int64_t d = 0;
            for (std::size_t t = 0; t < x.size(); ++t) {
                d += wt_table[static_cast<std::size_t>(mod_pos(std::int64_t{y[t]} - x[t], c.k))];
                if (best >= 0 && d >= best) break;
            }
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

std::vector<std::int64_t> weight_table(Metric metric, const PhaseParams& pp) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(pp.k));
    for (std::int64_t x = 0; x < pp.k; ++x) t[static_cast<std::size_t>(x)] = weight(metric, x, pp);
    return t;
}

} // namespace

std::int64_t min_distance(const Code& c, Metric metric, const PhaseParams& pp) {
    if (pp.k != c.k) throw Error("phase parameters do not match code modulus");
    return pair_scan_min(c, weight_table(metric, pp));
}

std::int64_t min_hamming_distance(const Code& c) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(c.k), 1);
    t[0] = 0;
    return pair_scan_min(c, t);
}

std::int64_t min_lee_distance(const Code& c) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(c.k));
    for (std::int64_t x = 0; x < c.k; ++x) t[static_cast<std::size_t>(x)] = std::min(x, c.k - x);
    return pair_scan_min(c, t);
}

AdditiveTypeResult additive_type(const Code& c, std::int64_t p, std::int64_t s) {
    std::int64_t k = ipow(p, s);
    if (c.k != k) throw Error("code modulus is not p^s");
    AdditiveTypeResult res;
    // Finite + closed under addition => subgroup. Pairs scanned in insertion
    // order, (i,i) first for each i, so the earliest witness is deterministic.
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i; j < c.size(); ++j) {
            Word sum = add(c.words[i], c.words[j]);
            if (!c.contains(sum)) {
                res.additive = false;
                res.witness_x = c.words[i];
                res.witness_y = c.words[j];
                res.witness_sum = sum;
                return res;
            }
        }

    res.additive = true;
    // Element-order census: N_j = #{x : p^j x = 0} = p^{sum_i min(j, s-i+1) t_i}.
    std::vector<std::int64_t> logN(static_cast<std::size_t>(s) + 1, 0);
    for (std::int64_t j = 0; j <= s; ++j) {
        std::int64_t pj = ipow(p, j);
        std::int64_t cnt = 0;
        for (const auto& w : c.words) {
            bool killed = true;
            for (auto e : w.v)
                if (mod_pos(std::int64_t{e} * pj, k) != 0) {
                    killed = false;
                    break;
                }
            cnt += killed;
        }
        std::int64_t lg = 0, t = cnt;
        while (t > 1) {
            if (t % p != 0) throw Error("subgroup order is not a power of p");
            t /= p;
            ++lg;
        }
        logN[static_cast<std::size_t>(j)] = lg;
    }
    // D_j = logN_j - logN_{j-1} counts generators of order >= p^j;
    // multiplicity of Z_{p^j} factors = D_j - D_{j+1}; t_i pairs with j = s-i+1.
    std::vector<std::int64_t> d(static_cast<std::size_t>(s) + 2, 0);
    for (std::int64_t j = 1; j <= s; ++j)
        d[static_cast<std::size_t>(j)] = logN[static_cast<std::size_t>(j)] - logN[static_cast<std::size_t>(j - 1)];
    res.t.assign(static_cast<std::size_t>(s), 0);
    for (std::int64_t j = 1; j <= s; ++j)
        res.t[static_cast<std::size_t>(s - j)] = d[static_cast<std::size_t>(j)] - d[static_cast<std::size_t>(j + 1)];
    return res;
}

Code gray_image(const Code& c, GrayMap f, const GrayContext& ctx) {
    if (ctx.params.k != c.k) throw Error("Gray context modulus does not match code");
    std::int64_t ps1 = ctx.params.ps1();
    Code img(static_cast<int>(c.n * ps1), ctx.params.m * ctx.params.p, CodeTag::image);
    for (const auto& w : c.words) img.insert(map_word(f, w, ctx));
    if (img.size() != c.size()) throw Error("Gray image lost codewords; map not injective on this code");
    return img;
}

PlotkinResult plotkin_check(const LogMatrix& m, std::optional<std::int64_t> p) {
    PhaseParams pp = p ? PhaseParams::with_prime(m.k, *p) : PhaseParams::default_split(m.k);
    PlotkinResult res;
    res.p = pp.p;
    for (std::int64_t x = 0; x < pp.k; ++x) res.weight_sum += weight(Metric::dagger, x, pp);

    if (m.n == 1) { // no pairs: vacuously meets the bound
        res.meets = true;
        return res;
    }
    Code punctured(m.n - 1, m.k, CodeTag::custom);
    for (int i = 0; i < m.n; ++i)
        punctured.insert(Word(std::vector<std::int32_t>(m.row(i) + 1, m.row(i) + m.n), m.k));
    if (punctured.size() != static_cast<std::size_t>(m.n)) {
        res.meets = false; // puncturing collided; parameters (n-1, n, gamma n) unreachable
        return res;
    }
    res.min_distance = min_distance(punctured, Metric::dagger, pp);
    res.meets = mul_ck(res.min_distance, m.k) == mul_ck(res.weight_sum, m.n);
    return res;
}

} // namespace bhc
