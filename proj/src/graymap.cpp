#include "bhc/graymap.hpp"

#include "bhc/checked.hpp"

namespace bhc {

GrayContext::GrayContext(PhaseParams pp) : params(pp), d(1, pp.p) {
    // D = (s-1)-fold Kronecker power of F_p; for s = 1 this is the 1x1 zero
    // matrix. Left-major Kronecker indexing reproduces the lexicographic
    // label order of Z_p^(s-1).
    for (std::int64_t i = 1; i < pp.s; ++i) d = kronecker(d, fourier(static_cast<int>(pp.p)));
}

Word phi(std::int64_t x, const GrayContext& ctx) {
    if (ctx.params.m != 1) throw Error("phi requires a prime-power phase (m = 1)");
    return psi(x, ctx);
}

Word psi(std::int64_t x, const GrayContext& ctx) {
    const PhaseParams& pp = ctx.params;
    auto [a, b] = decompose(x, pp);
    std::int64_t ps1 = pp.ps1();
    std::int64_t out_k = pp.m * pp.p;
    std::vector<std::int32_t> v(static_cast<std::size_t>(ps1));
    std::int64_t a1 = b / ps1; // b = a1*p^(s-1) + b1 within Z_{p^s}
    int b1 = static_cast<int>(b % ps1);
    for (std::int64_t i = 0; i < ps1; ++i)
        v[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(
            mod_pos(pp.m * (ctx.d.at(b1, static_cast<int>(i)) + a1) + a * pp.p, out_k));
    return Word(std::move(v), out_k);
}

Word map_word(GrayMap f, const Word& w, const GrayContext& ctx) {
    if (w.k != ctx.params.k) throw Error("word modulus does not match Gray context");
    std::int64_t ps1 = ctx.params.ps1();
    std::vector<std::int32_t> v;
    v.reserve(static_cast<std::size_t>(w.n()) * static_cast<std::size_t>(ps1));
    for (auto e : w.v) {
        Word block = f == GrayMap::phi ? phi(e, ctx) : psi(e, ctx);
        v.insert(v.end(), block.v.begin(), block.v.end());
    }
    return Word(std::move(v), ctx.params.m * ctx.params.p);
}

LogMatrix lift_psi(const LogMatrix& m, std::int64_t p) {
    if (m.k % p != 0 || !is_prime(p)) throw Error("p must be a prime dividing the phase");
    PhaseParams pp = PhaseParams::with_prime(m.k, p);
    if (pp.s == 1) return m;
    GrayContext ctx(pp);
    std::int64_t ps1 = pp.ps1();
    int out_n = static_cast<int>(mul_ck(m.n, ps1));
    LogMatrix out(out_n, pp.m * pp.p);
    for (std::int64_t r = 0; r < ps1; ++r) {
        for (int i = 0; i < m.n; ++i) {
            int row = static_cast<int>(r) * m.n + i;
            for (int j = 0; j < m.n; ++j) {
                std::int64_t e = mod_pos(m.at(i, j) + r * pp.m, m.k);
                Word block = psi(e, ctx);
                for (std::int64_t c = 0; c < ps1; ++c)
                    out.at(row, static_cast<int>(j * ps1 + c)) = block.v[static_cast<std::size_t>(c)];
            }
        }
    }
    return out;
}

LogMatrix reduce_squarefree(const LogMatrix& m) {
    LogMatrix cur = m;
    if (cur.k == 1) return cur;
    for (std::int64_t p : prime_factors(m.k)) cur = lift_psi(cur, p);
    return cur;
}

} // namespace bhc
