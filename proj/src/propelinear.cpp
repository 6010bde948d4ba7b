#include "bhc/propelinear.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bhc/butson.hpp"
#include "bhc/checked.hpp"

namespace bhc {

namespace {

std::string word_text(const Word& w) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < w.n(); ++i) os << (i ? "," : "") << w.v[static_cast<std::size_t>(i)];
    os << "]";
    return os.str();
}

Word apply_isometry(const PropelinearAssignment& a, std::size_t xi, const Word& x, const Word& y) {
    Word moved = a.perms[xi].act(y);
    if (a.translation_form()) return add(x, moved);
    const auto& sig = a.sigma[xi];
    Word out = moved;
    for (int i = 0; i < out.n(); ++i)
        out.v[static_cast<std::size_t>(i)] =
            sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(moved.v[static_cast<std::size_t>(i)])];
    return out;
}

} // namespace

PropelinearStructure propelinear_from_cocycle(const LogMatrix& m, const FiniteGroup& g) {
    if (m.n != g.order()) throw Error("matrix order does not match group order");
    if (!is_normalized(m)) throw Error("matrix is not normalized as a cocyclic matrix (first row/column nonzero)");
    if (auto w = cocycle_violation(m, g))
        throw Error("matrix is not cocyclic over the group: identity fails at (" + g.label(w->g) + "," +
                    g.label(w->h) + "," + g.label(w->k) + ")");
    if (auto bad = butson_violation(m))
        throw Error("matrix is not Butson: rows " + std::to_string(bad->first) + "," + std::to_string(bad->second) +
                    " are not orthogonal");

    int n = g.order();
    std::vector<Perm> row_perm;
    row_perm.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::int32_t> fwd(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) fwd[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(g.mul(i, j));
        row_perm.emplace_back(std::move(fwd));
    }

    PropelinearStructure ps;
    ps.code = Code(n, m.k, CodeTag::c_code);
    for (std::int64_t alpha = 0; alpha < m.k; ++alpha)
        for (int i = 0; i < n; ++i)
            if (ps.code.insert(translate(m.row_word(i), alpha))) ps.assign.perms.push_back(row_perm[static_cast<std::size_t>(i)]);
    return ps;
}

Word star(const PropelinearStructure& ps, const Word& x, const Word& y) {
    int xi = ps.code.index_of(x);
    if (xi < 0) throw Error("left operand is not a codeword");
    if (ps.code.index_of(y) < 0) throw Error("right operand is not a codeword");
    return apply_isometry(ps.assign, static_cast<std::size_t>(xi), x, y);
}

VerifyResult verify_propelinear(const PropelinearStructure& ps, bool full) {
    const Code& c = ps.code;
    const PropelinearAssignment& a = ps.assign;
    auto fail = [](std::string axiom, std::string detail) {
        return VerifyResult{false, std::move(axiom), std::move(detail)};
    };

    if (a.perms.size() != c.size()) return fail("totality", "assignment does not cover the code");
    if (!a.translation_form() && a.sigma.size() != c.size()) return fail("totality", "sigma tables do not cover the code");
    for (const auto& p : a.perms)
        if (p.size() != c.n) return fail("totality", "permutation degree differs from code length");

    Word zero = zero_word(c.n, c.k);
    int zi = c.index_of(zero);
    if (zi < 0) return fail("identity", "the zero word is not a codeword");
    if (!a.perms[static_cast<std::size_t>(zi)].is_identity())
        return fail("identity", "pi for the zero word is not the identity");
    if (!a.translation_form()) {
        const auto& sig = a.sigma[static_cast<std::size_t>(zi)];
        for (int i = 0; i < c.n; ++i)
            for (std::int64_t v = 0; v < c.k; ++v)
                if (sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] != v)
                    return fail("identity", "sigma for the zero word is not the identity");
    }

    // (i) closure and (sigma_x, pi_x)(0) = x
    for (std::size_t xi = 0; xi < c.size(); ++xi) {
        const Word& x = c.words[xi];
        if (apply_isometry(a, xi, x, zero) != x)
            return fail("transitivity", "(sigma,pi) of " + word_text(x) + " does not send 0 to it");
        for (std::size_t yi = 0; yi < c.size(); ++yi) {
            Word z = apply_isometry(a, xi, x, c.words[yi]);
            if (!c.contains(z))
                return fail("closure", word_text(x) + " * " + word_text(c.words[yi]) + " = " + word_text(z) +
                                           " is not a codeword");
        }
    }

    // (ii) compatibility: the isometry of z = x * y is the composite.
    for (std::size_t xi = 0; xi < c.size(); ++xi) {
        const Word& x = c.words[xi];
        for (std::size_t yi = 0; yi < c.size(); ++yi) {
            Word z = apply_isometry(a, xi, x, c.words[yi]);
            int zidx = c.index_of(z);
            Perm expected = Perm::compose(a.perms[xi], a.perms[yi]);
            if (!(a.perms[static_cast<std::size_t>(zidx)] == expected))
                return fail("compatibility", "pi of " + word_text(x) + " * " + word_text(c.words[yi]) +
                                                 " is not the composite permutation");
            if (!a.translation_form()) {
                for (int i = 0; i < c.n; ++i) {
                    int src = a.perms[xi].fwd(i);
                    for (std::int64_t v = 0; v < c.k; ++v) {
                        std::int32_t lhs = a.sigma[static_cast<std::size_t>(zidx)][static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
                        std::int32_t rhs = a.sigma[xi][static_cast<std::size_t>(i)][static_cast<std::size_t>(
                            a.sigma[yi][static_cast<std::size_t>(src)][static_cast<std::size_t>(v)])];
                        if (lhs != rhs)
                            return fail("compatibility", "sigma of " + word_text(x) + " * " + word_text(c.words[yi]) +
                                                             " is not the composite action");
                    }
                }
            }
        }
    }

    if (full) {
        for (std::size_t xi = 0; xi < c.size(); ++xi) {
            const Word& x = c.words[xi];
            if (!a.translation_form()) {
                const auto& sig = a.sigma[xi];
                for (int i = 0; i < c.n; ++i)
                    for (std::int64_t v = 0; v < c.k; ++v)
                        if (sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] !=
                            mod_pos(x.v[static_cast<std::size_t>(i)] + v, c.k))
                            return fail("full:translation", "sigma of " + word_text(x) + " is not translation by it");
            }
            if (x.is_constant()) {
                if (!a.perms[xi].is_identity())
                    return fail("full:identity-on-constants", "pi of constant word " + word_text(x) + " is not the identity");
            } else if (a.perms[xi].has_fixed_point()) {
                return fail("full:fixed-point-free", "pi of " + word_text(x) + " fixes a coordinate");
            }
        }
    }
    return {};
}

std::vector<Perm> permutation_group(const PropelinearStructure& ps, std::size_t closure_bound) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> out;
    std::vector<Perm> gens;
    for (const auto& p : ps.assign.perms)
        if (seen.insert(p).second) {
            out.push_back(p);
            gens.push_back(p);
        }
    std::size_t head = 0;
    while (head < out.size()) {
        Perm cur = out[head++];
        for (const auto& g : gens) {
            Perm c = Perm::compose(cur, g);
            if (seen.insert(c).second) {
                out.push_back(c);
                if (out.size() > closure_bound) throw Error("permutation group closure exceeds configured bound");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<GroupDescriptor, GroupDescriptor> group_descriptor(const PropelinearStructure& ps, std::size_t closure_bound) {
    const Code& c = ps.code;
    // Codeword group under *.
    std::vector<std::vector<int>> table(c.size(), std::vector<int>(c.size()));
    for (std::size_t xi = 0; xi < c.size(); ++xi)
        for (std::size_t yi = 0; yi < c.size(); ++yi) {
            Word z = apply_isometry(ps.assign, xi, c.words[xi], c.words[yi]);
            int zi = c.index_of(z);
            if (zi < 0) throw Error("code is not closed under the star operation");
            table[xi][yi] = zi;
        }
    GroupDescriptor code_group = describe_group(static_cast<int>(c.size()),
                                                [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; });

    std::vector<Perm> pi = permutation_group(ps, closure_bound);
    std::unordered_map<Perm, int, PermHash> pidx;
    for (std::size_t i = 0; i < pi.size(); ++i) pidx.emplace(pi[i], static_cast<int>(i));
    GroupDescriptor perm_group = describe_group(static_cast<int>(pi.size()), [&](int a, int b) {
        return pidx.at(Perm::compose(pi[static_cast<std::size_t>(a)], pi[static_cast<std::size_t>(b)]));
    });
    return {std::move(code_group), std::move(perm_group)};
}

PropelinearStructure gray_transfer(const PropelinearStructure& ps) {
    const Code& c = ps.code;
    if (!ps.assign.translation_form()) throw Error("gray transfer requires the translation-form structure");
    if (c.k % 4 != 0 || (c.k / 4) % 2 == 0)
        throw Error("gray transfer needs phase 4m with m odd; phase " + std::to_string(c.k) + " does not qualify");
    GrayContext ctx(PhaseParams::with_prime(c.k, 2)); // p = 2, s = 2, m = k/4

    PropelinearStructure out;
    out.code = Code(2 * c.n, c.k / 2, CodeTag::image);
    out.assign.perms.reserve(c.size());
    for (std::size_t xi = 0; xi < c.size(); ++xi) {
        const Word& x = c.words[xi];
        Word img = map_word(GrayMap::psi, x, ctx);
        if (!out.code.insert(img)) throw Error("gray transfer image collision; Psi not injective on this code");
        const Perm& p = ps.assign.perms[xi];
        std::vector<std::int32_t> f2(static_cast<std::size_t>(2 * c.n));
        for (int i = 0; i < c.n; ++i) {
            std::int32_t j = p.fwd(i);
            bool swap = x.v[static_cast<std::size_t>(i)] % 2 != 0;
            f2[static_cast<std::size_t>(2 * i)] = static_cast<std::int32_t>(2 * j + (swap ? 1 : 0));
            f2[static_cast<std::size_t>(2 * i + 1)] = static_cast<std::int32_t>(2 * j + (swap ? 0 : 1));
        }
        out.assign.perms.emplace_back(std::move(f2));
    }
    return out;
}

} // namespace bhc
