#pragma once

#include <cstdint>

#include "bhc/butson.hpp"
#include "bhc/logmatrix.hpp"
#include "bhc/ring.hpp"

namespace bhc {

/// Carrier for the generalized Gray maps at phase k = m*p^s: holds the
/// inner-product matrix D over Z_p of order p^(s-1), whose row labeled b is
/// [b.y]_y with b read as the base-p digits of the label, most significant
/// digit first, and columns in the same increasing lexicographic order.
struct GrayContext {
    PhaseParams params;
    LogMatrix d;

    explicit GrayContext(PhaseParams pp);
};

/// Phi_p(x) = [L(D)]_b + a*1 for x = a*p^(s-1) + b; requires m = 1.
/// Injective map Z_{p^s} -> Z_p^{p^(s-1)}.
Word phi(std::int64_t x, const GrayContext& ctx);

/// Psi_p(a*p^s + b*m) = m*Phi_p(b) + a*p*1; injective Z_{m p^s} -> Z_{mp}^{p^(s-1)}.
/// With m = 1 this is phi; with s = 1 it degenerates to the identity relabeling.
Word psi(std::int64_t x, const GrayContext& ctx);

enum class GrayMap { phi, psi };

/// Entrywise application, blocks concatenated: length n*p^(s-1).
Word map_word(GrayMap f, const Word& w, const GrayContext& ctx);

/// The lifted matrix: Psi_p applied entrywise to the stack
/// [L(H); L(H)+mJ; ...; L(H)+(p^(s-1)-1)mJ]. Output order n*p^(s-1),
/// phase p*m; Butson whenever the input is. s = 1 returns m unchanged.
LogMatrix lift_psi(const LogMatrix& m, std::int64_t p);

/// Iterates lift_psi over the primes dividing the phase (ascending) until the
/// phase is squarefree: order n*k/l, phase l = rad(k).
LogMatrix reduce_squarefree(const LogMatrix& m);

} // namespace bhc
