#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhc/group.hpp"
#include "bhc/logmatrix.hpp"

namespace bhc {

/// Everything here works in log (additive) form: a cocycle psi: G x G -> Z_k
/// is an n x n table with psi(g,h) at position (g,h) under the group's
/// canonical element order, satisfying
///   psi(g,h) + psi(gh,k) = psi(g,hk) + psi(h,k).
/// Normalized means the first row and column vanish.

struct CocycleWitness {
    int g, h, k; // 0-based element indices violating the identity
};

bool is_cocycle(const LogMatrix& psi, const FiniteGroup& g);
std::optional<CocycleWitness> cocycle_violation(const LogMatrix& psi, const FiniteGroup& g);
bool is_normalized(const LogMatrix& psi);

/// Coboundary of a normalized pointwise map phi (phi(identity) = 0):
/// dphi(g,h) = -phi(g) - phi(h) + phi(gh).
LogMatrix coboundary(const Word& phi_map, const FiniteGroup& g);

/// a_{gk,hk} = a_{g,h} for all g,h,k.
bool is_group_invariant(const LogMatrix& a, const FiniteGroup& g);
std::optional<CocycleWitness> group_invariance_violation(const LogMatrix& a, const FiniteGroup& g);

/// psi(g,h) = -a_{g,1} + a_{g,h^-1} - a_{1,h^-1} for a G-invariant A, then
/// shifted by the constant a_{1,1} so the result is normalized (adding a
/// constant preserves the cocycle identity).
LogMatrix cocycle_from_invariant(const LogMatrix& a, const FiniteGroup& g);

/// Orthogonal: every non-identity row sums to zero as a sum of k-th roots of
/// unity (decided by the cyclotomic oracle). Input must be a cocycle.
bool is_orthogonal_cocycle(const LogMatrix& psi, const FiniteGroup& g);

/// Central extension E_psi on Z_k x G with (u,g)(v,h) = (u+v+psi(g,h), gh).
/// Element (u,g) has index u*|G| + index(g); labels "(u,g-label)".
FiniteGroup extension_group(const LogMatrix& psi, const FiniteGroup& g, std::int64_t k);

/// Reconstructs psi_T(g,h) = sigma(g) sigma(h) sigma(gh)^-1 from the canonical
/// transversal T = {(0,g)} of the extension; equals psi entrywise.
LogMatrix transversal_cocycle(const FiniteGroup& ext, const FiniteGroup& g, std::int64_t k);

/// Pairwise row (and column) balance: the difference of every pair of
/// distinct rows (columns) hits each symbol equally often.
bool is_balanced(const LogMatrix& m);

} // namespace bhc
