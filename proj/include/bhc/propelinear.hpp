#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhc/codes.hpp"
#include "bhc/cocycle.hpp"
#include "bhc/groupdesc.hpp"
#include "bhc/perm.hpp"

namespace bhc {

/// Per-codeword isometry (sigma_x, pi_x), aligned with Code::words. sigma is
/// the translation v -> x + v unless explicit per-coordinate symbol tables
/// are supplied (accepted only through the verification API).
struct PropelinearAssignment {
    std::vector<Perm> perms;
    // sigma[word][coordinate][symbol]; empty => translation form
    std::vector<std::vector<std::vector<std::int32_t>>> sigma;

    bool translation_form() const { return sigma.empty(); }
};

struct PropelinearStructure {
    Code code;
    PropelinearAssignment assign;
};

/// Reads m as the cocyclic matrix of psi(g,h) = m[g][h] under the group's
/// canonical element order (rows and columns indexed identically), checks the
/// cocycle identity, normalization and the Butson property, and equips C_H
/// with pi_x(j) = index(g * g_j) for the row of g, extended to translates by
/// pi_{x + alpha 1} = pi_x. The result is full propelinear.
PropelinearStructure propelinear_from_cocycle(const LogMatrix& m, const FiniteGroup& g);

/// x * y = sigma_x(pi_x(y)); with translation sigma this is x + pi_x(y).
Word star(const PropelinearStructure& ps, const Word& x, const Word& y);

struct VerifyResult {
    bool ok = true;
    std::string axiom;  // violated axiom name when !ok
    std::string detail; // witness description
};

/// Checks the propelinear axioms:
///   (i)  every (sigma_x, pi_x) maps C onto C and sends 0 to x,
///   (ii) z = (sigma_x,pi_x)(y) implies (sigma_z,pi_z) = (sigma_x,pi_x) o (sigma_y,pi_y),
/// and with full=true additionally that sigma is translation by x and pi_x is
/// fixed-point-free exactly off the constant words (identity on them).
/// Returns the first violated axiom with a witness.
VerifyResult verify_propelinear(const PropelinearStructure& ps, bool full);

/// Descriptors of the codeword group (C, *) and of the permutation group
/// Pi = closure of {pi_x} under composition.
std::pair<GroupDescriptor, GroupDescriptor> group_descriptor(const PropelinearStructure& ps,
                                                             std::size_t closure_bound = 1 << 20);

/// The permutation group itself (closure of the assigned permutations).
std::vector<Perm> permutation_group(const PropelinearStructure& ps, std::size_t closure_bound = 1 << 20);

/// Gray transfer for phase 4m with m odd: maps the code through Psi_2 and
/// carries the structure over, block b_i = (2i-1, 2i):
/// the image permutation moves block pi_x(i) into slot i and swaps inside the
/// slot when x_i is odd (rho_x pi_{Phi(x)} with rho applied after the block
/// move). Psi is then a group isomorphism (C,*) -> (C',*').
PropelinearStructure gray_transfer(const PropelinearStructure& ps);

} // namespace bhc
