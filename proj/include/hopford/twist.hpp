#pragma once

#include <array>

#include "hopford/hopf.hpp"

namespace hopford {

/// An invertible J in H (x) H together with its inverse and the element
/// U = J^(1) S(J^(2)) that conjugates the antipode.
struct TwistData {
    HopfPtr parent;
    SparseMulti J{0, 2}, Jinv{0, 2};
    Vec U, Uinv;
};

/// Two-cocycle on the character group of an abelian subgroup M = <g1> x <g2>
/// of order p^2, given as omega(psi_x, psi_y) = zeta^{x^T B y} for a fixed
/// primitive p-th root zeta (chosen by exponent). The standard pairing
/// B = [[0,0],[1,0]] gives omega(psi_ij, psi_kl) = zeta^{jk}.
struct CocycleSpec {
    uint32_t gen1 = 0, gen2 = 0;
    unsigned p = 0;
    std::array<std::array<long, 2>, 2> bilinear{{{0, 0}, {1, 0}}};
    unsigned zeta_exp = 1;

    static CocycleSpec standard(uint32_t g1, uint32_t g2, unsigned p, unsigned zeta_exp = 1);
    static CocycleSpec trivial(uint32_t g1, uint32_t g2, unsigned p);
};

/// Complete orthogonal idempotent family e_ij of K[<g1> x <g2>] inside a
/// group algebra: g1 e_ij = zeta^i e_ij and g2 e_ij = zeta^j e_ij. Verified
/// exhaustively (orthogonality, completeness, eigenvalue relations).
std::vector<std::vector<Vec>> idempotents_of_abelian(const HopfAlgebraData& h, uint32_t gen1,
                                                     uint32_t gen2, unsigned p,
                                                     const CycNumber& zeta);

/// Build the twist from the cocycle: J = sum omega(x, y) e_x (x) e_y. Also
/// forms the closed-form expression through the group elements directly and
/// asserts it agrees with the idempotent sum; the inverse comes from the
/// inverted cocycle. U and its inverse are cross-checked two ways.
TwistData twist_from_cocycle(HopfPtr h, const CocycleSpec& spec);

/// Exact checks: invertibility, counital laws, the 2-pseudo-cocycle identity.
AxiomReport verify_twist(const HopfAlgebraData& h, const SparseMulti& J, const SparseMulti& Jinv);

/// The twisted Hopf algebra: same algebra, Delta_J = J Delta J^{-1},
/// S_J = U S U^{-1}. Runs verify_twist first and refuses a failing twist.
HopfPtr apply_twist(HopfPtr h, const TwistData& t);

/// Inverse of an invertible algebra element via its minimal polynomial
/// (Krylov span of powers); throws std::domain_error when not invertible.
Vec invert_element(const HopfAlgebraData& h, const Vec& u);

/// The twisted group algebra B_{p,q}: K[(Z_q x Z_q) x| (Z_p x Z_p)] twisted
/// by the cocycle on M = <sigma, tau>. Generators: sigma, tau of order p;
/// a, b of order q; sigma a sigma^{-1} = a^r, tau b tau^{-1} = b^r, all
/// other pairs commute.
struct BpqResult {
    unsigned p = 0, q = 0, r = 0, zeta_exp = 1;
    HopfPtr plain;    // the group algebra KG
    HopfPtr twisted;  // the twisted Hopf algebra
    TwistData twist;
    uint32_t sigma = 0, tau = 0, a = 0, b = 0;  // generator indices in the basis

    /// Basis index of sigma^i tau^j a^k b^l.
    uint32_t index(unsigned i, unsigned j, unsigned k, unsigned l) const;
    const FiniteGroup& group() const { return *plain->group; }
};

BpqResult build_bpq(unsigned p, unsigned q, unsigned r, unsigned zeta_exp = 1);

/// Push a (possibly twisted) group algebra along a group surjection pi.
/// The target carries the pushed twist (pi (x) pi)(J); all structure-map
/// compatibilities of the induced linear map are verified exactly.
struct QuotientResult {
    HopfPtr target;
    std::vector<uint32_t> image;  // basis element i of the source maps to basis image[i]
    SparseMulti pushed_J{0, 2};
    bool pushed_trivial = false;  // pushed twist equals 1 (x) 1
    bool algebra_map = false, coalgebra_map = false, antipode_map = false, counit_ok = false;

    Vec apply(const HopfAlgebraData& src, const Vec& x) const;
    SparseMulti apply_tensor(const SparseMulti& t) const;
};

QuotientResult quotient_by_group_map(HopfPtr src, const SparseMulti* J, const SparseMulti* Jinv,
                                     const FiniteGroup& target_group,
                                     const std::vector<uint32_t>& pi);

}  // namespace hopford
