#pragma once

#include "hopford/json_io.hpp"
#include "hopford/lattice.hpp"

namespace hopford {

/// Irreducible characters of the underlying algebra, as covectors. Supported
/// for group algebras, their twists (same algebra) and duals of group
/// algebras (evaluations at group elements).
std::vector<Vec> algebra_characters(HopfPtr h);

/// Characters of the dual Hopf algebra, as elements of H. For a group
/// algebra these are the group elements; for the dual of a group algebra
/// the irreducible group characters seen as functions.
std::vector<Vec> dual_algebra_characters(HopfPtr h);

/// Saturation of the span of dual characters under products, the antipode
/// and single-character contractions (psi (x) id)Delta, (id (x) psi)Delta
/// and (psi (x) id (x) psi')Delta^2. Stabilization is reported, never
/// silently truncated.
struct CharSupportResult {
    Lattice lattice;
    bool stabilized = false;
    unsigned rounds = 0;
};

CharSupportResult character_support(HopfPtr h, const RingSpec& ring, unsigned max_rounds = 8);

/// lower = character support of H; upper = dual of the character support of
/// H*. Any Hopf order over the ring sits between them.
struct SandwichResult {
    CharSupportResult lower;
    CharSupportResult dual_support;
    Lattice upper;
    bool inclusion = false;
    bool both_full_rank = false;
    Rational index;  // [upper : lower] when both have full rank
};

SandwichResult order_sandwich(HopfPtr h, const RingSpec& ring);

/// The audited chain that produces the coset indicator idempotents
/// t_i = sum_j th_{s^i a^j} in the dual of K[Z_q x| Z_p] from character
/// data alone: the induced character psi, the product phi of its translates,
/// the conjugate nu, mu = phi nu = q^2 th_1, the Bezout step to q th_1, and
/// the products of translates of phi_hat = psi - q th_1.
struct CosetChain {
    HopfPtr kn;    // the group algebra K[Z_q x| Z_p]
    HopfPtr dual;  // its dual
    Vec psi, phi, nu, mu, q_theta1, phi_hat;
    std::vector<Vec> t;
    long bezout_u = 0, bezout_v = 0;  // u p + v q = 1
    std::vector<CheckResult> checks;

    bool all_verified() const;
};

CosetChain coset_dual_idempotents(unsigned q, unsigned p, unsigned r, FieldPtr field);

/// One audited step of the obstruction pipeline.
struct CertStep {
    std::string name;
    std::string claim;
    bool verified = false;
    Json payload;
};

/// The full audited chain showing that a Hopf order of the twisted algebra
/// over a ring R forces 1/p into R: the Hopf subalgebra A generated by
/// sigma and b, its idempotents and characters with their product table,
/// the w idempotents, the coset chain on K[Z_q x| Z_p], the projection with
/// trivially pushed twist, and the final pairing t_0(Phi(w_0)) = 1/p.
struct ObstructionCertificate {
    unsigned p = 0, q = 0, r = 0, zeta_exp = 1;
    Rational final_value;
    bool final_is_algebraic_integer = true;
    bool w0_in_integral_group_span = true;
    std::vector<CertStep> steps;

    bool all_verified() const;
};

ObstructionCertificate obstruction_certificate(unsigned p, unsigned q, unsigned r,
                                               unsigned zeta_exp = 1);

Json certificate_to_json(const ObstructionCertificate& c);
/// Reload and re-verify: the pipeline is re-run from the stored parameters,
/// every claimed identity is re-checked and every payload compared byte for
/// byte. Throws on any mismatch.
ObstructionCertificate certificate_from_json(const Json& j);

/// Integral matrix-block order: Y = Z-span of the matrix units. Verifies
/// multiplicative closure and 1 in Y, and that the Casimir lies in Y (x) Y
/// with the expected integer coefficients. Refuses when a block dimension
/// does not divide dim H.
struct WeakOrderResult {
    bool ok = false;
    std::string refusal;
    KaplanskyReport kaplansky;
    std::vector<Rational> coefficient_values;  // distinct Casimir coefficients
    bool closed_under_multiplication = false;
    bool unit_member = false;
    bool casimir_integral = false;
};

WeakOrderResult weak_order(HopfPtr h, const FrobeniusData& fd, const WedderburnData& wd);

}  // namespace hopford
