#pragma once

#include "hopford/hopf.hpp"
#include "hopford/irreps.hpp"

namespace hopford {

/// Integral pair and Casimir element of a semisimple Hopf algebra:
/// Lambda with eps(Lambda) = dim H, lambda with lambda(Lambda) = 1, and
/// C = Lambda_(1) (x) S(Lambda_(2)). With swapped sides the pair is a right
/// integral Gamma and a left integral gamma in the dual, with Casimir
/// S(Gamma_(1)) (x) Gamma_(2).
struct FrobeniusData {
    HopfPtr parent;
    Vec integral;              // Lambda (or Gamma when swapped)
    Vec dual_integral;         // lambda (or gamma), as a covector
    SparseMulti casimir{0, 2};
    bool swapped = false;
};

/// Solve for the integrals by exact nullspace computation and assemble the
/// Casimir. Throws when the integral space is not one-dimensional or when
/// eps(Lambda) = 0 (not semisimple).
FrobeniusData compute_integrals(HopfPtr h, bool swapped_sides = false);

/// Wedderburn data of a (possibly twisted) group algebra: central
/// idempotents from characters, matrix units from irreducible matrices.
/// All relations are verified exactly at construction.
struct WedderburnData {
    HopfPtr parent;
    std::vector<unsigned> dims;
    std::vector<Vec> idempotents;          // e_i
    std::vector<std::vector<Vec>> units;   // units[i][k*n_i+l] = d^i_{kl}
    std::vector<Vec> characters;           // irreducible characters as covectors
};

WedderburnData wedderburn(HopfPtr h);

/// (g (x) h) C = C (h (x) g) on all basis pairs; the involutory criterion.
bool check_casimir_commutation(const HopfAlgebraData& h, const SparseMulti& casimir,
                               std::string* witness = nullptr);

/// Coordinates of an arity-2 tensor over the matrix-unit tensor basis,
/// via the inverse basis-change matrix applied to both legs. Entry (r, c)
/// is the coefficient of unit_r (x) unit_c in the flattened block order.
Mat tensor_in_unit_basis(const HopfAlgebraData& h, const SparseMulti& t, const WedderburnData& wd);

/// Expansion of the Casimir over the matrix-unit tensor basis. Valid when
/// the coefficient matrix is exactly block-diagonal with scalar beta_i =
/// eps(Lambda)/n_i on the transposed-unit pairs. Optionally also checks
/// (f_ii C)^2 = beta_i^2 (e_i (x) e_i) by honest tensor multiplication.
struct CasimirDecomposition {
    std::vector<Rational> betas;
    bool valid = false;
    std::string detail;
};

CasimirDecomposition casimir_decomposition(const HopfAlgebraData& h, const FrobeniusData& fd,
                                           const WedderburnData& wd, bool check_squares = true);

/// E = Lambda_(1) psi(S(Lambda_(2))) for an irreducible character psi;
/// central, acting on the psi-block by dim H / dim V.
struct CentralElementResult {
    Vec element;
    bool central = false;
    bool block_action_ok = false;
    Rational alpha;                 // dim H / dim V
    bool alpha_algebraic_integer = false;
    unsigned block = 0;
};

CentralElementResult central_element_action(const HopfAlgebraData& h, const FrobeniusData& fd,
                                            const WedderburnData& wd, unsigned char_index);

/// Minimal polynomial by exact linear dependence of powers; monic, low
/// degree first. integer_coeffs is true when every coefficient is a
/// rational integer.
struct MinPolyResult {
    std::vector<CycNumber> coeffs;
    bool integer_coeffs = false;
    unsigned degree() const { return coeffs.empty() ? 0 : unsigned(coeffs.size() - 1); }
};

MinPolyResult minpoly_element(const HopfAlgebraData& h, const Vec& x);
MinPolyResult minpoly_tensor(const HopfAlgebraData& h, const SparseMulti& t);

struct KaplanskyReport {
    std::vector<unsigned> dims;
    unsigned dim = 0;
    std::vector<unsigned> remainders;
    bool verdict = false;
};

KaplanskyReport kaplansky_check(const std::vector<unsigned>& dims, unsigned dim);
KaplanskyReport kaplansky_check(const WedderburnData& wd);

/// Direct sum of matrix algebras over the given block dimensions, as an
/// algebra-only object with its canonical Wedderburn data and the Casimir
/// assembled from the block decomposition with eps(Lambda) = dim. Used as
/// a negative control for non-divisible block sizes.
struct SyntheticSemisimple {
    HopfPtr algebra;
    WedderburnData wedderburn;
    SparseMulti casimir{0, 2};
};

SyntheticSemisimple matrix_algebra_direct_sum(const std::vector<unsigned>& dims, FieldPtr field);

}  // namespace hopford
