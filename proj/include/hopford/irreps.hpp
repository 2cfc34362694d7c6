#pragma once

#include "hopford/group.hpp"
#include "hopford/linalg.hpp"

namespace hopford {

/// Exact irreducible representation: one matrix per group element over a
/// cyclotomic field, plus the character (traces).
struct Irrep {
    const FiniteGroup* group = nullptr;
    unsigned dim = 0;
    FieldPtr field;
    std::vector<Mat> matrices;  // indexed by group element
    Vec character;

    const Mat& mat(uint32_t g) const { return matrices[g]; }
};

/// A one-dimensional character of a subgroup, as values indexed by parent
/// group element (only meaningful on the subgroup).
using SubgroupChar = std::vector<CycNumber>;

/// Monomial induction. transversal[i] are coset representatives t_i; the
/// induced matrices are rho(g)[i][j] = chi(t_i^{-1} g t_j) when that element
/// lies in the subgroup and 0 otherwise.
Irrep induce_irrep(const FiniteGroup& g, const std::vector<uint32_t>& subgroup,
                   const SubgroupChar& chi, const std::vector<uint32_t>& transversal,
                   FieldPtr field);

/// Complete list of irreducibles for groups built from the supported spec
/// grammar (cyclic, semidirect_qp, products). Verifies sum of squared
/// dimensions and exact character orthogonality before returning.
std::vector<Irrep> all_irreps(const FiniteGroup& g, FieldPtr field = nullptr);

/// Exact character inner product (1/|G|) sum_g chi1(g) chi2(g^{-1}).
CycNumber character_inner(const FiniteGroup& g, const Vec& chi1, const Vec& chi2);

/// Classical induced-character formula, as an independent cross-check of
/// induce_irrep traces.
Vec induced_character_formula(const FiniteGroup& g, const std::vector<uint32_t>& subgroup,
                              const SubgroupChar& chi, FieldPtr field);

}  // namespace hopford
