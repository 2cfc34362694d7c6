#pragma once

#include <optional>
#include <vector>

#include "hopford/rational.hpp"

namespace hopford {

/// Dense integer matrix, row-major, arbitrary precision entries.
struct IntMat {
    unsigned rows = 0, cols = 0;
    std::vector<Integer> a;

    IntMat() = default;
    IntMat(unsigned r, unsigned c) : rows(r), cols(c), a(size_t(r) * c, Integer(0)) {}
    Integer& at(unsigned i, unsigned j) { return a[size_t(i) * cols + j]; }
    const Integer& at(unsigned i, unsigned j) const { return a[size_t(i) * cols + j]; }
    bool operator==(const IntMat& o) const = default;
};

/// Row Hermite normal form: pivots positive, entries above a pivot reduced
/// into [0, pivot), zero rows dropped. The row span over Z is unchanged.
IntMat hnf_rows(IntMat m);

/// Left kernel: basis rows of {x in Z^rows : x m = 0}, saturated.
IntMat left_kernel(const IntMat& m);

/// Saturation of the row span inside Z^cols: (Q-span of rows) intersect Z^cols.
IntMat saturate_rows(const IntMat& m);

/// Largest sublattice of the saturation whose quotient by the row span is
/// m-primary: {x : m_inv^k x in rowspan for some k}. Returns its HNF basis.
IntMat m_saturate_rows(const IntMat& m, const Integer& m_inv);

/// Intersection of two row lattices.
IntMat intersect_rows(const IntMat& a, const IntMat& b);

/// Solve x = c H over Z for H in row HNF; empty when x is outside.
std::optional<std::vector<Integer>> solve_in_hnf(const IntMat& h, const std::vector<Integer>& x);

/// Determinant by fraction-free elimination.
Integer determinant(IntMat m);

/// Greatest common divisor of all entries (0 for the zero matrix).
Integer content(const IntMat& m);

}  // namespace hopford
