#pragma once

#include <functional>
#include <string>

#include "hopford/hopf.hpp"
#include "hopford/intlattice.hpp"

namespace hopford {

/// The coefficient ring Z[zeta_conductor][1/inverted]. conductor = 1 and
/// inverted = 1 is the rational integers.
struct RingSpec {
    unsigned conductor = 1;
    Integer inverted = 1;

    std::string to_string() const;
    unsigned degree() const;  // phi(conductor)
};

/// Parse "Z", "Z[1/6]", "Z[zeta_12]", "Z[zeta_12][1/3]".
RingSpec parse_ring(const std::string& s);

/// Finitely generated R-module inside K^dim for K a cyclotomic field,
/// canonicalized by restriction of scalars: the module equals
/// (1/denom) * Z[1/m]-span of the basis rows inside Q^{dim * deg(K)},
/// with denom positive, coprime to inverted primes (m-free), minimal, and
/// the basis an m-saturated Hermite normal form. Two equal modules have
/// identical (denom, basis) pairs.
struct Lattice {
    FieldPtr ambient_field;
    unsigned ambient_dim = 0;
    RingSpec ring;
    Integer denom = 1;
    IntMat basis;

    unsigned rank() const { return basis.rows; }
    bool full_rank() const;
    bool operator==(const Lattice& o) const {
        return ambient_dim == o.ambient_dim && denom == o.denom && basis == o.basis;
    }
};

/// Restriction of scalars of one vector: dim * deg(field) rationals.
std::vector<Rational> restrict_scalars(const FieldPtr& field, const Vec& v);
Vec unrestrict_scalars(const FieldPtr& field, unsigned dim, const std::vector<Rational>& r);

Lattice lattice_span(FieldPtr field, unsigned dim, const RingSpec& ring,
                     const std::vector<Vec>& generators);

bool lattice_member(const Lattice& l, const Vec& x);

/// Dual module {f : f(L) subset R} in the dual space; requires full rank and
/// Frac(R) equal to the ambient field (ring conductor = ambient conductor).
Lattice dual_lattice(const Lattice& l);

/// Basis rows of the lattice as ambient vectors (denominator included).
std::vector<Vec> lattice_vectors(const Lattice& l);

Lattice lattice_image(const Lattice& l, const std::function<Vec(const Vec&)>& map, FieldPtr tfield,
                      unsigned tdim);

/// Intersection with a K-subspace spanned by the given vectors.
Lattice intersect_with_subspace(const Lattice& l, const std::vector<Vec>& subspace);

/// Index [super : sub] for two full-rank lattices over the same ring; the
/// quotient size as a rational (an integer when sub is contained in super
/// and the ring has no inverted primes).
Rational lattice_index(const Lattice& sub, const Lattice& super);

bool lattice_contains(const Lattice& outer, const Lattice& inner);

}  // namespace hopford
