#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hopford/rational.hpp"

namespace hopford {

class CycNumber;

/// The cyclotomic field Q(zeta_n), elements written in the power basis
/// 1, zeta, ..., zeta^{phi(n)-1} and reduced modulo the n-th cyclotomic
/// polynomial. Instances are interned per conductor and never destroyed,
/// so CycNumber can hold a plain pointer.
class CycField {
public:
    static std::shared_ptr<const CycField> get(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }
    /// Coefficients of Phi_n, low degree first, monic of degree phi(n).
    const std::vector<Integer>& cyclotomic_poly() const { return phi_; }

    CycNumber zero() const;
    CycNumber one() const;
    CycNumber from_rational(const Rational& r) const;
    /// zeta_n^k with k taken mod n; canonical coordinates.
    CycNumber zeta_pow(long k) const;
    /// The canonical primitive root of the given order, zeta_n^{n/order}.
    /// Throws if order does not divide n.
    CycNumber root_of_unity(unsigned order) const;

    bool operator==(const CycField& o) const { return conductor_ == o.conductor_; }

    // Reduction rows: x^{degree+k} mod Phi_n, k = 0 .. degree-2.
    const std::vector<Integer>& reduction_row(unsigned k) const { return reduction_[k]; }

private:
    explicit CycField(unsigned conductor);

    unsigned conductor_;
    unsigned degree_;
    std::vector<Integer> phi_;
    std::vector<std::vector<Integer>> reduction_;
    std::vector<std::vector<Rational>> zeta_coords_;  // canonical coords of zeta^k, k < n
};

using FieldPtr = std::shared_ptr<const CycField>;

/// Element of Q(zeta_n): phi(n) exact rational coordinates in the power
/// basis, always reduced mod Phi_n, so equality is coordinate-wise.
class CycNumber {
public:
    CycNumber() : field_(nullptr) {}
    CycNumber(const CycField* field, std::vector<Rational> coords);

    const CycField* field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when only the constant coordinate may be nonzero.
    bool is_rational() const;
    /// The constant coordinate (the value, when is_rational()).
    const Rational& rational_part() const { return coords_[0]; }

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator/(const CycNumber& o) const;
    CycNumber inverse() const;
    CycNumber pow(long e) const;

    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);

    /// this += c * x. The workhorse of all sparse accumulation loops.
    void add_scaled(const CycNumber& x, const Rational& c);
    void scale(const Rational& c);

    std::string to_string() const;  // human-readable, for witnesses

private:
    const CycField* field_;
    std::vector<Rational> coords_;

    friend class CycField;
    friend bool is_algebraic_integer(const CycNumber&);
    friend CycNumber embed(const CycNumber&, const FieldPtr&);
};

/// True iff every power-basis coordinate is a rational integer. Valid as an
/// integrality test because Z[zeta_n] is the full ring of integers of Q(zeta_n).
bool is_algebraic_integer(const CycNumber& a);

/// Image of a under zeta_n -> zeta_m^{m/n}; requires n | m.
CycNumber embed(const CycNumber& a, const FieldPtr& target);

/// Preimage under embed when it exists: the element of the smaller field
/// mapping to a, or nothing when a does not lie in the subfield.
std::optional<CycNumber> coerce_down(const CycNumber& a, const FieldPtr& target);

/// Serialization: list of "num/den" strings ordered by power-basis exponent.
std::vector<std::string> serialize_coords(const CycNumber& a);
CycNumber parse_coords(const FieldPtr& field, const std::vector<std::string>& strs);

}  // namespace hopford
