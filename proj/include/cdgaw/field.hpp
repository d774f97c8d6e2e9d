#ifndef CDGAW_FIELD_HPP
#define CDGAW_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdgaw/errors.hpp"

namespace cdgaw {

using Rational = mpq_class;

/* Number field Q[x]/(m(x)) given by a monic m with rational coefficients,
 * ascending degree. Degree 1 means plain rationals. The optional conjugation
 * image is the polynomial image of the generator z under the designated
 * "complex conjugation" automorphism; identity if absent. */
struct FieldSpec {
    std::vector<Rational> minimal_polynomial;
    std::optional<std::vector<Rational>> conjugation_image;
};

class Scalar;

class Field {
  public:
    /* Validates: monic, degree >= 1, no rational roots for degree >= 2,
     * conjugation an involution fixing Q. Irreducibility beyond the
     * rational-root test is the caller's responsibility. */
    static Field make(const FieldSpec& spec);

    /* Q(zeta_12) = Q[x]/(x^4 - x^2 + 1), conjugation z -> z - z^3.
     * Contains i = z^3 and sqrt(3) = 2z - z^3. */
    static Field default_field();

    /* Plain rationals, Q[x]/(x). */
    static Field rationals();

    int degree() const;
    const FieldSpec& spec() const;
    bool same_as(const Field& other) const { return data_ == other.data_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long n) const;
    Scalar rational(const Rational& q) const;
    Scalar generator() const;  // z (for degree 1, this is zero's residue: z = 0)
    Scalar from_coeffs(std::vector<Rational> c) const;  // reduced mod m if needed

    /* i and sqrt(3) in the default field; error if (z^3)^2 != -1 etc. */
    Scalar imaginary_unit() const;
    Scalar sqrt3() const;

    /* Scalar literal grammar: poly = sum of `rational ['z' ['^' digits]]`
     * terms, rationals optionally parenthesized, e.g. "2z - z^3", "1/2",
     * "(3/2)z^2". */
    Scalar parse(const std::string& text) const;

  private:
    friend class Scalar;
    struct Data;
    std::shared_ptr<const Data> data_;
};

/* Immutable residue polynomial in z, canonical (degree < deg m). */
class Scalar {
  public:
    Scalar() = default;  // invalid until assigned; only for containers

    const Field& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;  // no z-terms
    Rational rational_part() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;              // DivisionByZero on zero
    Scalar conj() const;             // configured automorphism
    Scalar pow(long n) const;        // n may be negative

    /* Canonical ascending-degree form, e.g. "2z - z^3", "-1/2", "0". */
    std::string str() const;

  private:
    friend class Field;
    Scalar(Field f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {}
    Field field_;
    std::vector<Rational> c_;
};

inline Scalar operator*(long n, const Scalar& s) { return s.field().integer(n) * s; }

}  // namespace cdgaw

#endif
