#pragma once

// Exact arithmetic in Q(beta) for a Pisot number beta given by its minimal
// polynomial M(x) = x^d - a_{d-1} x^{d-1} - ... - a_1 x - a_0.
//
// Elements are stored as coordinate vectors over the power basis
// 1, beta, ..., beta^{d-1} with GMP rationals. The coordinate vector is
// unique because M is irreducible, so equality and the zero test are purely
// syntactic. Order questions (sign, floor) are answered on the real embedding
// at beta by evaluating on dyadic enclosures of beta that are refined until
// the answer is certain; no floating point value ever decides anything.

#include <pisot/errors.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pisot {

using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational &x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
};

// Axis-aligned box in C with rational corners. Real roots have im == [0, 0].
struct ComplexBox {
    RationalInterval re;
    RationalInterval im;

    bool is_real() const { return im.lo == 0 && im.hi == 0; }
};

std::ostream &operator<<(std::ostream &os, const RationalInterval &iv);
std::ostream &operator<<(std::ostream &os, const ComplexBox &box);

enum class FinitenessCondition { DecreasingCoeffs, DominantLead, CubicUnit, Unknown };

std::string_view to_string(FinitenessCondition condition) noexcept;

struct RenyiExpansion;

namespace detail {
struct SpecData;
}

struct SpecOptions {
    // Degree >= 5 is accepted only when the caller vouches for irreducibility;
    // the rational-root check still runs.
    bool assume_irreducible = false;
    // Which entry of PisotSpec::conjugate_regions() plays the role of alpha.
    std::size_t alpha_index = 0;
};

class PisotSpec {
public:
    // coeffs = (a_0, ..., a_{d-1}). Throws NotPisot, Reducible or
    // UnsupportedDegree.
    static PisotSpec make(std::vector<long long> coeffs, SpecOptions options = {});

    std::size_t degree() const;
    const std::vector<long long> &coeffs() const;
    // Integer coefficients p_0..p_d of M, low order first (p_d = 1).
    const std::vector<Integer> &polynomial() const;

    const RationalInterval &beta_interval() const;
    // Certified isolating boxes for every root of M other than beta.
    const std::vector<ComplexBox> &conjugate_regions() const;
    std::size_t alpha_index() const;
    const ComplexBox &alpha_region() const;

    long long floor_beta() const;
    bool is_unit() const;
    // x^2 - a x - 1 with a >= 1.
    bool is_quadratic_unit() const;
    // The parameter a of a quadratic unit; throws UnsupportedSpec otherwise.
    long long quadratic_a() const;

    std::string describe() const;

    bool operator==(const PisotSpec &other) const;

    const detail::SpecData &data() const { return *data_; }

private:
    explicit PisotSpec(std::shared_ptr<const detail::SpecData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::SpecData> data_;
};

inline PisotSpec make_spec(std::vector<long long> coeffs, SpecOptions options = {}) {
    return PisotSpec::make(std::move(coeffs), options);
}

// c_0 + c_1 beta + ... + c_{d-1} beta^{d-1}.
class FieldElement {
public:
    explicit FieldElement(const PisotSpec &spec);
    FieldElement(const PisotSpec &spec, const Rational &value);
    FieldElement(const PisotSpec &spec, std::vector<Rational> coords);

    static FieldElement one(const PisotSpec &spec) { return FieldElement(spec, Rational(1)); }
    static FieldElement beta(const PisotSpec &spec);
    // beta^n for any integer n (negative powers use the stored inverse of beta).
    static FieldElement beta_power(const PisotSpec &spec, long long n);

    const PisotSpec &spec() const { return spec_; }
    const std::vector<Rational> &coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    bool has_integer_coords() const;
    // Common denominator of the coordinates (positive).
    Integer denominator() const;

    // x * beta, a shift plus one reduction step.
    FieldElement times_beta() const;

    FieldElement &operator+=(const FieldElement &other);
    FieldElement &operator-=(const FieldElement &other);
    FieldElement &operator*=(const FieldElement &other);
    FieldElement &operator*=(const Rational &scalar);

    friend FieldElement operator+(FieldElement x, const FieldElement &y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement &y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement &y) { return x *= y; }
    friend FieldElement operator*(FieldElement x, const Rational &s) { return x *= s; }
    FieldElement operator-() const;

    bool operator==(const FieldElement &other) const;

    std::string to_string() const;

private:
    void require_same_spec(const FieldElement &other) const;

    PisotSpec spec_;
    std::vector<Rational> coords_;
};

std::ostream &operator<<(std::ostream &os, const FieldElement &x);

inline FieldElement add(const FieldElement &x, const FieldElement &y) { return x + y; }
inline FieldElement sub(const FieldElement &x, const FieldElement &y) { return x - y; }
inline FieldElement neg(const FieldElement &x) { return -x; }
inline FieldElement mul(const FieldElement &x, const FieldElement &y) { return x * y; }

// Extended Euclid against M. Throws DivisionByZero for x == 0.
FieldElement invert(const FieldElement &x);
FieldElement pow(const FieldElement &x, long long n);

// Sign of the real embedding at beta.
int sign(const FieldElement &x);
int compare(const FieldElement &x, const FieldElement &y);
Integer floor_at_beta(const FieldElement &x);

// Rational enclosure of x(beta) whose endpoints come from a dyadic bracket of
// beta with at least `bits` fractional bits.
RationalInterval enclose_at_beta(const FieldElement &x, unsigned bits = 64);

// Value of the same coordinate vector at a conjugate of beta (alpha by
// default), enclosed in a box whose sides are no wider than `width`.
ComplexBox conjugate_value(const FieldElement &x, const Rational &width);
ComplexBox conjugate_value(const FieldElement &x, const Rational &width,
                           std::size_t conjugate_index);

FinitenessCondition check_finiteness_conditions(const PisotSpec &spec);

// Parses "p/q", "n" or a coordinate list "c0,c1,..." (each a rational).
FieldElement parse_field_element(const PisotSpec &spec, std::string_view text);
Rational parse_rational(std::string_view text);

} // namespace pisot
