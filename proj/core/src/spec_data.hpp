#pragma once

#include <pisot/algebra.hpp>

#include <memory>
#include <mutex>
#include <vector>

namespace pisot::detail {

// lo / 2^scale < beta < hi / 2^scale, with integer powers of lo and hi cached
// so that a sign test is a handful of big-integer multiply-adds.
struct BetaBracket {
    unsigned scale = 0;
    Integer lo;
    Integer hi;
    std::vector<Integer> lo_pow;
    std::vector<Integer> hi_pow;
};

// A region holding exactly one root of M: either a rational interval with a
// sign change (real root) or a disk (centre, radius) from the Newton inclusion
// bound.
struct RootRegion {
    bool real = true;
    RationalInterval interval;
    Rational centre_re;
    Rational centre_im;
    Rational radius;

    ComplexBox box() const;
};

struct SpecData {
    std::vector<long long> coeffs;
    std::size_t degree = 0;
    std::vector<Integer> poly;
    std::vector<Rational> inverse_beta;
    long long floor_beta = 0;
    bool unit = false;

    std::vector<BetaBracket> brackets;
    RationalInterval beta_interval;

    std::vector<RootRegion> conjugates;
    std::vector<ComplexBox> conjugate_boxes;
    std::size_t alpha_index = 0;

    mutable std::once_flag renyi_once;
    mutable std::shared_ptr<const RenyiExpansion> renyi;
};

// Polynomial helpers (roots.cpp). Polynomials are low order first.
int sign_at(const std::vector<Integer> &poly, const Rational &x);
bool has_rational_root(const std::vector<Integer> &poly);
bool has_quadratic_factor(const std::vector<Integer> &poly);
bool is_reciprocal(const std::vector<Integer> &poly);

// Isolates every root of a squarefree monic integer polynomial. Real roots come
// first in increasing order, then complex roots with positive imaginary part,
// each immediately followed by its mirror image.
std::vector<RootRegion> isolate_roots(const std::vector<Integer> &poly);

// Shrinks `region` until its box is no wider than `width` on each axis.
RootRegion refine_region(const std::vector<Integer> &poly, const RootRegion &region,
                         const Rational &width);

// Certified answers: +1 strictly outside the closed unit disk, -1 strictly
// inside, 0 undecided at the current resolution.
int unit_disk_side(const RootRegion &region);

// Bisection of the unique root > 1 starting from the integer bracket (1, bound).
BetaBracket initial_bracket(const std::vector<Integer> &poly);
BetaBracket refine_bracket(const std::vector<Integer> &poly, const BetaBracket &from,
                           unsigned target_scale);

} // namespace pisot::detail
