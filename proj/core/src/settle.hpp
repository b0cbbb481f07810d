#pragma once

#include <pisot/alpha_adic.hpp>

#include <map>

namespace pisot::detail {

// ^omega(period) written to the left of a signed finite part. The nearest copy
// of the period has its rightmost digit at position `anchor`; `digits` maps
// positions to signed digits and may overlap the periodic region.
struct RawExpansion {
    DigitWord period;
    std::map<long long, long long> digits;
    long long anchor = 0;

    void shift(long long n);
    // Moves the nearest period copy into `digits`.
    void unfold();
};

struct SettleOptions {
    bool require_admissible = true;
    // Let the normalized pre-period grow into the periodic region instead of
    // reporting PeriodInterference.
    bool allow_overflow = false;
};

struct Settled {
    LeftWord word;
    FiniteWord signed_preperiod;
    NormalizedPreperiod normalized;
};

// Rewrites the signed finite part as a beta-expansion (Property (F) makes it
// finite) once enough period copies are unfolded for its value to be >= 0 and
// for it to lie right of the period.
Settled settle(RawExpansion raw, const PisotSpec &spec, std::uint64_t budget,
               SettleOptions options = {});

// Raw form of -y for y > 0.
RawExpansion raw_negative(const FieldElement &y, std::uint64_t budget);

long long leading_exponent(const FieldElement &x);

// The word with its head ending at position 0 and the period right above it.
RawExpansion raw_from_left_word(const LeftWord &w);

} // namespace pisot::detail
