#pragma once

#include <pisot/algebra.hpp>
#include <pisot/words.hpp>

#include <cstdint>

namespace pisot {

inline constexpr std::uint64_t kDefaultBudget = 100000;

// d_beta(1) = t_1 t_2 ... from iterating T_beta(x) = beta x - floor(beta x) on 1.
struct RenyiExpansion {
    // Finite: digits = t_1..t_l with t_l >= 1 and period empty.
    // Infinite: digits is the pre-period and period is nonempty.
    DigitWord digits;
    DigitWord period;

    bool is_finite() const { return period.empty(); }
    std::size_t ell() const { return digits.size(); }
    Sequence as_sequence() const { return {digits, period}; }
    // d*_beta(1) as a sequence.
    Sequence d_star() const;
};

RenyiExpansion renyi_d(const PisotSpec &spec, std::uint64_t budget = kDefaultBudget);
// Computed once per spec with the default budget.
const RenyiExpansion &cached_renyi(const PisotSpec &spec);

// d*_beta(1) in the form 0.(t_1 ... t_{l-1} (t_l - 1))^omega, or d_beta(1)
// itself when that is infinite.
RightWord renyi_d_star(const PisotSpec &spec);

// Greedy beta-expansion of x >= 0 with exact period detection.
RightWord beta_expand(const FieldElement &x, std::uint64_t budget = kDefaultBudget);

enum class Finiteness { Finite, EventuallyPeriodic };

Finiteness classify_finiteness(const FieldElement &x, std::uint64_t budget = kDefaultBudget);

} // namespace pisot
