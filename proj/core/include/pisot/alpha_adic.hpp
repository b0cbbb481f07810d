#pragma once

// Alpha-adic expansions: left-infinite, eventually periodic, weakly admissible
// words whose value at the conjugate alpha equals a given target.
//
// A target is passed as the element x of Q(beta) whose conjugate x' is the
// number being expanded, so pi_alpha(result) == x exactly. Rationals are their
// own conjugates.

#include <pisot/beta.hpp>
#include <pisot/words.hpp>

#include <cstdint>
#include <vector>

namespace pisot {

struct ExpansionSet {
    FieldElement target;
    std::vector<LeftWord> expansions;
    std::size_t head_bound = 0;
    std::size_t fraction_bound = 0;
    // Periods the search was allowed to use (empty word = finite).
    std::vector<DigitWord> period_candidates;
    // Set when completeness of the period restriction is not guaranteed for
    // this target.
    bool heuristic = false;
};

struct NormalizedPreperiod {
    // Canonical-alphabet word; the integer part keeps its leading zeros so it
    // occupies the same positions as the input (wider if carries spill over).
    FiniteWord word;
    // Period blocks pulled into the pre-period to make its value nonnegative.
    std::size_t unfolds = 0;
};

// Replaces a signed-digit pre-period by the beta-expansion of its value. If the
// value is negative, blocks of the d*_beta(1) period sitting to the left of the
// word are unfolded into it first.
NormalizedPreperiod normalize_preperiod(const FiniteWord &w, const PisotSpec &spec,
                                        std::uint64_t budget = kDefaultBudget);

// The finite expansion with the same digits as the beta-expansion of x > 0.
LeftWord alpha_expand_positive(const FieldElement &x, std::uint64_t budget = kDefaultBudget);

// The l expansions of -1 built from d_beta(1) = t_1...t_l; the first is
// ^omega(t_1...t_{l-1}(t_l - 1)).
ExpansionSet expansions_of_minus_one(const PisotSpec &spec);

struct NegativeExpansionTrace {
    RightWord expansion_of_negation;
    // Signed pre-period after the expansion of -1 has been attached and the
    // period blocks overlapping it have been unfolded.
    FiniteWord signed_preperiod;
    NormalizedPreperiod normalized;
    LeftWord result;
};

// x < 0 with -x of finite beta-expansion: expand -x, negate the digits, cancel
// the rightmost digit against an expansion of -1 and normalize the pre-period.
// `minus_one_variant` picks which expansion of -1 is used (index into
// expansions_of_minus_one).
LeftWord alpha_expand_negative(const FieldElement &x, std::size_t minus_one_variant = 0,
                               std::uint64_t budget = kDefaultBudget);
NegativeExpansionTrace trace_alpha_expand_negative(const FieldElement &x,
                                                   std::size_t minus_one_variant = 0,
                                                   std::uint64_t budget = kDefaultBudget);

// Any x in Q(beta).
LeftWord alpha_expand(const FieldElement &x, std::uint64_t budget = kDefaultBudget);

// Exhaustive search over canonical weakly admissible words with period in
// {empty, rotations of "a0"}, head length <= head_bound and fraction length
// <= fraction_bound. Quadratic units x^2 - a x - 1 only.
ExpansionSet enumerate_expansions(const FieldElement &x, std::size_t head_bound,
                                  std::size_t fraction_bound);

} // namespace pisot
