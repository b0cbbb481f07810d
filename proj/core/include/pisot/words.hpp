#pragma once

// Digit words and their values.
//
// Digits are stored most significant first everywhere. A FiniteWord carries
// the position of the radix point; RightWord is an eventually periodic word
// extending to the right (beta-expansions) and LeftWord an eventually periodic
// word extending to the left with a finite fractional part (alpha-adic
// expansions).

#include <pisot/algebra.hpp>

#include <cstddef>
#include <vector>

namespace pisot {

using Digit = int;
using DigitWord = std::vector<Digit>;

struct FiniteWord {
    DigitWord digits;
    // Number of digits left of the point.
    std::size_t point = 0;

    static FiniteWord from_parts(const DigitWord &integer_part, const DigitWord &fraction);
    DigitWord integer_part() const;
    DigitWord fraction_part() const;
    bool is_zero() const;

    bool operator==(const FiniteWord &) const = default;
};

// integer_part . preperiod (period)^omega
struct RightWord {
    DigitWord integer_part;
    DigitWord preperiod;
    DigitWord period;

    bool is_finite() const { return period.empty(); }
    bool operator==(const RightWord &) const = default;
};

// ^omega(period) head . fraction
struct LeftWord {
    DigitWord period;
    DigitWord head;
    DigitWord fraction;

    bool is_finite() const { return period.empty(); }
    bool is_zero() const;
    bool operator==(const LeftWord &) const = default;
    auto operator<=>(const LeftWord &) const = default;
};

struct Alphabet {
    Digit lo = 0;
    Digit hi = 0;

    bool contains(Digit d) const { return lo <= d && d <= hi; }
    bool contains(const DigitWord &w) const;
    // {0, ..., floor(beta)}
    static Alphabet canonical(const PisotSpec &spec);
};

// One-sided infinite word prefix . period^omega, used for lexicographic
// comparisons. An empty period stands for trailing zeros.
struct Sequence {
    DigitWord prefix;
    DigitWord period;

    Digit at(std::size_t i) const;
};

int lex_compare(const Sequence &u, const Sequence &v);
inline bool lex_less(const Sequence &u, const Sequence &v) { return lex_compare(u, v) < 0; }

// Every tail of the word (integer part included) read as a sequence.
Sequence as_sequence(const RightWord &w);

FieldElement pi_beta(const FiniteWord &w, const PisotSpec &spec);
FieldElement pi_beta(const RightWord &w, const PisotSpec &spec);
// Throws Divergent when the word has a period.
FieldElement pi_beta(const LeftWord &w, const PisotSpec &spec);

// The element x of Q(beta) whose conjugate x' is the alpha-value of w: the
// digits are summed formally in beta, and the left period contributes
// v / (1 - beta^p), which converges once beta is replaced by alpha.
FieldElement pi_alpha(const FiniteWord &w, const PisotSpec &spec);
FieldElement pi_alpha(const LeftWord &w, const PisotSpec &spec);

RightWord canonicalize(RightWord w);
LeftWord canonicalize(LeftWord w);

// Shortest word u with w = u^k.
DigitWord primitive_root(const DigitWord &w);

// Parry's condition: every tail strictly below d*_beta(1).
bool is_admissible_beta(const RightWord &w, const PisotSpec &spec);
bool is_admissible_beta(const RightWord &w, const RenyiExpansion &renyi);

// Every factor of length l is strictly below t_1...t_l when d_beta(1) is
// finite of length l; otherwise every tail is at most d*_beta(1).
bool is_weakly_admissible(const LeftWord &w, const PisotSpec &spec);
bool is_weakly_admissible(const LeftWord &w, const RenyiExpansion &renyi);

// The "every tail is at most d*_beta(1)" reading, kept for cross-checking.
bool is_weakly_admissible_dstar(const LeftWord &w, const PisotSpec &spec);

} // namespace pisot
