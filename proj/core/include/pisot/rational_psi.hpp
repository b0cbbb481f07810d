#pragma once

// Alpha-adic representations of rationals in a quadratic unit base
// x^2 - a x - 1 by repeated application of the value-preserving rewrite
// psi(x3, x2, x1) = (x3 - c, x2 + a c, ceil(x1)) with c = ceil(x1) - x1.

#include <pisot/algebra.hpp>
#include <pisot/words.hpp>

#include <cstdint>
#include <vector>

namespace pisot {

struct PsiResult {
    Rational x3;
    Rational x2;
    Integer x1;
};

PsiResult psi_step(const Rational &x3, const Rational &x2, const Rational &x1, long long a);

// The two coefficients that can still be fractional after a step: (s_{i+2},
// s_{i+1}) after step i.
struct PsiState {
    Rational carry_hi;
    Rational carry_lo;

    bool operator==(const PsiState &other) const {
        return carry_hi == other.carry_hi && carry_lo == other.carry_lo;
    }
    bool operator<(const PsiState &other) const {
        return carry_hi < other.carry_hi || (carry_hi == other.carry_hi && carry_lo < other.carry_lo);
    }
};

struct PsiTrace {
    long long a = 0;
    Rational q;
    // s_0, s_1, ... (lowest position first).
    std::vector<Digit> emitted;
    // states[i] is the state after step i.
    std::vector<PsiState> states;
    // The state after step period_start + period_len equals the one after
    // step period_start.
    std::size_t period_start = 0;
    std::size_t period_len = 0;
    LeftWord word;
};

// Pigeonhole bound (den (a + 1) + 1)^2 on the number of distinct states.
std::uint64_t default_psi_budget(const Rational &q, long long a);

// |q| < 1. budget == 0 selects default_psi_budget.
PsiTrace trace_rational_alpha(const Rational &q, long long a, std::uint64_t budget = 0);

// ^omega(period) head. with alpha-value q. Throws OutOfRange for |q| >= 1 and
// UnsupportedSpec unless spec is a quadratic unit.
LeftWord rational_alpha_represent(const Rational &q, const PisotSpec &spec, std::uint64_t budget = 0);

// As above, then normalized by the transducer when the representation is not
// weakly admissible. Rationals outside (-1, 1) are split as n + r with
// 0 <= r < 1 and n added at position 0 of the expansion of r.
LeftWord rational_alpha_expand(const Rational &q, const PisotSpec &spec, std::uint64_t budget = 0);

} // namespace pisot
