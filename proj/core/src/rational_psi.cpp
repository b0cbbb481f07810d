#include "settle.hpp"

#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>

#include <algorithm>
#include <map>

namespace pisot {

namespace {

Integer ceil_of(const Rational &x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer floor_of(const Rational &x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// Repeated normalization with a larger run bound when a run of a's is longer
// than the chain allows.
LeftWord normalize_with_transducer(const LeftWord &w, long long a, const Integer &den, const PisotSpec &spec) {
    long long bound = consecutive_a_bound(a, den);
    const long long limit = bound + 2 * static_cast<long long>(w.period.size() + w.head.size()) + 8;
    for (; bound <= limit; ++bound) {
        try {
            const LeftWord out = run_right_sequential(build_normalization_transducer(a, bound), w);
            if (is_weakly_admissible(out, spec)) {
                return out;
            }
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NoTransition) {
                throw;
            }
        }
    }
    throw Error(ErrorKind::NoTransition, "normalization transducer did not accept the representation");
}

} // namespace

PsiResult psi_step(const Rational &x3, const Rational &x2, const Rational &x1, long long a) {
    const Integer up = ceil_of(x1);
    const Rational c = Rational(up) - x1;
    return {x3 - c, x2 + Rational(static_cast<long>(a)) * c, up};
}

std::uint64_t default_psi_budget(const Rational &q, long long a) {
    const Integer side = q.get_den() * static_cast<long>(a + 1) + 1;
    const Integer total = side * side;
    return total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;
}

PsiTrace trace_rational_alpha(const Rational &q, long long a, std::uint64_t budget) {
    if (a < 1) {
        throw Error(ErrorKind::UnsupportedSpec, "need a >= 1");
    }
    if (abs(q) >= 1) {
        throw Error(ErrorKind::OutOfRange, "expected |q| < 1");
    }
    if (budget == 0) {
        budget = default_psi_budget(q, a);
    }
    PsiTrace trace;
    trace.a = a;
    trace.q = q;
    std::map<PsiState, std::size_t> seen;
    Rational hi = 0;
    Rational lo = 0;
    Rational low = q;
    for (std::uint64_t step = 0; step < budget; ++step) {
        const PsiResult r = psi_step(hi, lo, low, a);
        if (!r.x1.fits_sint_p()) {
            throw Error(ErrorKind::OutOfRange, "digit out of range");
        }
        trace.emitted.push_back(static_cast<Digit>(r.x1.get_si()));
        const PsiState state{r.x3, r.x2};
        trace.states.push_back(state);
        const std::size_t j = trace.states.size() - 1;
        auto [it, inserted] = seen.emplace(state, j);
        if (!inserted) {
            const std::size_t i = it->second;
            trace.period_start = i;
            trace.period_len = j - i;
            // s_{i+1} ... s_j repeat; s_0 ... s_i are the head (lowest first).
            DigitWord period(trace.emitted.begin() + static_cast<long>(i + 1), trace.emitted.end());
            DigitWord head(trace.emitted.begin(), trace.emitted.begin() + static_cast<long>(i + 1));
            std::reverse(period.begin(), period.end());
            std::reverse(head.begin(), head.end());
            trace.word = canonicalize(LeftWord{period, head, {}});
            return trace;
        }
        hi = 0;
        lo = r.x3;
        low = r.x2;
    }
    throw Error(ErrorKind::BudgetExhausted, "no repeated state within the step budget");
}

LeftWord rational_alpha_represent(const Rational &q, const PisotSpec &spec, std::uint64_t budget) {
    const long long a = spec.quadratic_a();
    LeftWord w = trace_rational_alpha(q, a, budget).word;
    if (pi_alpha(w, spec) != FieldElement(spec, q)) {
        throw Error(ErrorKind::SpecMismatch, "representation does not evaluate to q");
    }
    return w;
}

LeftWord rational_alpha_expand(const Rational &q, const PisotSpec &spec, std::uint64_t budget) {
    const long long a = spec.quadratic_a();
    if (abs(q) < 1) {
        const LeftWord w = rational_alpha_represent(q, spec, budget);
        if (is_weakly_admissible(w, spec)) {
            return w;
        }
        return normalize_with_transducer(w, a, q.get_den(), spec);
    }
    const Integer n = floor_of(q);
    const Rational r = q - Rational(n);
    detail::RawExpansion raw = detail::raw_from_left_word(rational_alpha_expand(r, spec, budget));
    if (!n.fits_slong_p()) {
        throw Error(ErrorKind::OutOfRange, "integer part too large");
    }
    raw.digits[0] += n.get_si();
    return detail::settle(raw, spec, budget == 0 ? kDefaultBudget : budget).word;
}

} // namespace pisot
