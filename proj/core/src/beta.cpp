#include "settle.hpp"
#include "spec_data.hpp"

#include <pisot/beta.hpp>

#include <map>

namespace pisot {

Sequence RenyiExpansion::d_star() const {
    if (!is_finite()) {
        return {digits, period};
    }
    DigitWord block = digits;
    block.back() -= 1;
    return {{}, block};
}

RenyiExpansion renyi_d(const PisotSpec &spec, std::uint64_t budget) {
    RenyiExpansion out;
    FieldElement r = FieldElement::one(spec);
    std::map<std::vector<Rational>, std::size_t> seen;
    for (std::uint64_t step = 0; step < budget; ++step) {
        FieldElement y = r.times_beta();
        const Integer t = floor_at_beta(y);
        out.digits.push_back(static_cast<Digit>(t.get_si()));
        r = y - FieldElement(spec, Rational(t));
        if (r.is_zero()) {
            return out;
        }
        auto [it, inserted] = seen.emplace(r.coords(), out.digits.size());
        if (!inserted) {
            const auto start = static_cast<long>(it->second);
            out.period.assign(out.digits.begin() + start, out.digits.end());
            out.digits.resize(it->second);
            return out;
        }
    }
    throw Error(ErrorKind::BudgetExhausted, "Renyi expansion of 1 did not close within the budget");
}

const RenyiExpansion &cached_renyi(const PisotSpec &spec) {
    const detail::SpecData &data = spec.data();
    std::call_once(data.renyi_once,
                   [&] { data.renyi = std::make_shared<const RenyiExpansion>(renyi_d(spec)); });
    return *data.renyi;
}

RightWord renyi_d_star(const PisotSpec &spec) {
    const Sequence s = cached_renyi(spec).d_star();
    return canonicalize(RightWord{{}, s.prefix, s.period});
}

namespace {

bool power_at_most(const PisotSpec &spec, long long k, const FieldElement &x) {
    return compare(FieldElement::beta_power(spec, k), x) <= 0;
}

} // namespace

// Largest k with beta^k <= x, for x > 0.
long long detail::leading_exponent(const FieldElement &x) {
    const PisotSpec &spec = x.spec();
    long long lo;
    long long hi;
    if (power_at_most(spec, 0, x)) {
        lo = 0;
        hi = 1;
        while (power_at_most(spec, hi, x)) {
            lo = hi;
            hi *= 2;
        }
    } else {
        hi = 0;
        lo = -1;
        while (!power_at_most(spec, lo, x)) {
            hi = lo;
            lo *= 2;
        }
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (power_at_most(spec, mid, x)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

RightWord beta_expand(const FieldElement &x, std::uint64_t budget) {
    const int s = sign(x);
    if (s < 0) {
        throw Error(ErrorKind::NegativeInput, "beta-expansion needs x >= 0");
    }
    if (s == 0) {
        return {};
    }
    const PisotSpec &spec = x.spec();
    const long long k = detail::leading_exponent(x);

    RightWord out;
    if (k < 0) {
        out.preperiod.assign(static_cast<std::size_t>(-k - 1), 0);
    }
    FieldElement r = x * FieldElement::beta_power(spec, -k);
    // Remainders after emitting the digit at position <= 0, keyed to the
    // number of fraction digits emitted so far.
    std::map<std::vector<Rational>, std::size_t> seen;
    long long position = k;
    bool first = true;
    for (std::uint64_t step = 0; step < budget; ++step, --position) {
        FieldElement y = first ? r : r.times_beta();
        first = false;
        const Integer digit = floor_at_beta(y);
        r = y - FieldElement(spec, Rational(digit));
        const Digit d = static_cast<Digit>(digit.get_si());
        if (position >= 0) {
            out.integer_part.push_back(d);
        } else {
            out.preperiod.push_back(d);
        }
        if (r.is_zero()) {
            if (position > 0) {
                out.integer_part.insert(out.integer_part.end(), static_cast<std::size_t>(position), 0);
            }
            return canonicalize(out);
        }
        if (position <= 0) {
            auto [it, inserted] = seen.emplace(r.coords(), out.preperiod.size());
            if (!inserted) {
                const auto start = static_cast<long>(it->second);
                out.period.assign(out.preperiod.begin() + start, out.preperiod.end());
                out.preperiod.resize(it->second);
                return canonicalize(out);
            }
        }
    }
    throw Error(ErrorKind::BudgetExhausted, "beta-expansion did not close within the budget");
}

Finiteness classify_finiteness(const FieldElement &x, std::uint64_t budget) {
    return beta_expand(x, budget).is_finite() ? Finiteness::Finite : Finiteness::EventuallyPeriodic;
}

} // namespace pisot
