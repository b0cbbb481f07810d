#include "settle.hpp"

#include <pisot/alpha_adic.hpp>

#include <algorithm>

namespace pisot {

namespace detail {

namespace {

constexpr int kExtraUnfolds = 8;

FieldElement value_of(const std::map<long long, long long> &digits, const PisotSpec &spec) {
    if (digits.empty()) {
        return FieldElement(spec);
    }
    const long long lo = digits.begin()->first;
    const long long hi = digits.rbegin()->first;
    FieldElement acc(spec);
    for (long long pos = hi; pos >= lo; --pos) {
        acc = acc.times_beta();
        auto it = digits.find(pos);
        if (it != digits.end() && it->second != 0) {
            acc += FieldElement(spec, Rational(static_cast<long>(it->second)));
        }
    }
    if (lo != 0) {
        acc *= FieldElement::beta_power(spec, lo);
    }
    return acc;
}

// Value of one period copy whose rightmost digit sits at position 0.
FieldElement block_value(const DigitWord &period, const PisotSpec &spec) {
    std::map<long long, long long> b;
    const long long p = static_cast<long long>(period.size());
    for (long long j = 0; j < p; ++j) {
        b[j] = period[static_cast<std::size_t>(p - 1 - j)];
    }
    return value_of(b, spec);
}

long long highest_nonzero(const std::map<long long, long long> &digits, long long fallback) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (it->second != 0) {
            return it->first;
        }
    }
    return fallback;
}

FiniteWord window(const std::map<long long, long long> &digits, long long top, long long bottom) {
    FiniteWord w;
    for (long long pos = top; pos >= bottom; --pos) {
        auto it = digits.find(pos);
        w.digits.push_back(it == digits.end() ? 0 : static_cast<Digit>(it->second));
    }
    w.point = static_cast<std::size_t>(std::max(0LL, top + 1));
    return w;
}

DigitWord d_star_block(const PisotSpec &spec) {
    const RenyiExpansion &renyi = cached_renyi(spec);
    if (!renyi.is_finite()) {
        throw Error(ErrorKind::InfiniteRenyi, "d_beta(1) is infinite");
    }
    return renyi.d_star().period;
}

// Digits of a finite right word placed at their positions, negated if asked.
void place(std::map<long long, long long> &digits, const RightWord &e, int sign_factor) {
    const long long top = static_cast<long long>(e.integer_part.size()) - 1;
    for (std::size_t i = 0; i < e.integer_part.size(); ++i) {
        digits[top - static_cast<long long>(i)] += sign_factor * e.integer_part[i];
    }
    for (std::size_t i = 0; i < e.preperiod.size(); ++i) {
        digits[-1 - static_cast<long long>(i)] += sign_factor * e.preperiod[i];
    }
}

long long rightmost_nonzero(const std::map<long long, long long> &digits) {
    for (const auto &[pos, d] : digits) {
        if (d != 0) {
            return pos;
        }
    }
    throw Error(ErrorKind::OutOfRange, "no nonzero digit");
}

// Cancels the digit -1 contributed at position m by adding +1 there and
// attaching an expansion of -1 scaled by beta^m.
void attach_minus_one(RawExpansion &raw, long long m, const LeftWord &minus_one) {
    raw.digits[m] += 1;
    const long long h = static_cast<long long>(minus_one.head.size());
    for (long long i = 0; i < h; ++i) {
        raw.digits[m + h - 1 - i] += minus_one.head[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < minus_one.fraction.size(); ++i) {
        raw.digits[m - 1 - static_cast<long long>(i)] += minus_one.fraction[i];
    }
    raw.period = minus_one.period;
    raw.anchor = m + h;
}

RawExpansion negated_finite(const RightWord &e) {
    RawExpansion raw;
    place(raw.digits, e, -1);
    return raw;
}

} // namespace

void RawExpansion::shift(long long n) {
    std::map<long long, long long> moved;
    for (const auto &[pos, d] : digits) {
        moved[pos + n] = d;
    }
    digits = std::move(moved);
    anchor += n;
}

void RawExpansion::unfold() {
    const long long p = static_cast<long long>(period.size());
    for (long long j = 0; j < p; ++j) {
        digits[anchor + j] += period[static_cast<std::size_t>(p - 1 - j)];
    }
    anchor += p;
}

Settled settle(RawExpansion raw, const PisotSpec &spec, std::uint64_t budget, SettleOptions options) {
    if (raw.period.empty() || std::all_of(raw.period.begin(), raw.period.end(), [](Digit d) { return d == 0; })) {
        // Nothing to borrow from: the finite part must already be >= 0.
        raw.period.clear();
        FieldElement v = value_of(raw.digits, spec);
        if (sign(v) < 0) {
            return {alpha_expand(v, budget), {}, {}};
        }
        RightWord e = beta_expand(v, budget);
        if (!e.is_finite()) {
            throw Error(ErrorKind::NotFinite, "pre-period value has an infinite beta-expansion");
        }
        LeftWord w = canonicalize(LeftWord{{}, e.integer_part, e.preperiod});
        return {w, {}, {FiniteWord::from_parts(e.integer_part, e.preperiod), 0}};
    }
    while (raw.anchor < 0 || raw.anchor <= highest_nonzero(raw.digits, raw.anchor - 1)) {
        raw.unfold();
    }
    long long bottom = std::min(raw.digits.empty() ? 0 : raw.digits.begin()->first, 0LL);
    Settled out{{}, window(raw.digits, raw.anchor - 1, bottom), {}};

    const RenyiExpansion &renyi = cached_renyi(spec);
    const FieldElement block = block_value(raw.period, spec);
    FieldElement v = value_of(raw.digits, spec);
    std::size_t unfolds = 0;
    auto unfold = [&] {
        v += block * FieldElement::beta_power(spec, raw.anchor);
        raw.unfold();
        ++unfolds;
    };
    ErrorKind failure = ErrorKind::NotAdmissible;
    for (int attempt = 0; attempt <= kExtraUnfolds; ++attempt) {
        while (sign(v) < 0) {
            unfold();
        }
        const RightWord e = beta_expand(v, budget);
        if (!e.is_finite()) {
            throw Error(ErrorKind::NotFinite, "pre-period value has an infinite beta-expansion");
        }
        const long long width = static_cast<long long>(e.integer_part.size());
        if (width > raw.anchor && !options.allow_overflow) {
            failure = ErrorKind::PeriodInterference;
            unfold();
            continue;
        }
        DigitWord head(static_cast<std::size_t>(std::max(raw.anchor - width, 0LL)), 0);
        head.insert(head.end(), e.integer_part.begin(), e.integer_part.end());
        out.normalized = {FiniteWord::from_parts(head, e.preperiod), unfolds};
        out.word = canonicalize(LeftWord{raw.period, head, e.preperiod});
        if (!options.require_admissible || is_weakly_admissible(out.word, renyi)) {
            return out;
        }
        failure = ErrorKind::NotAdmissible;
        unfold();
    }
    throw Error(failure, failure == ErrorKind::NotAdmissible
                             ? "normalized pre-period is not weakly admissible against the period"
                             : "normalized pre-period runs into the period");
}

RawExpansion raw_negative(const FieldElement &y, std::uint64_t budget) {
    const PisotSpec &spec = y.spec();
    const RightWord e = beta_expand(y, budget);
    if (e.is_finite()) {
        RawExpansion raw = negated_finite(e);
        const long long m = rightmost_nonzero(raw.digits);
        attach_minus_one(raw, m, LeftWord{d_star_block(spec), {}, {}});
        return raw;
    }
    // y / beta^N = 0.F(Q)^omega, and -0.F(Q)^omega = ^omega(Q) (-F) with the
    // period ending right above the last digit of F.
    const long long n_shift = leading_exponent(y) + 1;
    const RightWord scaled = beta_expand(y * FieldElement::beta_power(spec, -n_shift), budget);
    RawExpansion raw;
    raw.period = scaled.period;
    const long long n = static_cast<long long>(scaled.preperiod.size());
    for (long long i = 0; i < n; ++i) {
        raw.digits[-1 - i] = -scaled.preperiod[static_cast<std::size_t>(i)];
    }
    raw.anchor = -n;
    raw.shift(n_shift);
    return raw;
}

RawExpansion raw_from_left_word(const LeftWord &w) {
    RawExpansion raw;
    raw.period = w.period;
    const long long h = static_cast<long long>(w.head.size());
    for (long long i = 0; i < h; ++i) {
        raw.digits[h - 1 - i] = w.head[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < w.fraction.size(); ++i) {
        raw.digits[-1 - static_cast<long long>(i)] = w.fraction[i];
    }
    raw.anchor = h;
    return raw;
}

} // namespace detail

NormalizedPreperiod normalize_preperiod(const FiniteWord &w, const PisotSpec &spec, std::uint64_t budget) {
    if (w.is_zero()) {
        return {};
    }
    detail::RawExpansion raw;
    raw.period = detail::d_star_block(spec);
    raw.anchor = static_cast<long long>(w.point);
    const long long top = raw.anchor - 1;
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
        raw.digits[top - static_cast<long long>(i)] = w.digits[i];
    }
    return detail::settle(raw, spec, budget, {false, true}).normalized;
}

LeftWord alpha_expand_positive(const FieldElement &x, std::uint64_t budget) {
    if (sign(x) < 0) {
        throw Error(ErrorKind::NegativeInput, "expected x > 0");
    }
    const RightWord e = beta_expand(x, budget);
    if (!e.is_finite()) {
        throw Error(ErrorKind::NotFinite, "beta-expansion of x is not finite");
    }
    return LeftWord{{}, e.integer_part, e.preperiod};
}

ExpansionSet expansions_of_minus_one(const PisotSpec &spec) {
    const RenyiExpansion &renyi = cached_renyi(spec);
    const DigitWord block = detail::d_star_block(spec);
    ExpansionSet set{FieldElement(spec, Rational(-1)), {}, 0, 0, {block}, false};
    set.expansions.push_back(canonicalize(LeftWord{block, {}, {}}));
    const DigitWord &t = renyi.digits;
    const long long l = static_cast<long long>(t.size());
    for (long long j = 1; j < l; ++j) {
        // ^omega(P) t_1 ... t_{j-1} (t_j - 1) . t_{j+1} ... t_l
        detail::RawExpansion raw;
        raw.period = block;
        raw.anchor = j;
        for (long long i = 1; i <= l; ++i) {
            raw.digits[j - i] = t[static_cast<std::size_t>(i - 1)] - (i == j ? 1 : 0);
        }
        set.expansions.push_back(detail::settle(raw, spec, kDefaultBudget).word);
    }
    return set;
}

NegativeExpansionTrace trace_alpha_expand_negative(const FieldElement &x, std::size_t minus_one_variant,
                                                   std::uint64_t budget) {
    if (sign(x) >= 0) {
        throw Error(ErrorKind::OutOfRange, "expected x < 0");
    }
    const PisotSpec &spec = x.spec();
    const ExpansionSet minus_one = expansions_of_minus_one(spec);
    if (minus_one_variant >= minus_one.expansions.size()) {
        throw Error(ErrorKind::OutOfRange, "no such expansion of -1");
    }
    NegativeExpansionTrace trace;
    trace.expansion_of_negation = beta_expand(-x, budget);
    if (!trace.expansion_of_negation.is_finite()) {
        throw Error(ErrorKind::NotFinite, "beta-expansion of -x is not finite");
    }
    detail::RawExpansion raw = detail::negated_finite(trace.expansion_of_negation);
    const long long m = detail::rightmost_nonzero(raw.digits);
    detail::attach_minus_one(raw, m, minus_one.expansions[minus_one_variant]);
    const detail::Settled settled = detail::settle(raw, spec, budget);
    trace.signed_preperiod = settled.signed_preperiod;
    trace.normalized = settled.normalized;
    trace.result = settled.word;
    return trace;
}

LeftWord alpha_expand_negative(const FieldElement &x, std::size_t minus_one_variant, std::uint64_t budget) {
    return trace_alpha_expand_negative(x, minus_one_variant, budget).result;
}

LeftWord alpha_expand(const FieldElement &x, std::uint64_t budget) {
    const int s = sign(x);
    if (s == 0) {
        return {};
    }
    const PisotSpec &spec = x.spec();
    if (s < 0) {
        return detail::settle(detail::raw_negative(-x, budget), spec, budget).word;
    }
    const RightWord e = beta_expand(x, budget);
    if (e.is_finite()) {
        return LeftWord{{}, e.integer_part, e.preperiod};
    }
    // x / beta^N = 1 - t with 0 < t < 1: expand -t, add 1 at position 0 and
    // move the point back by N.
    const long long n = detail::leading_exponent(x) + 1;
    const FieldElement t = FieldElement::one(spec) - x * FieldElement::beta_power(spec, -n);
    detail::RawExpansion raw = detail::raw_negative(t, budget);
    raw.digits[0] += 1;
    raw.shift(n);
    return detail::settle(raw, spec, budget).word;
}

} // namespace pisot
