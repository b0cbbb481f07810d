#include <pisot/beta.hpp>
#include <pisot/words.hpp>

#include <algorithm>
#include <numeric>

namespace pisot {

namespace {

// sum w[j] beta^{|w| - 1 - j}
FieldElement horner(const PisotSpec &spec, const DigitWord &w) {
    FieldElement acc(spec);
    for (Digit d : w) {
        acc = acc.times_beta();
        acc += FieldElement(spec, Rational(d));
    }
    return acc;
}

DigitWord concat(DigitWord a, const DigitWord &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool all_zero(const DigitWord &w) {
    return std::all_of(w.begin(), w.end(), [](Digit d) { return d == 0; });
}

DigitWord rotate_left(const DigitWord &w, std::size_t r) {
    DigitWord out = w;
    std::rotate(out.begin(), out.begin() + static_cast<long>(r % w.size()), out.end());
    return out;
}

bool within(const DigitWord &w, Digit hi) {
    return std::all_of(w.begin(), w.end(), [hi](Digit d) { return d >= 0 && d <= hi; });
}

bool windows_below(const DigitWord &text, const DigitWord &t) {
    const std::size_t l = t.size();
    for (std::size_t i = 0; i + l <= text.size(); ++i) {
        if (!std::lexicographical_compare(text.begin() + static_cast<long>(i),
                                          text.begin() + static_cast<long>(i + l), t.begin(), t.end())) {
            return false;
        }
    }
    return true;
}

// Every tail of ^omega(P) H F 0^omega is at most d*. Tails that start k
// period copies to the left of H agree with rot(P)^omega beyond a fixed length,
// so finitely many k suffice.
bool tails_at_most_dstar(const LeftWord &w, const RenyiExpansion &renyi) {
    const Sequence dstar = renyi.d_star();
    const DigitWord rest = concat(w.head, w.fraction);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (lex_compare(Sequence{DigitWord(rest.begin() + static_cast<long>(i), rest.end()), {}}, dstar) > 0) {
            return false;
        }
    }
    if (w.period.empty()) {
        return true;
    }
    const std::size_t p = w.period.size();
    const std::size_t copies = (dstar.prefix.size() + std::lcm(p, std::max<std::size_t>(dstar.period.size(), 1))) / p + 2;
    for (std::size_t r = 0; r < p; ++r) {
        if (lex_compare(Sequence{{}, rotate_left(w.period, r)}, dstar) > 0) {
            return false;
        }
        DigitWord prefix(w.period.begin() + static_cast<long>(r), w.period.end());
        for (std::size_t k = 0; k <= copies; ++k) {
            if (lex_compare(Sequence{concat(prefix, rest), {}}, dstar) > 0) {
                return false;
            }
            prefix = concat(prefix, w.period);
        }
    }
    return true;
}

} // namespace

FiniteWord FiniteWord::from_parts(const DigitWord &integer_part, const DigitWord &fraction) {
    return {concat(integer_part, fraction), integer_part.size()};
}

DigitWord FiniteWord::integer_part() const {
    return DigitWord(digits.begin(), digits.begin() + static_cast<long>(point));
}

DigitWord FiniteWord::fraction_part() const {
    return DigitWord(digits.begin() + static_cast<long>(point), digits.end());
}

bool FiniteWord::is_zero() const { return all_zero(digits); }

bool LeftWord::is_zero() const { return all_zero(period) && all_zero(head) && all_zero(fraction); }

bool Alphabet::contains(const DigitWord &w) const {
    return std::all_of(w.begin(), w.end(), [this](Digit d) { return contains(d); });
}

Alphabet Alphabet::canonical(const PisotSpec &spec) {
    return {0, static_cast<Digit>(spec.floor_beta())};
}

Digit Sequence::at(std::size_t i) const {
    if (i < prefix.size()) {
        return prefix[i];
    }
    if (period.empty()) {
        return 0;
    }
    return period[(i - prefix.size()) % period.size()];
}

int lex_compare(const Sequence &u, const Sequence &v) {
    const std::size_t pu = std::max<std::size_t>(u.period.size(), 1);
    const std::size_t pv = std::max<std::size_t>(v.period.size(), 1);
    const std::size_t n = std::max(u.prefix.size(), v.prefix.size()) + std::lcm(pu, pv);
    for (std::size_t i = 0; i < n; ++i) {
        const Digit a = u.at(i);
        const Digit b = v.at(i);
        if (a != b) {
            return a < b ? -1 : 1;
        }
    }
    return 0;
}

Sequence as_sequence(const RightWord &w) { return {concat(w.integer_part, w.preperiod), w.period}; }

FieldElement pi_beta(const FiniteWord &w, const PisotSpec &spec) {
    FieldElement v = horner(spec, w.digits);
    const std::size_t frac = w.digits.size() - w.point;
    if (frac > 0) {
        v *= FieldElement::beta_power(spec, -static_cast<long long>(frac));
    }
    return v;
}

FieldElement pi_beta(const RightWord &w, const PisotSpec &spec) {
    const long long n = static_cast<long long>(w.preperiod.size());
    FieldElement v = horner(spec, concat(w.integer_part, w.preperiod));
    if (n > 0) {
        v *= FieldElement::beta_power(spec, -n);
    }
    if (!w.period.empty()) {
        const long long p = static_cast<long long>(w.period.size());
        FieldElement block = horner(spec, w.period) * FieldElement::beta_power(spec, -n - p);
        FieldElement ratio = FieldElement::one(spec) - FieldElement::beta_power(spec, -p);
        v += block * invert(ratio);
    }
    return v;
}

FieldElement pi_beta(const LeftWord &w, const PisotSpec &spec) {
    if (!all_zero(w.period)) {
        throw Error(ErrorKind::Divergent, "left-periodic word has no value at beta");
    }
    return pi_beta(FiniteWord::from_parts(w.head, w.fraction), spec);
}

FieldElement pi_alpha(const FiniteWord &w, const PisotSpec &spec) { return pi_beta(w, spec); }

FieldElement pi_alpha(const LeftWord &w, const PisotSpec &spec) {
    FieldElement v = pi_beta(FiniteWord::from_parts(w.head, w.fraction), spec);
    if (!w.period.empty()) {
        const long long p = static_cast<long long>(w.period.size());
        const long long h = static_cast<long long>(w.head.size());
        FieldElement block = horner(spec, w.period) * FieldElement::beta_power(spec, h);
        FieldElement ratio = FieldElement::one(spec) - FieldElement::beta_power(spec, p);
        v += block * invert(ratio);
    }
    return v;
}

DigitWord primitive_root(const DigitWord &w) {
    const std::size_t n = w.size();
    for (std::size_t q = 1; q < n; ++q) {
        if (n % q != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = q; i < n && periodic; ++i) {
            periodic = w[i] == w[i - q];
        }
        if (periodic) {
            return DigitWord(w.begin(), w.begin() + static_cast<long>(q));
        }
    }
    return w;
}

RightWord canonicalize(RightWord w) {
    auto first = std::find_if(w.integer_part.begin(), w.integer_part.end(), [](Digit d) { return d != 0; });
    w.integer_part.erase(w.integer_part.begin(), first);
    if (all_zero(w.period)) {
        w.period.clear();
    }
    w.period = primitive_root(w.period);
    while (!w.period.empty() && !w.preperiod.empty() && w.preperiod.back() == w.period.back()) {
        std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
        w.preperiod.pop_back();
    }
    if (w.period.empty()) {
        while (!w.preperiod.empty() && w.preperiod.back() == 0) {
            w.preperiod.pop_back();
        }
    }
    return w;
}

LeftWord canonicalize(LeftWord w) {
    while (!w.fraction.empty() && w.fraction.back() == 0) {
        w.fraction.pop_back();
    }
    if (all_zero(w.period)) {
        w.period.clear();
    }
    w.period = primitive_root(w.period);
    while (!w.period.empty() && !w.head.empty() && w.head.front() == w.period.front()) {
        std::rotate(w.period.begin(), w.period.begin() + 1, w.period.end());
        w.head.erase(w.head.begin());
    }
    if (w.period.empty()) {
        auto first = std::find_if(w.head.begin(), w.head.end(), [](Digit d) { return d != 0; });
        w.head.erase(w.head.begin(), first);
    }
    return w;
}

bool is_admissible_beta(const RightWord &w, const PisotSpec &spec) {
    return is_admissible_beta(w, cached_renyi(spec));
}

bool is_admissible_beta(const RightWord &w, const RenyiExpansion &renyi) {
    const Digit top = renyi.digits.front();
    const Sequence s = as_sequence(w);
    if (!within(s.prefix, top) || !within(s.period, top)) {
        return false;
    }
    const Sequence dstar = renyi.d_star();
    for (std::size_t i = 0; i < s.prefix.size(); ++i) {
        Sequence tail{DigitWord(s.prefix.begin() + static_cast<long>(i), s.prefix.end()), s.period};
        if (!lex_less(tail, dstar)) {
            return false;
        }
    }
    for (std::size_t r = 0; r < s.period.size(); ++r) {
        if (!lex_less(Sequence{{}, rotate_left(s.period, r)}, dstar)) {
            return false;
        }
    }
    // The all-zero tail is below every d*.
    return true;
}

bool is_weakly_admissible(const LeftWord &w, const PisotSpec &spec) {
    return is_weakly_admissible(w, cached_renyi(spec));
}

bool is_weakly_admissible(const LeftWord &w, const RenyiExpansion &renyi) {
    const Digit top = renyi.digits.front();
    if (!within(w.period, top) || !within(w.head, top) || !within(w.fraction, top)) {
        return false;
    }
    if (!renyi.is_finite()) {
        return tails_at_most_dstar(w, renyi);
    }
    const DigitWord &t = renyi.digits;
    const std::size_t l = t.size();
    DigitWord text;
    if (w.period.empty()) {
        text.assign(l - 1, 0);
    } else {
        const std::size_t p = w.period.size();
        const std::size_t copies = (p + l - 1 + p - 1) / p + 1;
        for (std::size_t k = 0; k < copies; ++k) {
            text = concat(text, w.period);
        }
    }
    text = concat(text, w.head);
    text = concat(text, w.fraction);
    text.insert(text.end(), l - 1, 0);
    return windows_below(text, t);
}

bool is_weakly_admissible_dstar(const LeftWord &w, const PisotSpec &spec) {
    const RenyiExpansion &renyi = cached_renyi(spec);
    const Digit top = renyi.digits.front();
    if (!within(w.period, top) || !within(w.head, top) || !within(w.fraction, top)) {
        return false;
    }
    return tails_at_most_dstar(w, renyi);
}

} // namespace pisot
