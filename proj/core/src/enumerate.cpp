#include <pisot/alpha_adic.hpp>

#include <cmath>
#include <optional>
#include <set>

namespace pisot {

namespace {

// c0 + c1 beta in Z[beta] for beta^2 = a beta + 1.
struct Pair {
    long long c0 = 0;
    long long c1 = 0;

    bool operator==(const Pair &) const = default;
};

class Search {
public:
    Search(long long a, long double beta, std::vector<std::optional<Pair>> targets)
        : a_(a), beta_(beta), targets_(std::move(targets)) {}

    void run(const DigitWord &period, Pair seed, std::size_t head_len, std::size_t fraction_len,
             std::set<LeftWord> &found) {
        if (!targets_[fraction_len]) {
            return;
        }
        period_ = &period;
        head_len_ = head_len;
        target_ = *targets_[fraction_len];
        total_ = head_len + fraction_len;
        digits_.assign(total_, 0);
        found_ = &found;
        // The digit right after ^omega(period) is constrained by the last period
        // digit.
        const Digit before = period.empty() ? 0 : period.back();
        descend(0, seed, before);
    }

private:
    Pair times_beta(Pair x) const { return {x.c1, x.c0 + a_ * x.c1}; }
    long double embed(Pair x) const { return static_cast<long double>(x.c0) + beta_ * static_cast<long double>(x.c1); }

    void descend(std::size_t k, Pair acc, Digit previous) {
        const std::size_t remaining = total_ - k;
        // A weakly admissible word of length r is worth less than beta^r, so the
        // remaining digits must fill target - acc beta^r with a value in
        // [0, beta^r).
        Pair shifted = acc;
        for (std::size_t i = 0; i < remaining; ++i) {
            shifted = times_beta(shifted);
        }
        const long double gap = embed(target_) - embed(shifted);
        const long double room = std::pow(beta_, static_cast<long double>(remaining));
        const long double slack = 1e-6L * (1 + room + std::fabs(embed(target_)));
        if (gap < -slack || gap > room + slack) {
            return;
        }
        if (remaining == 0) {
            if (acc == target_) {
                record();
            }
            return;
        }
        for (Digit d = 0; d <= a_; ++d) {
            if (previous == a_ && d != 0) {
                break;
            }
            if (k == 0 && head_len_ > 0) {
                // Canonical head: no leading zero for finite words, and no digit
                // that the period would absorb.
                if (period_->empty() ? d == 0 : d == period_->front()) {
                    continue;
                }
            }
            if (k + 1 == total_ && total_ > head_len_ && d == 0) {
                continue;
            }
            digits_[k] = d;
            Pair next = times_beta(acc);
            next.c0 += d;
            descend(k + 1, next, d);
        }
    }

    void record() {
        LeftWord w;
        w.period = *period_;
        w.head.assign(digits_.begin(), digits_.begin() + static_cast<long>(head_len_));
        w.fraction.assign(digits_.begin() + static_cast<long>(head_len_), digits_.end());
        found_->insert(w);
    }

    long long a_;
    long double beta_;
    std::vector<std::optional<Pair>> targets_;
    const DigitWord *period_ = nullptr;
    std::size_t head_len_ = 0;
    std::size_t total_ = 0;
    Pair target_;
    DigitWord digits_;
    std::set<LeftWord> *found_ = nullptr;
};

std::optional<Pair> to_pair(const FieldElement &x) {
    if (!x.has_integer_coords()) {
        return std::nullopt;
    }
    const auto &c = x.coords();
    if (!c[0].get_num().fits_slong_p() || !c[1].get_num().fits_slong_p()) {
        throw Error(ErrorKind::OutOfRange, "target too large for the enumeration search");
    }
    return Pair{c[0].get_num().get_si(), c[1].get_num().get_si()};
}

} // namespace

ExpansionSet enumerate_expansions(const FieldElement &x, std::size_t head_bound, std::size_t fraction_bound) {
    const PisotSpec &spec = x.spec();
    const long long a = spec.quadratic_a();
    const Digit ad = static_cast<Digit>(a);
    const RationalInterval &iv = spec.beta_interval();
    const long double beta = static_cast<long double>(Rational((iv.lo + iv.hi) / 2).get_d());

    const long double growth = std::pow(beta, static_cast<long double>(head_bound + fraction_bound + 2));
    const long double size = std::fabs(x.coords()[0].get_d()) + std::fabs(x.coords()[1].get_d()) + 1;
    if (growth * size > 1e15L) {
        throw Error(ErrorKind::OutOfRange, "search bounds too large for exact 64-bit evaluation");
    }

    // target * beta^f for every fraction length f.
    std::vector<std::optional<Pair>> targets;
    FieldElement scaled = x;
    for (std::size_t f = 0; f <= fraction_bound; ++f) {
        targets.push_back(to_pair(scaled));
        scaled = scaled.times_beta();
    }

    ExpansionSet set{x, {}, head_bound, fraction_bound, {{}, {ad, 0}, {0, ad}}, !x.has_integer_coords()};
    // ^omega(a0) ending at position h is worth -beta^h and ^omega(0a) is worth
    // -beta^{h-1}; starting Horner from these seeds folds the period in.
    const std::vector<std::pair<DigitWord, Pair>> periods = {
        {{}, {0, 0}},
        {{ad, 0}, {-1, 0}},
        {{0, ad}, {a, -1}},
    };
    std::set<LeftWord> found;
    Search search(a, beta, targets);
    for (const auto &[period, seed] : periods) {
        for (std::size_t h = 0; h <= head_bound; ++h) {
            for (std::size_t f = 0; f <= fraction_bound; ++f) {
                search.run(period, seed, h, f, found);
            }
        }
    }
    set.expansions.assign(found.begin(), found.end());
    return set;
}

} // namespace pisot
