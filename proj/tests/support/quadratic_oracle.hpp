#pragma once

// Exact arithmetic in Q(sqrt D) written as p + r sqrt(D), kept apart from the
// power-basis arithmetic of the library so the two can check each other.

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Quad {
    mpq_class p = 0;
    mpq_class r = 0;
    long D = 5;

    Quad operator+(const Quad &o) const { return {p + o.p, r + o.r, D}; }
    Quad operator-(const Quad &o) const { return {p - o.p, r - o.r, D}; }
    Quad operator-() const { return {-p, -r, D}; }
    Quad operator*(const Quad &o) const { return {p * o.p + r * o.r * D, p * o.r + r * o.p, D}; }
    Quad conj() const { return {p, -r, D}; }
    Quad inverse() const {
        const mpq_class n = p * p - r * r * D;
        return {p / n, -r / n, D};
    }
    bool operator==(const Quad &o) const { return p == o.p && r == o.r; }
};

inline Quad rational(const mpq_class &q, long D) { return {q, 0, D}; }

// Sign of p + r sqrt(D) by squaring.
inline int sign(const Quad &x) {
    const int sp = sgn(x.p);
    const int sr = sgn(x.r);
    if (sp >= 0 && sr >= 0) {
        return (sp | sr) ? 1 : 0;
    }
    if (sp <= 0 && sr <= 0) {
        return -1;
    }
    const mpq_class lhs = x.p * x.p;
    const mpq_class rhs = x.r * x.r * x.D;
    if (lhs == rhs) {
        return 0;
    }
    return (lhs > rhs) == (sp > 0) ? 1 : -1;
}

inline mpz_class floor(const Quad &x) {
    // Start from a double estimate and correct exactly.
    mpz_class n = mpz_class(static_cast<long>(std::floor(x.p.get_d() + x.r.get_d() * std::sqrt(double(x.D)))));
    while (sign(x - rational(mpq_class(n), x.D)) < 0) {
        --n;
    }
    while (sign(x - rational(mpq_class(n + 1), x.D)) >= 0) {
        ++n;
    }
    return n;
}

// Root of x^2 - a1 x - a0 above 1: (a1 + sqrt(a1^2 + 4 a0)) / 2.
struct QuadraticBase {
    long a0;
    long a1;
    long D;
    Quad beta;
    Quad alpha;

    QuadraticBase(long a0_, long a1_) : a0(a0_), a1(a1_), D(a1_ * a1_ + 4 * a0_) {
        mpq_class half_a1(a1, 2);
        half_a1.canonicalize();
        beta = {half_a1, mpq_class(1, 2), D};
        alpha = beta.conj();
    }

    Quad embed(const mpq_class &c0, const mpq_class &c1) const { return rational(c0, D) + rational(c1, D) * beta; }

    // Greedy expansion of x >= 0: integer digits then fraction digits, with
    // the fraction's eventual period detected on remainders.
    struct Greedy {
        std::vector<int> integer_part;
        std::vector<int> preperiod;
        std::vector<int> period;
    };

    Greedy greedy(const Quad &x, std::size_t max_steps = 20000) const {
        Greedy g;
        int k = 0;
        Quad power = rational(1, D);
        while (sign(power * beta - x) <= 0) {
            power = power * beta;
            ++k;
        }
        Quad rem = x * power.inverse();
        // rem in [0, beta): digits for positions k, k-1, ..., 0
        std::vector<int> digits;
        for (int pos = k; pos >= 0; --pos) {
            const mpz_class d = floor(rem);
            digits.push_back(static_cast<int>(d.get_si()));
            rem = (rem - rational(mpq_class(d), D)) * beta;
        }
        const bool positive = sign(x) > 0;
        std::size_t lead = 0;
        while (lead < digits.size() && digits[lead] == 0) {
            ++lead;
        }
        if (positive) {
            g.integer_part.assign(digits.begin() + static_cast<long>(lead), digits.end());
        }
        std::map<std::pair<mpq_class, mpq_class>, std::size_t> seen;
        std::vector<int> frac;
        for (std::size_t step = 0; step < max_steps; ++step) {
            if (sign(rem) == 0) {
                g.preperiod = frac;
                return g;
            }
            auto [it, inserted] = seen.emplace(std::make_pair(rem.p, rem.r), frac.size());
            if (!inserted) {
                g.preperiod.assign(frac.begin(), frac.begin() + static_cast<long>(it->second));
                g.period.assign(frac.begin() + static_cast<long>(it->second), frac.end());
                return g;
            }
            const mpz_class d = floor(rem);
            frac.push_back(static_cast<int>(d.get_si()));
            rem = (rem - rational(mpq_class(d), D)) * beta;
        }
        throw std::runtime_error("oracle greedy did not close");
    }

    // Value at alpha of ^omega(P) H . F.
    Quad left_value(const std::vector<int> &period, const std::vector<int> &head,
                    const std::vector<int> &fraction) const {
        Quad acc = rational(0, D);
        for (int d : head) {
            acc = acc * alpha + rational(d, D);
        }
        Quad apow = rational(1, D);
        for (std::size_t i = 0; i < head.size(); ++i) {
            apow = apow * alpha;
        }
        Quad neg = rational(1, D);
        const Quad ainv = alpha.inverse();
        for (int d : fraction) {
            neg = neg * ainv;
            acc = acc + rational(d, D) * neg;
        }
        if (!period.empty()) {
            Quad block = rational(0, D);
            Quad ap = rational(1, D);
            for (int d : period) {
                block = block * alpha + rational(d, D);
                ap = ap * alpha;
            }
            // sum_{k>=0} block alpha^{h + k p}
            acc = acc + block * apow * (rational(1, D) - ap).inverse();
        }
        return acc;
    }
};

} // namespace oracle
