#include "spec_data.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <cstdlib>

namespace pisot::detail {

namespace {

struct QComplex {
    Rational re;
    Rational im;
};

QComplex operator-(const QComplex &x, const QComplex &y) { return {x.re - y.re, x.im - y.im}; }
QComplex operator*(const QComplex &x, const QComplex &y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Rational norm2(const QComplex &x) { return x.re * x.re + x.im * x.im; }
QComplex operator/(const QComplex &x, const QComplex &y) {
    Rational n = norm2(y);
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

QComplex eval(const std::vector<Integer> &poly, const QComplex &z) {
    QComplex acc{Rational(poly.back()), Rational(0)};
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
        acc = acc * z;
        acc.re += poly[i];
    }
    return acc;
}

std::vector<Integer> derivative(const std::vector<Integer> &poly) {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        d.push_back(poly[i] * static_cast<unsigned long>(i));
    }
    return d;
}

Rational round_dyadic(const Rational &x, unsigned bits) {
    Integer scaled = x.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    Rational r(q);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

// Dyadic upper bound of sqrt(x) with `bits` fractional bits.
Rational sqrt_upper(const Rational &x, unsigned bits) {
    Integer num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Integer s;
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    s += 1;
    Rational r(s);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

// Newton inclusion radius: some root lies within n |p(z)| / |p'(z)| of z.
Rational inclusion_radius(const std::vector<Integer> &poly, const QComplex &z, unsigned bits) {
    QComplex pz = eval(poly, z);
    QComplex dz = eval(derivative(poly), z);
    Rational d2 = norm2(dz);
    if (d2 == 0) {
        return Rational(1000000);
    }
    Rational n(static_cast<long>(poly.size() - 1));
    Rational r2 = n * n * norm2(pz) / d2;
    if (r2 == 0) {
        return Rational(0);
    }
    return sqrt_upper(r2, bits);
}

RootRegion complex_region(const std::vector<Integer> &poly, QComplex centre, unsigned bits) {
    RootRegion region;
    region.real = false;
    region.centre_re = centre.re;
    region.centre_im = centre.im;
    region.radius = inclusion_radius(poly, centre, bits);
    return region;
}

QComplex newton_step(const std::vector<Integer> &poly, const std::vector<Integer> &dpoly,
                     const QComplex &z, unsigned bits) {
    QComplex step = eval(poly, z) / eval(dpoly, z);
    QComplex next = z - step;
    return {round_dyadic(next.re, bits), round_dyadic(next.im, bits)};
}

bool boxes_disjoint(const ComplexBox &a, const ComplexBox &b) {
    return a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo;
}

std::vector<std::complex<long double>> durand_kerner(const std::vector<Integer> &poly) {
    const std::size_t n = poly.size() - 1;
    std::vector<long double> c(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        c[i] = static_cast<long double>(poly[i].get_d());
    }
    auto p = [&](std::complex<long double> z) {
        std::complex<long double> acc = c[n];
        for (std::size_t i = n; i-- > 0;) {
            acc = acc * z + c[i];
        }
        return acc;
    };
    long double bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bound = std::max(bound, std::fabs(c[i]));
    }
    bound += 1;
    std::vector<std::complex<long double>> z(n);
    const std::complex<long double> seed(0.4L, 0.9L);
    std::complex<long double> w(1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = w * (bound / 2);
        w *= seed;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<long double> denom(1, 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    denom *= (z[k] - z[j]);
                }
            }
            std::complex<long double> delta = p(z[k]) / denom;
            z[k] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-30L) {
            break;
        }
    }
    return z;
}

std::optional<RationalInterval> bracket_real(const std::vector<Integer> &poly, long double approx) {
    Rational centre = round_dyadic(Rational(static_cast<double>(approx)), 60);
    Rational delta(1, 1u << 20);
    for (int attempt = 0; attempt < 12; ++attempt) {
        Rational lo = centre - delta;
        Rational hi = centre + delta;
        int slo = sign_at(poly, lo);
        int shi = sign_at(poly, hi);
        if (slo * shi < 0) {
            return RationalInterval{lo, hi};
        }
        delta *= 4;
    }
    return std::nullopt;
}

RationalInterval bisect(const std::vector<Integer> &poly, RationalInterval iv, const Rational &width) {
    int slo = sign_at(poly, iv.lo);
    while (iv.width() > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sign_at(poly, mid);
        if (sm == 0) {
            return {mid, mid};
        }
        if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

} // namespace

ComplexBox RootRegion::box() const {
    if (real) {
        return {interval, {Rational(0), Rational(0)}};
    }
    return {{centre_re - radius, centre_re + radius}, {centre_im - radius, centre_im + radius}};
}

int sign_at(const std::vector<Integer> &poly, const Rational &x) {
    Rational acc(poly.back());
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
        acc = acc * x + poly[i];
    }
    return sgn(acc);
}

bool has_rational_root(const std::vector<Integer> &poly) {
    // Monic integer polynomial: rational roots are integer divisors of p_0.
    if (poly[0] == 0) {
        return true;
    }
    Integer c = abs(poly[0]);
    for (Integer k = 1; k * k <= c; ++k) {
        if (c % k != 0) {
            continue;
        }
        for (const Integer &cand : {Integer(k), Integer(c / k)}) {
            if (sign_at(poly, Rational(cand)) == 0 || sign_at(poly, Rational(-cand)) == 0) {
                return true;
            }
        }
    }
    return false;
}

bool has_quadratic_factor(const std::vector<Integer> &poly) {
    if (poly.size() != 5) {
        return false;
    }
    // (x^2 + b x + c)(x^2 + e x + f)
    Integer bound = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        bound = std::max(bound, Integer(abs(poly[i])));
    }
    bound += 1;
    const Integer c0 = poly[0];
    const Integer c_abs = abs(c0);
    for (Integer k = 1; k <= c_abs; ++k) {
        if (c_abs % k != 0) {
            continue;
        }
        for (int s : {1, -1}) {
            Integer c = k * s;
            Integer f = c0 / c;
            for (Integer b = -2 * bound; b <= 2 * bound; ++b) {
                Integer e = poly[3] - b;
                if (c + f + b * e == poly[2] && b * f + c * e == poly[1]) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool is_reciprocal(const std::vector<Integer> &poly) {
    const std::size_t n = poly.size() - 1;
    bool plus = true;
    bool minus = true;
    for (std::size_t i = 0; i <= n; ++i) {
        plus = plus && poly[i] == poly[n - i];
        minus = minus && poly[i] == -poly[n - i];
    }
    return plus || minus;
}

int unit_disk_side(const RootRegion &region) {
    if (region.real) {
        const Rational &lo = region.interval.lo;
        const Rational &hi = region.interval.hi;
        if (lo > -1 && hi < 1) {
            return -1;
        }
        if (lo > 1 || hi < -1) {
            return 1;
        }
        return 0;
    }
    if (region.radius >= 1) {
        return 0;
    }
    Rational c2 = region.centre_re * region.centre_re + region.centre_im * region.centre_im;
    Rational inner = 1 - region.radius;
    Rational outer = 1 + region.radius;
    if (c2 < inner * inner) {
        return -1;
    }
    if (c2 > outer * outer) {
        return 1;
    }
    return 0;
}

std::vector<RootRegion> isolate_roots(const std::vector<Integer> &poly) {
    const auto numeric = durand_kerner(poly);
    const auto dpoly = derivative(poly);

    for (unsigned bits = 48; bits <= 1024; bits *= 2) {
        std::vector<RootRegion> real_regions;
        std::vector<RootRegion> complex_regions;
        bool failed = false;
        std::size_t lower_half = 0;
        for (const auto &z : numeric) {
            const long double scale = std::max<long double>(1, std::abs(z));
            if (std::fabs(z.imag()) < 1e-12L * scale) {
                auto iv = bracket_real(poly, z.real());
                if (!iv) {
                    failed = true;
                    break;
                }
                RootRegion r;
                r.real = true;
                r.interval = bisect(poly, *iv, Rational(1, 1u << 30));
                real_regions.push_back(r);
            } else if (z.imag() > 0) {
                QComplex c{round_dyadic(Rational(static_cast<double>(z.real())), bits),
                           round_dyadic(Rational(static_cast<double>(z.imag())), bits)};
                for (int k = 0; k < 4; ++k) {
                    c = newton_step(poly, dpoly, c, bits);
                }
                complex_regions.push_back(complex_region(poly, c, bits));
            } else {
                ++lower_half;
            }
        }
        if (failed || lower_half != complex_regions.size()) {
            continue;
        }
        std::sort(real_regions.begin(), real_regions.end(),
                  [](const RootRegion &a, const RootRegion &b) { return a.interval.lo < b.interval.lo; });
        std::vector<RootRegion> regions = real_regions;
        for (const auto &r : complex_regions) {
            regions.push_back(r);
            RootRegion mirror = r;
            mirror.centre_im = -r.centre_im;
            regions.push_back(mirror);
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < regions.size() && disjoint; ++i) {
            for (std::size_t j = i + 1; j < regions.size(); ++j) {
                if (!boxes_disjoint(regions[i].box(), regions[j].box())) {
                    disjoint = false;
                    break;
                }
            }
        }
        if (disjoint && regions.size() == poly.size() - 1) {
            return regions;
        }
    }
    throw Error(ErrorKind::NotPisot, "root isolation did not converge");
}

RootRegion refine_region(const std::vector<Integer> &poly, const RootRegion &region,
                         const Rational &width) {
    if (region.real) {
        RootRegion out = region;
        out.interval = bisect(poly, region.interval, width);
        return out;
    }
    const auto dpoly = derivative(poly);
    QComplex c{region.centre_re, region.centre_im};
    Rational target = width / 2;
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        for (int k = 0; k < 3; ++k) {
            c = newton_step(poly, dpoly, c, bits);
        }
        RootRegion next = complex_region(poly, c, bits);
        QComplex shift{next.centre_re - region.centre_re, next.centre_im - region.centre_im};
        // The new disk must sit inside the old one so that it holds the same root.
        Rational room = region.radius - next.radius;
        bool inside = room >= 0 && norm2(shift) <= room * room;
        if (inside && next.radius <= target) {
            return next;
        }
    }
    throw Error(ErrorKind::NotPisot, "complex root refinement did not converge");
}

BetaBracket initial_bracket(const std::vector<Integer> &poly) {
    Integer bound = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        bound = std::max(bound, Integer(abs(poly[i])));
    }
    BetaBracket b;
    b.scale = 0;
    b.lo = 1;
    b.hi = bound + 1;
    return b;
}

BetaBracket refine_bracket(const std::vector<Integer> &poly, const BetaBracket &from,
                           unsigned target_scale) {
    const std::size_t d = poly.size() - 1;
    BetaBracket b = from;
    Integer value;
    Integer term;
    Integer power;
    while (b.scale < target_scale) {
        b.scale += 1;
        b.lo *= 2;
        b.hi *= 2;
        Integer mid = (b.lo + b.hi) / 2;
        // 2^{scale d} M(mid / 2^scale) = sum p_i mid^i 2^{scale (d - i)}
        value = 0;
        power = 1;
        for (std::size_t i = 0; i <= d; ++i) {
            term = poly[i] * power;
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), b.scale * (d - i));
            value += term;
            power *= mid;
        }
        if (value > 0) {
            b.hi = mid;
        } else {
            b.lo = mid;
        }
    }
    b.lo_pow.assign(d, Integer(1));
    b.hi_pow.assign(d, Integer(1));
    for (std::size_t i = 1; i < d; ++i) {
        b.lo_pow[i] = b.lo_pow[i - 1] * b.lo;
        b.hi_pow[i] = b.hi_pow[i - 1] * b.hi;
    }
    return b;
}

} // namespace pisot::detail
