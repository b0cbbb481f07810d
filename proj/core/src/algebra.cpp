#include "spec_data.hpp"

#include <pisot/algebra.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace pisot {

namespace {

using detail::BetaBracket;
using detail::RootRegion;
using detail::SpecData;

constexpr unsigned kBracketScales[] = {64, 128, 256, 512, 1024};

Integer eval_integer(const std::vector<Integer> &poly, long x) {
    Integer acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x + poly[i];
    }
    return acc;
}

void certify_conjugates(SpecData &data) {
    auto regions = detail::isolate_roots(data.poly);
    // beta is the largest real root; every other root must lie strictly inside
    // the unit disk.
    std::size_t beta_at = regions.size();
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i].real) {
            beta_at = i;
        }
    }
    if (beta_at == regions.size()) {
        throw Error(ErrorKind::NotPisot, "no real root");
    }
    Rational width(1, 1024);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (i == beta_at) {
            continue;
        }
        RootRegion region = regions[i];
        int side = detail::unit_disk_side(region);
        for (int round = 0; side == 0 && round < 24; ++round) {
            width /= 16;
            region = detail::refine_region(data.poly, region, width);
            side = detail::unit_disk_side(region);
        }
        if (side >= 0) {
            throw Error(ErrorKind::NotPisot, "conjugate of modulus >= 1");
        }
        region = detail::refine_region(data.poly, region, Rational(1, 1u << 30));
        data.conjugates.push_back(region);
    }
    // Complex pairs were emitted as (upper, mirror); keep that order and put
    // real conjugates first.
    std::stable_partition(data.conjugates.begin(), data.conjugates.end(),
                          [](const RootRegion &r) { return r.real; });
    for (const auto &r : data.conjugates) {
        data.conjugate_boxes.push_back(r.box());
    }
}

BetaBracket bracket_at_least(const SpecData &data, unsigned bits) {
    for (const auto &b : data.brackets) {
        if (b.scale >= bits) {
            return b;
        }
    }
    return detail::refine_bracket(data.poly, data.brackets.back(), bits);
}

// x = (sum n_i beta^i) / den with integer n_i.
struct ScaledElement {
    std::vector<Integer> num;
    Integer den;
};

ScaledElement scale_to_integers(const FieldElement &x) {
    ScaledElement s;
    s.den = x.denominator();
    for (const auto &c : x.coords()) {
        Rational t = c * s.den;
        s.num.push_back(t.get_num());
    }
    return s;
}

// Bounds on 2^{scale (d-1)} sum n_i beta^i from the bracket.
void evaluate_bracket(const ScaledElement &s, const BetaBracket &b, Integer &lo, Integer &hi) {
    const std::size_t d = s.num.size();
    lo = 0;
    hi = 0;
    Integer term;
    for (std::size_t i = 0; i < d; ++i) {
        if (s.num[i] == 0) {
            continue;
        }
        const unsigned shift = b.scale * static_cast<unsigned>(d - 1 - i);
        const bool positive = s.num[i] > 0;
        term = s.num[i] * (positive ? b.lo_pow[i] : b.hi_pow[i]);
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), shift);
        lo += term;
        term = s.num[i] * (positive ? b.hi_pow[i] : b.lo_pow[i]);
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), shift);
        hi += term;
    }
}

template <typename Decide>
auto refine_until(const FieldElement &x, Decide decide) {
    const SpecData &data = x.spec().data();
    const ScaledElement s = scale_to_integers(x);
    Integer lo;
    Integer hi;
    for (const auto &b : data.brackets) {
        evaluate_bracket(s, b, lo, hi);
        if (auto r = decide(s, b, lo, hi)) {
            return *r;
        }
    }
    BetaBracket b = data.brackets.back();
    for (;;) {
        b = detail::refine_bracket(data.poly, b, b.scale * 2);
        evaluate_bracket(s, b, lo, hi);
        if (auto r = decide(s, b, lo, hi)) {
            return *r;
        }
    }
}

using Poly = std::vector<Rational>;

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

void poly_divmod(const Poly &num, const Poly &den, Poly &q, Poly &r) {
    r = num;
    trim(r);
    q.assign(r.size() >= den.size() ? r.size() - den.size() + 1 : 0, Rational(0));
    while (r.size() >= den.size() && !r.empty()) {
        const std::size_t shift = r.size() - den.size();
        Rational c = r.back() / den.back();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            r[shift + i] -= c * den[i];
        }
        trim(r);
    }
}

Poly poly_mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly poly_sub(Poly a, const Poly &b) {
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Reduces a polynomial in beta of any degree using beta^d = sum a_i beta^i.
std::vector<Rational> reduce(std::vector<Rational> p, const std::vector<long long> &coeffs) {
    const std::size_t d = coeffs.size();
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) {
            continue;
        }
        const Rational c = p[k];
        for (std::size_t i = 0; i < d; ++i) {
            if (coeffs[i] != 0) {
                p[k - d + i] += c * static_cast<long>(coeffs[i]);
            }
        }
    }
    p.resize(d, Rational(0));
    return p;
}

std::string poly_term(long long c, std::size_t power) {
    std::string t = c == 1 && power > 0 ? "" : std::to_string(c);
    if (power > 0) {
        t += power == 1 ? "x" : "x^" + std::to_string(power);
    }
    return t;
}

} // namespace

std::ostream &operator<<(std::ostream &os, const RationalInterval &iv) {
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

std::ostream &operator<<(std::ostream &os, const ComplexBox &box) {
    if (box.is_real()) {
        return os << box.re;
    }
    return os << box.re << " + i" << box.im;
}

std::string_view to_string(FinitenessCondition condition) noexcept {
    switch (condition) {
    case FinitenessCondition::DecreasingCoeffs:
        return "DecreasingCoeffs";
    case FinitenessCondition::DominantLead:
        return "DominantLead";
    case FinitenessCondition::CubicUnit:
        return "CubicUnit";
    case FinitenessCondition::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

PisotSpec PisotSpec::make(std::vector<long long> coeffs, SpecOptions options) {
    const std::size_t d = coeffs.size();
    if (d == 0) {
        throw Error(ErrorKind::UnsupportedDegree, "empty coefficient list");
    }
    if (d == 1) {
        throw Error(ErrorKind::UnsupportedDegree, "degree 1 has no conjugate to serve as alpha");
    }
    auto data = std::make_shared<SpecData>();
    data->coeffs = coeffs;
    data->degree = d;
    data->poly.resize(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        data->poly[i] = static_cast<long>(-coeffs[i]);
    }
    data->poly[d] = 1;

    if (detail::has_rational_root(data->poly)) {
        throw Error(ErrorKind::Reducible, "polynomial has a rational root");
    }
    if (d == 4 && detail::has_quadratic_factor(data->poly)) {
        throw Error(ErrorKind::Reducible, "polynomial splits into two integer quadratics");
    }
    if (d >= 5 && !options.assume_irreducible) {
        throw Error(ErrorKind::UnsupportedDegree,
                    "irreducibility of degree >= 5 is not certified without an explicit override");
    }
    if (eval_integer(data->poly, 1) >= 0) {
        throw Error(ErrorKind::NotPisot, "no real root > 1 isolated by M(1) < 0");
    }
    if (d >= 3 && detail::is_reciprocal(data->poly)) {
        throw Error(ErrorKind::NotPisot, "reciprocal polynomial has a root of modulus >= 1");
    }
    if (d == 2) {
        // Both roots real; the second lies in (-1, 1) iff M(-1) > 0 as well.
        if (eval_integer(data->poly, -1) <= 0) {
            throw Error(ErrorKind::NotPisot, "conjugate of modulus >= 1");
        }
    }
    certify_conjugates(*data);
    if (options.alpha_index >= data->conjugates.size()) {
        throw Error(ErrorKind::OutOfRange, "alpha_index exceeds the number of conjugates");
    }
    data->alpha_index = options.alpha_index;
    data->unit = coeffs[0] == 1 || coeffs[0] == -1;

    BetaBracket b = detail::initial_bracket(data->poly);
    for (unsigned scale : kBracketScales) {
        b = detail::refine_bracket(data->poly, b, scale);
        data->brackets.push_back(b);
    }
    const BetaBracket &first = data->brackets.front();
    data->beta_interval.lo = Rational(first.lo);
    data->beta_interval.hi = Rational(first.hi);
    mpq_div_2exp(data->beta_interval.lo.get_mpq_t(), data->beta_interval.lo.get_mpq_t(), first.scale);
    mpq_div_2exp(data->beta_interval.hi.get_mpq_t(), data->beta_interval.hi.get_mpq_t(), first.scale);

    // beta^{-1} = (beta^{d-1} - a_{d-1} beta^{d-2} - ... - a_1) / a_0
    data->inverse_beta.assign(d, Rational(0));
    const Rational a0(static_cast<long>(coeffs[0]));
    for (std::size_t i = 1; i < d; ++i) {
        data->inverse_beta[i - 1] = Rational(static_cast<long>(-coeffs[i])) / a0;
    }
    data->inverse_beta[d - 1] += Rational(1) / a0;

    SpecData *raw = data.get();
    PisotSpec spec(std::move(data));
    raw->floor_beta = floor_at_beta(FieldElement::beta(spec)).get_si();
    return spec;
}

std::size_t PisotSpec::degree() const { return data_->degree; }
const std::vector<long long> &PisotSpec::coeffs() const { return data_->coeffs; }
const std::vector<Integer> &PisotSpec::polynomial() const { return data_->poly; }
const RationalInterval &PisotSpec::beta_interval() const { return data_->beta_interval; }
const std::vector<ComplexBox> &PisotSpec::conjugate_regions() const { return data_->conjugate_boxes; }
std::size_t PisotSpec::alpha_index() const { return data_->alpha_index; }
const ComplexBox &PisotSpec::alpha_region() const { return data_->conjugate_boxes[data_->alpha_index]; }
long long PisotSpec::floor_beta() const { return data_->floor_beta; }
bool PisotSpec::is_unit() const { return data_->unit; }

bool PisotSpec::is_quadratic_unit() const {
    return data_->degree == 2 && data_->coeffs[0] == 1 && data_->coeffs[1] >= 1;
}

long long PisotSpec::quadratic_a() const {
    if (!is_quadratic_unit()) {
        throw Error(ErrorKind::UnsupportedSpec, "requires a quadratic unit x^2 - a x - 1");
    }
    return data_->coeffs[1];
}

std::string PisotSpec::describe() const {
    const std::size_t d = data_->degree;
    std::string out = poly_term(1, d);
    for (std::size_t i = d; i-- > 0;) {
        const long long c = data_->coeffs[i];
        if (c == 0) {
            continue;
        }
        out += c > 0 ? " - " : " + ";
        out += poly_term(c > 0 ? c : -c, i);
    }
    return out;
}

bool PisotSpec::operator==(const PisotSpec &other) const {
    return data_ == other.data_ ||
           (data_->coeffs == other.data_->coeffs && data_->alpha_index == other.data_->alpha_index);
}

FieldElement::FieldElement(const PisotSpec &spec)
    : spec_(spec), coords_(spec.degree(), Rational(0)) {}

FieldElement::FieldElement(const PisotSpec &spec, const Rational &value) : FieldElement(spec) {
    coords_[0] = value;
}

FieldElement::FieldElement(const PisotSpec &spec, std::vector<Rational> coords)
    : spec_(spec), coords_(std::move(coords)) {
    if (coords_.size() > spec_.degree()) {
        coords_ = reduce(std::move(coords_), spec_.coeffs());
    }
    coords_.resize(spec_.degree(), Rational(0));
    for (auto &c : coords_) {
        c.canonicalize();
    }
}

FieldElement FieldElement::beta(const PisotSpec &spec) {
    FieldElement x(spec);
    if (spec.degree() > 1) {
        x.coords_[1] = 1;
    }
    return x;
}

FieldElement FieldElement::beta_power(const PisotSpec &spec, long long n) {
    if (n >= 0) {
        return pow(beta(spec), n);
    }
    return pow(FieldElement(spec, spec.data().inverse_beta), -n);
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational &c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational &c) { return c == 0; });
}

bool FieldElement::has_integer_coords() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational &c) { return c.get_den() == 1; });
}

Integer FieldElement::denominator() const {
    Integer l = 1;
    for (const auto &c : coords_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return l;
}

FieldElement FieldElement::times_beta() const {
    std::vector<Rational> shifted(coords_.size() + 1, Rational(0));
    std::copy(coords_.begin(), coords_.end(), shifted.begin() + 1);
    FieldElement out(spec_);
    out.coords_ = reduce(std::move(shifted), spec_.coeffs());
    return out;
}

void FieldElement::require_same_spec(const FieldElement &other) const {
    if (!(spec_ == other.spec_)) {
        throw Error(ErrorKind::SpecMismatch, "operands belong to different specs");
    }
}

FieldElement &FieldElement::operator+=(const FieldElement &other) {
    require_same_spec(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &other) {
    require_same_spec(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

FieldElement &FieldElement::operator*=(const FieldElement &other) {
    require_same_spec(other);
    coords_ = reduce(poly_mul(coords_, other.coords_), spec_.coeffs());
    return *this;
}

FieldElement &FieldElement::operator*=(const Rational &scalar) {
    for (auto &c : coords_) {
        c *= scalar;
    }
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto &c : out.coords_) {
        c = -c;
    }
    return out;
}

bool FieldElement::operator==(const FieldElement &other) const {
    return spec_ == other.spec_ && coords_ == other.coords_;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        os << (i ? ", " : "") << coords_[i];
    }
    os << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const FieldElement &x) { return os << x.to_string(); }

FieldElement invert(const FieldElement &x) {
    if (x.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    const PisotSpec &spec = x.spec();
    Poly r0;
    for (const auto &p : spec.polynomial()) {
        r0.emplace_back(p);
    }
    Poly r1 = x.coords();
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    Poly q;
    Poly r;
    while (!r1.empty()) {
        poly_divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly next = poly_sub(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant since M is irreducible.
    const Rational g = r0[0];
    for (auto &c : s0) {
        c /= g;
    }
    return FieldElement(spec, reduce(s0, spec.coeffs()));
}

FieldElement pow(const FieldElement &x, long long n) {
    if (n < 0) {
        return pow(invert(x), -n);
    }
    FieldElement result = FieldElement::one(x.spec());
    FieldElement base = x;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

int sign(const FieldElement &x) {
    if (x.is_zero()) {
        return 0;
    }
    if (x.is_rational()) {
        return sgn(x.coords()[0]);
    }
    return refine_until(x, [](const ScaledElement &, const BetaBracket &, const Integer &lo,
                              const Integer &hi) -> std::optional<int> {
        if (lo > 0) {
            return 1;
        }
        if (hi < 0) {
            return -1;
        }
        return std::nullopt;
    });
}

int compare(const FieldElement &x, const FieldElement &y) { return sign(x - y); }

Integer floor_at_beta(const FieldElement &x) {
    if (x.is_rational()) {
        const Rational &c = x.coords()[0];
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        return q;
    }
    const std::size_t d = x.spec().degree();
    return refine_until(x, [d](const ScaledElement &s, const BetaBracket &b, const Integer &lo,
                               const Integer &hi) -> std::optional<Integer> {
        Integer denom = s.den;
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), b.scale * static_cast<unsigned>(d - 1));
        Integer flo;
        Integer fhi;
        mpz_fdiv_q(flo.get_mpz_t(), lo.get_mpz_t(), denom.get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), hi.get_mpz_t(), denom.get_mpz_t());
        if (flo == fhi) {
            return flo;
        }
        return std::nullopt;
    });
}

RationalInterval enclose_at_beta(const FieldElement &x, unsigned bits) {
    if (x.is_rational()) {
        return {x.coords()[0], x.coords()[0]};
    }
    const SpecData &data = x.spec().data();
    const ScaledElement s = scale_to_integers(x);
    const BetaBracket b = bracket_at_least(data, bits);
    Integer lo;
    Integer hi;
    evaluate_bracket(s, b, lo, hi);
    Integer denom = s.den;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), b.scale * static_cast<unsigned>(s.num.size() - 1));
    return {Rational(lo, denom), Rational(hi, denom)};
}

namespace {

RationalInterval iv_add(const RationalInterval &a, const RationalInterval &b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval iv_sub(const RationalInterval &a, const RationalInterval &b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval iv_mul(const RationalInterval &a, const RationalInterval &b) {
    Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

ComplexBox horner(const std::vector<Rational> &coords, const ComplexBox &z) {
    ComplexBox acc{{coords.back(), coords.back()}, {Rational(0), Rational(0)}};
    for (std::size_t i = coords.size() - 1; i-- > 0;) {
        ComplexBox next;
        next.re = iv_sub(iv_mul(acc.re, z.re), iv_mul(acc.im, z.im));
        next.im = iv_add(iv_mul(acc.re, z.im), iv_mul(acc.im, z.re));
        next.re.lo += coords[i];
        next.re.hi += coords[i];
        acc = next;
    }
    return acc;
}

} // namespace

ComplexBox conjugate_value(const FieldElement &x, const Rational &width) {
    return conjugate_value(x, width, x.spec().alpha_index());
}

ComplexBox conjugate_value(const FieldElement &x, const Rational &width, std::size_t conjugate_index) {
    const SpecData &data = x.spec().data();
    if (conjugate_index >= data.conjugates.size()) {
        throw Error(ErrorKind::OutOfRange, "conjugate index out of range");
    }
    if (x.is_rational()) {
        const Rational &c = x.coords()[0];
        return {{c, c}, {Rational(0), Rational(0)}};
    }
    RootRegion region = data.conjugates[conjugate_index];
    Rational step = region.box().re.width();
    for (;;) {
        ComplexBox box = horner(x.coords(), region.box());
        if (box.re.width() <= width && box.im.width() <= width) {
            return box;
        }
        step /= 4;
        region = detail::refine_region(data.poly, region, step);
    }
}

FinitenessCondition check_finiteness_conditions(const PisotSpec &spec) {
    const auto &a = spec.coeffs();
    const std::size_t d = a.size();
    bool decreasing = a[0] > 0;
    for (std::size_t i = 1; i < d && decreasing; ++i) {
        decreasing = a[i] >= a[i - 1];
    }
    if (decreasing) {
        return FinitenessCondition::DecreasingCoeffs;
    }
    bool nonnegative = std::all_of(a.begin(), a.end(), [](long long c) { return c >= 0; });
    long long rest = 0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        rest += a[i];
    }
    if (nonnegative && d >= 2 && a[d - 1] > rest && rest > 0) {
        return FinitenessCondition::DominantLead;
    }
    if (d == 3 && a[0] == 1 && a[2] >= 0 && a[1] >= -1 && a[1] <= a[2] + 1) {
        return FinitenessCondition::CubicUnit;
    }
    return FinitenessCondition::Unknown;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim_ws = [](std::string &t) {
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
    };
    trim_ws(s);
    if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    const auto slash = s.find('/');
    auto valid_integer = [](const std::string &t) {
        std::size_t start = !t.empty() && t[0] == '-' ? 1 : 0;
        return t.size() > start &&
               std::all_of(t.begin() + static_cast<long>(start), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-') {
        throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
    }
    Integer n(num, 10);
    Integer q(den, 10);
    if (q == 0) {
        throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, q);
    r.canonicalize();
    return r;
}

FieldElement parse_field_element(const PisotSpec &spec, std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (coords.size() > spec.degree()) {
        throw Error(ErrorKind::ParseError, "more coordinates than the degree of the spec");
    }
    return FieldElement(spec, std::move(coords));
}

} // namespace pisot
