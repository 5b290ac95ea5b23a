#ifndef PENDPOND_NUMETA_HPP
#define PENDPOND_NUMETA_HPP

// Arbitrary-precision evaluation of the Dedekind eta function and of
// f-quotients on the upper half plane, and the numeric check of
//
//     P_alpha^(0)(gamma tau) = 2 (-1)^alpha P_alpha^(1)(tau),   gamma = nu W nu,
//
// with nu: tau -> tau + 1/2 and W = [[4, -1], [4 M, 1 - M]], M = 3^(2 alpha + 2).
// Because nu W nu is a palindrome, composing left-to-right or right-to-left
// gives the same map; only the sign of the inner half-shift is a choice, and
// for functions of integral q-expansion the outer one is immaterial.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "eta_quotient.hpp"
#include "series.hpp"

namespace pendpond::numeta {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) of every Real created in scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision())
    {
        Real::default_precision(digits);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o)
    {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }

inline Complex exp(const Complex& z)
{
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

// Principal branch.
inline Complex sqrt(const Complex& z)
{
    Real r = abs(z);
    Real re = boost::multiprecision::sqrt((r + z.re) / 2);
    Real im = boost::multiprecision::sqrt((r - z.re) / 2);
    if (z.im < 0)
        im = -im;
    return {re, im};
}

inline Complex pow(const Complex& z, std::int64_t k)
{
    if (k < 0)
        return Complex(1) / pow(z, -k);
    Complex result(1);
    Complex base = z;
    while (k != 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k != 0)
            base *= base;
    }
    return result;
}

inline Real pi()
{
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// exp(2 pi i t)
inline Complex e2pii(const Complex& t) { return exp(Complex(Real(0), 2 * pi()) * t); }

inline std::string to_string(const Real& r, unsigned digits)
{
    return r.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

// A point tau with Im tau > 0.
class UpperHalfPoint {
public:
    explicit UpperHalfPoint(Complex tau) : tau_(std::move(tau))
    {
        if (!(tau_.im > 0))
            throw domain_error("point is not in the upper half plane");
    }
    UpperHalfPoint(const std::string& re, const std::string& im)
        : UpperHalfPoint(Complex(Real(re), Real(im)))
    {
    }
    const Complex& tau() const { return tau_; }

private:
    Complex tau_;
};

struct Reduction {
    Complex tau;        // reduced point, |Re| <= 1/2 and |tau| >= 1
    Complex multiplier; // eta(original) = multiplier * eta(reduced)
    std::size_t steps = 0;
};

// Walks tau into the fundamental domain with tau -> tau - n and tau -> -1/tau,
// accumulating eta(tau + n) = e^(i pi n / 12) eta(tau) and
// eta(-1/tau) = sqrt(-i tau) eta(tau).
inline Reduction reduce_to_fundamental_domain(const UpperHalfPoint& point,
                                              std::size_t max_steps = 10000)
{
    Reduction r{point.tau(), Complex(1), 0};
    const Complex minus_i(Real(0), Real(-1));
    while (true) {
        if (r.steps >= max_steps)
            throw precision_error("fundamental-domain reduction did not finish in " +
                                  std::to_string(max_steps) + " steps");
        Real n = boost::multiprecision::round(r.tau.re);
        if (n != 0) {
            r.tau.re -= n;
            r.multiplier *= exp(Complex(Real(0), pi() * n / 12));
        }
        if (norm(r.tau) < 1) {
            r.multiplier /= sqrt(minus_i * r.tau);
            r.tau = Complex(-1) / r.tau;
            ++r.steps;
            continue;
        }
        break;
    }
    return r;
}

inline Complex eta_numeric(const UpperHalfPoint& point, std::size_t max_steps = 10000)
{
    auto red = reduce_to_fundamental_domain(point, max_steps);
    Complex q = e2pii(red.tau);
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) - 10);
    Complex product(1);
    Complex qn = q;
    while (abs(qn) > eps) {
        product *= Complex(1) - qn;
        qn *= q;
    }
    return red.multiplier * e2pii(red.tau / Complex(24)) * product;
}

// The q-series q^s prod f_delta^r at q = e^(2 pi i tau), through
// f_delta(q) = eta(delta tau) q^(-delta/24).
inline Complex eval_quotient(const EtaQuotient& e, const UpperHalfPoint& point)
{
    if (!e.general_factors().empty())
        throw domain_error("numeric evaluation needs a pure f-quotient");
    Complex value(1);
    for (auto [delta, r] : e.factors()) {
        UpperHalfPoint scaled(Complex(point.tau().re * delta, point.tau().im * delta));
        value *= pow(eta_numeric(scaled), r);
    }
    Real extra = Real(24 * e.q_shift() - e.weighted_exponent_sum()) / 24;
    return value * e2pii(point.tau() * Complex(extra));
}

// sum a(n) q^n at q = e^(2 pi i tau).
inline Complex eval_series(const Series<IntegerRing>& s, const UpperHalfPoint& point)
{
    Complex q = e2pii(point.tau());
    Complex acc(0);
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
        Real c;
        mpfr_set_z(c.backend().data(), it->get_mpz_t(), MPFR_RNDN);
        acc = acc * q + Complex(c);
    }
    return acc;
}

struct Matrix2 {
    mpz_class a, b, c, d;
    mpz_class det() const { return a * d - b * c; }
};

// W = [[4, -1], [4 M, 1 - M]], M = 3^(2 alpha + 2).
inline Matrix2 atkin_lehner_W(int alpha)
{
    mpz_class m = pow3(2 * alpha + 2);
    return {4, -1, 4 * m, 1 - m};
}

inline Complex mobius(const Matrix2& g, const Complex& tau)
{
    auto to_real = [](const mpz_class& z) {
        Real r;
        mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
        return Complex(r);
    };
    return (to_real(g.a) * tau + to_real(g.b)) / (to_real(g.c) * tau + to_real(g.d));
}

// gamma tau = W(tau + s/2) + 1/2 with s = inner_shift_sign.
inline UpperHalfPoint gamma_action(int alpha, const UpperHalfPoint& point, int inner_shift_sign = 1)
{
    Real half = Real(1) / 2;
    Complex shifted(point.tau().re + half * inner_shift_sign, point.tau().im);
    Complex w = mobius(atkin_lehner_W(alpha), shifted);
    return UpperHalfPoint(Complex(w.re + half, w.im));
}

struct GammaSample {
    Complex tau;
    Complex ratio;   // P^(0)(gamma tau) / P^(1)(tau)
    Real residual;   // |ratio - expected| / |expected|
};

struct GammaReport {
    int alpha = 1;
    int expected = 0; // 2 (-1)^alpha
    unsigned digits = 50;
    Real tolerance;
    std::vector<GammaSample> samples;
    bool holds = false;
};

inline GammaReport verify_gamma_identity(int alpha, std::span<const UpperHalfPoint> samples,
                                         const Real& tolerance, int inner_shift_sign = 1)
{
    if (samples.empty())
        throw domain_error("verify_gamma_identity needs at least one sample");
    GammaReport rep;
    rep.alpha = alpha;
    rep.expected = alpha % 2 == 0 ? 2 : -2;
    rep.digits = Real::default_precision();
    rep.tolerance = tolerance;
    auto p0 = make_P(alpha, 0);
    auto p1 = make_P(alpha, 1);
    rep.holds = true;
    for (const auto& point : samples) {
        auto lhs = eval_quotient(p0, gamma_action(alpha, point, inner_shift_sign));
        auto rhs = eval_quotient(p1, point);
        GammaSample s{point.tau(), lhs / rhs, Real(0)};
        s.residual = abs(s.ratio - Complex(rep.expected)) / std::abs(rep.expected);
        if (!(s.residual < tolerance))
            rep.holds = false;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

inline nlohmann::json to_json(const GammaReport& r)
{
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"tau", {to_string(s.tau.re, 20), to_string(s.tau.im, 20)}},
                           {"ratio", {to_string(s.ratio.re, 30), to_string(s.ratio.im, 30)}},
                           {"residual", to_string(s.residual, 6)}});
    return {{"alpha", r.alpha},
            {"expected_ratio", std::to_string(r.expected)},
            {"digits", r.digits},
            {"tolerance", to_string(r.tolerance, 3)},
            {"samples", samples},
            {"holds", r.holds}};
}

} // namespace pendpond::numeta

#endif
