#ifndef PENDPOND_SERIES_HPP
#define PENDPOND_SERIES_HPP

// Dense truncated power series a(0) + a(1) q + ... + a(N) q^N + O(q^(N+1)).
//
// The truncation order N is part of the value: every operation reports only
// coefficients it can prove, so results are truncated to the smaller order
// of the operands. The one exception is substitute_qpow, which stretches the
// order because the gaps it introduces are exact zeros.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rings.hpp"

namespace pendpond {

template <class Ring>
class Series {
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    // The zero series known to order `order`.
    Series(Ring ring, std::size_t order)
        : ring_(std::move(ring)), coeffs_(order + 1, ring_.zero())
    {
    }

    Series(Ring ring, std::vector<value_type> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw domain_error("a truncated series needs at least the constant coefficient");
    }

    static Series one(Ring ring, std::size_t order) { return monomial(std::move(ring), 0, order); }

    // q^k truncated at `order`; zero if k > order.
    static Series monomial(Ring ring, std::size_t k, std::size_t order)
    {
        Series s(std::move(ring), order);
        if (k <= order)
            s.coeffs_[k] = s.ring_.one();
        return s;
    }

    const Ring& ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const value_type> coeffs() const { return coeffs_; }

    const value_type& coeff(std::size_t n) const
    {
        if (n > order())
            throw truncation_error("coefficient of q^" + std::to_string(n) +
                                   " requested but series is only known to order " +
                                   std::to_string(order()));
        return coeffs_[n];
    }
    const value_type& operator[](std::size_t n) const { return coeff(n); }

    // Mutable access for builders; kept explicit so reads never go through it.
    value_type& mutable_coeff(std::size_t n)
    {
        if (n > order())
            throw truncation_error("write past truncation order");
        return coeffs_[n];
    }

    Series truncated(std::size_t new_order) const
    {
        if (new_order > order())
            throw truncation_error("cannot extend a series from order " + std::to_string(order()) +
                                   " to " + std::to_string(new_order));
        return Series(ring_, std::vector<value_type>(coeffs_.begin(),
                                                     coeffs_.begin() + new_order + 1));
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [&](const value_type& c) { return ring_.is_zero(c); });
    }

    // Exact equality including order and ring.
    bool operator==(const Series& other) const
    {
        return ring_ == other.ring_ && coeffs_ == other.coeffs_;
    }

    // Equality of the coefficients both sides know.
    bool agrees_with(const Series& other) const
    {
        require_same_ring(other);
        auto n = std::min(order(), other.order());
        return std::equal(coeffs_.begin(), coeffs_.begin() + n + 1, other.coeffs_.begin());
    }

    void require_same_ring(const Series& other) const
    {
        if (!(ring_ == other.ring_))
            throw ring_mismatch("series over " + ring_.tag() + " combined with series over " +
                                other.ring_.tag());
    }

private:
    Ring ring_;
    std::vector<value_type> coeffs_;
};

template <class Ring>
Series<Ring> operator+(const Series<Ring>& a, const Series<Ring>& b)
{
    a.require_same_ring(b);
    auto n = std::min(a.order(), b.order());
    const auto& ring = a.ring();
    Series<Ring> out = a.truncated(n);
    for (std::size_t i = 0; i <= n; ++i)
        ring.add_to(out.mutable_coeff(i), b.coeffs()[i]);
    return out;
}

template <class Ring>
Series<Ring> operator-(const Series<Ring>& a)
{
    std::vector<typename Ring::value_type> c;
    c.reserve(a.order() + 1);
    for (const auto& v : a.coeffs())
        c.push_back(a.ring().neg(v));
    return Series<Ring>(a.ring(), std::move(c));
}

template <class Ring>
Series<Ring> operator-(const Series<Ring>& a, const Series<Ring>& b)
{
    a.require_same_ring(b);
    auto n = std::min(a.order(), b.order());
    const auto& ring = a.ring();
    Series<Ring> out = a.truncated(n);
    for (std::size_t i = 0; i <= n; ++i)
        ring.sub_from(out.mutable_coeff(i), b.coeffs()[i]);
    return out;
}

template <class Ring>
Series<Ring> scale(const Series<Ring>& a, const typename Ring::value_type& k)
{
    std::vector<typename Ring::value_type> c;
    c.reserve(a.order() + 1);
    for (const auto& v : a.coeffs())
        c.push_back(a.ring().mul(v, k));
    return Series<Ring>(a.ring(), std::move(c));
}

// Schoolbook Cauchy product truncated at the smaller order.
template <class Ring>
Series<Ring> operator*(const Series<Ring>& a, const Series<Ring>& b)
{
    a.require_same_ring(b);
    const auto& ring = a.ring();
    auto n = std::min(a.order(), b.order());
    Series<Ring> out(ring, n);
    auto ac = a.coeffs();
    auto bc = b.coeffs();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ring.is_zero(ac[i]))
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!ring.is_zero(bc[j]))
                ring.add_mul(out.mutable_coeff(i + j), ac[i], bc[j]);
    }
    return out;
}

template <class Ring>
Series<Ring> invert(const Series<Ring>& a)
{
    const auto& ring = a.ring();
    auto c0_inv = ring.inverse(a.coeffs()[0]); // throws not_invertible
    auto n = a.order();
    auto ac = a.coeffs();
    Series<Ring> out(ring, n);
    out.mutable_coeff(0) = c0_inv;
    // sparse view of a(1..n) keeps this fast for products like f_delta
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= n; ++k)
        if (!ring.is_zero(ac[k]))
            support.push_back(k);
    auto oc = out.coeffs();
    for (std::size_t i = 1; i <= n; ++i) {
        auto acc = ring.zero();
        for (auto k : support) {
            if (k > i)
                break;
            ring.add_mul(acc, ac[k], oc[i - k]);
        }
        out.mutable_coeff(i) = ring.mul(ring.neg(acc), c0_inv);
    }
    return out;
}

template <class Ring>
Series<Ring> pow(const Series<Ring>& a, std::int64_t k)
{
    if (k < 0)
        return pow(invert(a), -k);
    auto result = Series<Ring>::one(a.ring(), a.order());
    auto base = a;
    auto e = static_cast<std::uint64_t>(k);
    while (e != 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e != 0)
            base = base * base;
    }
    return result;
}

// a(q) -> a(q^m). The order grows to order*m: all new coefficients are known zeros.
template <class Ring>
Series<Ring> substitute_qpow(const Series<Ring>& a, std::size_t m)
{
    if (m == 0)
        throw domain_error("substitute_qpow needs m >= 1");
    Series<Ring> out(a.ring(), a.order() * m);
    for (std::size_t n = 0; n <= a.order(); ++n)
        out.mutable_coeff(n * m) = a.coeffs()[n];
    return out;
}

// a(q) -> a(-q).
template <class Ring>
Series<Ring> alternate_sign(const Series<Ring>& a)
{
    Series<Ring> out = a;
    for (std::size_t n = 1; n <= a.order(); n += 2)
        out.mutable_coeff(n) = a.ring().neg(a.coeffs()[n]);
    return out;
}

// q^s * a(q), keeping the order of `a`.
template <class Ring>
Series<Ring> shift_up(const Series<Ring>& a, std::size_t s)
{
    Series<Ring> out(a.ring(), a.order());
    for (std::size_t n = s; n <= a.order(); ++n)
        out.mutable_coeff(n) = a.coeffs()[n - s];
    return out;
}

// Maps every coefficient through the canonical homomorphism Z -> target
// (or Q -> Q, or a reduction between compatible rings supplied by `convert`).
template <class Target, class Source, class Convert>
Series<Target> map_coeffs(const Series<Source>& a, Target target, Convert&& convert)
{
    std::vector<typename Target::value_type> c;
    c.reserve(a.order() + 1);
    for (const auto& v : a.coeffs())
        c.push_back(convert(v));
    return Series<Target>(std::move(target), std::move(c));
}

template <class Target>
Series<Target> from_integers(const Series<IntegerRing>& a, Target target)
{
    return map_coeffs(a, target, [&](const mpz_class& v) { return target.from_integer(v); });
}

// Q -> Z; throws if some coefficient is not integral.
inline Series<IntegerRing> to_integers(const Series<RationalRing>& a)
{
    return map_coeffs(a, IntegerRing{}, [](const mpq_class& v) {
        if (v.get_den() != 1)
            throw domain_error("coefficient " + v.get_str() + " is not an integer");
        return mpz_class(v.get_num());
    });
}

// A +-1 coefficient at one exponent. Products like f_delta and the binomials
// (1 - q^m) are lists of these, which makes multiplying by them additions only.
struct SignedTerm {
    std::size_t exponent;
    int sign;
};

// In place: a <- a * s, exponents of s strictly increasing.
template <class Ring>
void multiply_signed_sparse(std::vector<typename Ring::value_type>& a, const Ring& ring,
                            std::span<const SignedTerm> s)
{
    for (std::size_t i = a.size(); i-- > 0;) {
        auto acc = ring.zero();
        for (const auto& t : s) {
            if (t.exponent > i)
                break;
            if (t.sign > 0)
                ring.add_to(acc, a[i - t.exponent]);
            else
                ring.sub_from(acc, a[i - t.exponent]);
        }
        a[i] = std::move(acc);
    }
}

// In place: a <- a / s, where s starts with the term +1 * q^0.
template <class Ring>
void divide_signed_sparse(std::vector<typename Ring::value_type>& a, const Ring& ring,
                          std::span<const SignedTerm> s)
{
    if (s.empty() || s.front().exponent != 0 || s.front().sign != 1)
        throw not_invertible("sparse divisor must have constant term 1");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 1; k < s.size(); ++k) {
            const auto& t = s[k];
            if (t.exponent > i)
                break;
            if (t.sign > 0)
                ring.sub_from(a[i], a[i - t.exponent]);
            else
                ring.add_to(a[i], a[i - t.exponent]);
        }
    }
}

} // namespace pendpond

#endif
