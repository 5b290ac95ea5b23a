#ifndef PENDPOND_RINGS_HPP
#define PENDPOND_RINGS_HPP

// Coefficient rings for truncated series.
//
// A ring is a small value object that owns no coefficients; it only knows how
// to combine them. Series carry their ring by value so that two series over
// Z/3 and Z/9 can be told apart at run time, while Z and Q differ at compile
// time.

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "errors.hpp"

namespace pendpond {

struct IntegerRing {
    using value_type = mpz_class;

    std::string tag() const { return "int"; }
    bool operator==(const IntegerRing&) const = default;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_integer(const mpz_class& v) const { return v; }

    bool is_zero(const value_type& v) const { return sgn(v) == 0; }

    void add_to(value_type& acc, const value_type& v) const { acc += v; }
    void sub_from(value_type& acc, const value_type& v) const { acc -= v; }
    void add_mul(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void sub_mul(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }

    bool is_unit(const value_type& v) const { return v == 1 || v == -1; }
    value_type inverse(const value_type& v) const
    {
        if (!is_unit(v))
            throw not_invertible("integer " + v.get_str() + " is not a unit (need +-1)");
        return v;
    }

    bool divisible_by(const value_type& v, std::uint64_t modulus) const
    {
        return mpz_divisible_ui_p(v.get_mpz_t(), modulus) != 0;
    }

    std::string to_string(const value_type& v) const { return v.get_str(); }
    value_type parse(std::string_view text) const
    {
        mpz_class out;
        if (text.empty() || out.set_str(std::string(text), 10) != 0)
            throw parse_error("bad integer literal '" + std::string(text) + "'");
        return out;
    }
};

struct RationalRing {
    using value_type = mpq_class;

    std::string tag() const { return "rat"; }
    bool operator==(const RationalRing&) const = default;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_integer(const mpz_class& v) const { return mpq_class(v); }

    bool is_zero(const value_type& v) const { return sgn(v) == 0; }

    void add_to(value_type& acc, const value_type& v) const { acc += v; }
    void sub_from(value_type& acc, const value_type& v) const { acc -= v; }
    void add_mul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
    void sub_mul(value_type& acc, const value_type& a, const value_type& b) const { acc -= a * b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }

    bool is_unit(const value_type& v) const { return sgn(v) != 0; }
    value_type inverse(const value_type& v) const
    {
        if (!is_unit(v))
            throw not_invertible("zero has no rational inverse");
        return 1 / v;
    }

    bool divisible_by(const value_type& v, std::uint64_t modulus) const
    {
        return v.get_den() == 1 && mpz_divisible_ui_p(v.get_num_mpz_t(), modulus) != 0;
    }

    std::string to_string(const value_type& v) const { return v.get_str(); }
    value_type parse(std::string_view text) const
    {
        mpq_class out;
        if (text.empty() || out.set_str(std::string(text), 10) != 0 || out.get_den() == 0)
            throw parse_error("bad rational literal '" + std::string(text) + "'");
        out.canonicalize();
        return out;
    }
};

namespace detail {
__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;
} // namespace detail

// Z/mZ with residues held in [0, m).
class ModRing {
public:
    using value_type = std::uint64_t;

    explicit ModRing(std::uint64_t modulus) : m_(modulus)
    {
        if (modulus == 0)
            throw domain_error("modulus must be positive");
    }

    std::uint64_t modulus() const { return m_; }
    std::string tag() const { return "mod:" + std::to_string(m_); }
    bool operator==(const ModRing&) const = default;

    value_type zero() const { return 0; }
    value_type one() const { return 1 % m_; }
    value_type from_int(long v) const
    {
        auto r = static_cast<detail::int128>(v) % static_cast<detail::int128>(m_);
        if (r < 0)
            r += m_;
        return static_cast<value_type>(r);
    }
    value_type from_integer(const mpz_class& v) const
    {
        mpz_class r;
        mpz_class mod;
        mpz_import(mod.get_mpz_t(), 1, 1, sizeof(m_), 0, 0, &m_);
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
        return out;
    }

    bool is_zero(const value_type& v) const { return v == 0; }

    void add_to(value_type& acc, const value_type& v) const { acc = add(acc, v); }
    void sub_from(value_type& acc, const value_type& v) const { acc = add(acc, neg(v)); }
    void add_mul(value_type& acc, const value_type& a, const value_type& b) const
    {
        acc = add(acc, mul(a, b));
    }
    void sub_mul(value_type& acc, const value_type& a, const value_type& b) const
    {
        acc = add(acc, neg(mul(a, b)));
    }
    value_type add(value_type a, value_type b) const
    {
        auto s = static_cast<detail::uint128>(a) + b;
        return static_cast<value_type>(s >= m_ ? s - m_ : s);
    }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<detail::uint128>(a) * b % m_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }

    bool is_unit(const value_type& v) const { return std::gcd(v, m_) == 1; }
    value_type inverse(const value_type& v) const
    {
        // extended Euclid on signed 128-bit to keep intermediate cofactors exact
        detail::int128 r0 = m_, r1 = v, s0 = 0, s1 = 1;
        while (r1 != 0) {
            detail::int128 q = r0 / r1;
            detail::int128 t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        if (r0 != 1)
            throw not_invertible(std::to_string(v) + " is not a unit mod " + std::to_string(m_));
        detail::int128 inv = s0 % static_cast<detail::int128>(m_);
        if (inv < 0)
            inv += m_;
        return static_cast<value_type>(inv);
    }

    bool divisible_by(const value_type& v, std::uint64_t modulus) const
    {
        if (modulus == 0 || m_ % modulus != 0)
            throw ring_mismatch("cannot test divisibility by " + std::to_string(modulus) + " in " +
                                tag());
        return v % modulus == 0;
    }

    std::string to_string(const value_type& v) const { return std::to_string(v); }
    value_type parse(std::string_view text) const
    {
        return from_integer(IntegerRing{}.parse(text));
    }

private:
    std::uint64_t m_;
};

using AnyRing = std::variant<IntegerRing, RationalRing, ModRing>;

// Accepts the serialized ring tags "int", "rat" and "mod:<m>".
inline AnyRing parse_ring(std::string_view tag)
{
    if (tag == "int")
        return IntegerRing{};
    if (tag == "rat")
        return RationalRing{};
    if (tag.starts_with("mod:")) {
        auto digits = tag.substr(4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw parse_error("bad ring modulus in '" + std::string(tag) + "'");
        mpz_class m(std::string(digits), 10);
        if (m == 0 || !m.fits_ulong_p())
            throw parse_error("ring modulus out of range in '" + std::string(tag) + "'");
        return ModRing(m.get_ui());
    }
    throw parse_error("unknown ring '" + std::string(tag) + "'");
}

} // namespace pendpond

#endif
