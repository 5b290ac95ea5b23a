#ifndef PENDPOND_MODOPS_HPP
#define PENDPOND_MODOPS_HPP

// U_ell, the composite U_3^(2 alpha + 1), the level-12 functions L_alpha^(beta)
// and congruence checks on coefficient tables.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "eta_quotient.hpp"
#include "partitions.hpp"
#include "series.hpp"

namespace pendpond {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// b(n) = a(m n + r), known up to floor((order - r) / m).
template <class Ring>
Series<Ring> extract_progression(const Series<Ring>& a, std::size_t m, std::size_t r)
{
    if (m == 0)
        throw domain_error("progression step must be positive");
    if (r > a.order())
        throw truncation_error("progression start " + std::to_string(r) +
                               " is beyond the series order " + std::to_string(a.order()));
    auto order = (a.order() - r) / m;
    std::vector<typename Ring::value_type> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c.push_back(a.coeffs()[m * n + r]);
    return Series<Ring>(a.ring(), std::move(c));
}

template <class Ring>
Series<Ring> u_ell(const Series<Ring>& a, std::uint64_t ell)
{
    if (!is_prime(ell))
        throw domain_error("U_ell needs a prime ell, got " + std::to_string(ell));
    return extract_progression(a, ell, 0);
}

// U_3 applied 2 alpha + 1 times.
template <class Ring>
Series<Ring> u_alpha(const Series<Ring>& a, int alpha)
{
    if (alpha < 0)
        throw domain_error("u_alpha needs alpha >= 0");
    auto step = static_cast<std::size_t>(pow3(2 * alpha + 1));
    if (a.order() < step)
        throw truncation_error("u_alpha(" + std::to_string(alpha) + ") needs order >= " +
                               std::to_string(step) + ", series has " +
                               std::to_string(a.order()));
    Series<Ring> out = a;
    for (int i = 0; i < 2 * alpha + 1; ++i)
        out = u_ell(out, 3);
    return out;
}

inline std::size_t L_step(int alpha) { return static_cast<std::size_t>(pow3(2 * alpha + 1)); }

// Offsets of the progressions L_alpha^(beta) enumerates:
//   beta = 0: pond(3^(2a+1) n + (23 9^a + 1)/8)
//   beta = 1: pend(3^(2a+1) n + (17 9^a - 1)/8)
inline std::size_t L_offset(int alpha, int beta)
{
    auto t = pow3(2 * alpha);
    return static_cast<std::size_t>(beta == 0 ? (23 * t + 1) / 8 : (17 * t - 1) / 8);
}

// L_alpha^(beta) = U_alpha(P_alpha^(beta)) to `order`.
template <class Ring = IntegerRing>
Series<Ring> make_L(int alpha, int beta, std::size_t order, const Ring& ring = Ring{})
{
    auto step = L_step(alpha);
    auto p = expand(make_P(alpha, beta), (order + 1) * step, ring);
    return u_alpha(p, alpha).truncated(order);
}

// The same function assembled from partition counts:
//   beta = 0: f3^3/f4^2           * sum_n pond(step n + offset) q^(n+1)
//   beta = 1: f1^2 f3^3 f4^2/f2^6 * sum_n pend(step n + offset) q^(n+1)
template <class Ring = IntegerRing>
Series<Ring> make_L_closed_form(int alpha, int beta, std::size_t order, const Ring& ring = Ring{})
{
    if (beta != 0 && beta != 1)
        throw domain_error("beta must be 0 or 1");
    using E = EtaQuotient;
    auto step = L_step(alpha);
    auto offset = L_offset(alpha, beta);
    auto kind = beta == 0 ? PartitionKind::pond : PartitionKind::pend;
    auto prefactor = beta == 0 ? E::f(3, 3) * E::f(4, -2)
                               : E::f(1, 2) * E::f(3, 3) * E::f(4, 2) * E::f(2, -6);
    auto counts = table(kind, order == 0 ? offset : step * (order - 1) + offset, ring);
    Series<Ring> sum(ring, order);
    for (std::size_t n = 0; n + 1 <= order; ++n)
        sum.mutable_coeff(n + 1) = counts.coeffs()[step * n + offset];
    return expand(prefactor, order, ring) * sum;
}

struct CongruenceReport {
    std::uint64_t step = 1;
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
    std::uint64_t n_max = 0;
    bool holds = true;
    std::optional<std::uint64_t> first_failure;
};

inline nlohmann::json to_json(const CongruenceReport& r)
{
    nlohmann::json j = {{"step", std::to_string(r.step)},
                        {"residue", std::to_string(r.residue)},
                        {"modulus", std::to_string(r.modulus)},
                        {"n_max", std::to_string(r.n_max)},
                        {"holds", r.holds}};
    j["first_failure"] = r.first_failure ? nlohmann::json(std::to_string(*r.first_failure))
                                         : nlohmann::json(nullptr);
    return j;
}

// table[m n + r] = 0 mod M for n = 0..n_max?
template <class Ring>
CongruenceReport check_congruence(const Series<Ring>& table, std::uint64_t m, std::uint64_t r,
                                  std::uint64_t modulus, std::uint64_t n_max)
{
    if (m == 0 || modulus == 0)
        throw domain_error("step and modulus must be positive");
    if (m * n_max + r > table.order())
        throw truncation_error("table of order " + std::to_string(table.order()) +
                               " does not cover index " + std::to_string(m * n_max + r));
    CongruenceReport report{m, r, modulus, n_max, true, std::nullopt};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (!table.ring().divisible_by(table.coeffs()[m * n + r], modulus)) {
            report.holds = false;
            report.first_failure = n;
            break;
        }
    }
    return report;
}

// All (m, r) with m <= max_step, r < m, table[m n + r] = 0 mod M for n <= n_max.
template <class Ring>
std::vector<std::pair<std::uint64_t, std::uint64_t>>
scan_congruences(const Series<Ring>& table, std::uint64_t modulus, std::uint64_t max_step,
                 std::uint64_t n_max)
{
    if (max_step == 0 || modulus == 0)
        throw domain_error("max_step and modulus must be positive");
    if (max_step * n_max + max_step - 1 > table.order())
        throw truncation_error("table of order " + std::to_string(table.order()) +
                               " is too short for a scan up to step " + std::to_string(max_step));
    const auto& ring = table.ring();
    std::vector<bool> zero(table.order() + 1);
    for (std::size_t i = 0; i <= table.order(); ++i)
        zero[i] = ring.divisible_by(table.coeffs()[i], modulus);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t m = 1; m <= max_step; ++m) {
        for (std::uint64_t r = 0; r < m; ++r) {
            bool ok = true;
            for (std::uint64_t n = 0; n <= n_max && ok; ++n)
                ok = zero[m * n + r];
            if (ok)
                out.emplace_back(m, r);
        }
    }
    return out;
}

} // namespace pendpond

#endif
