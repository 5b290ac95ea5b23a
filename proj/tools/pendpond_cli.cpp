// pendpond: command-line front end.
//
// Every command prints a JSON report on stdout and a short summary on stderr.
// Exit codes: 0 pass, 1 mathematical failure, 2 usage error, 3 resource or
// truncation error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pendpond/cache.hpp>
#include <pendpond/cusps.hpp>
#include <pendpond/haupt.hpp>
#include <pendpond/modops.hpp>
#include <pendpond/numeta.hpp>
#include <pendpond/partitions.hpp>
#include <pendpond/series_json.hpp>
#include <pendpond/verify.hpp>

#ifndef PENDPOND_VERSION
#define PENDPOND_VERSION "dev"
#endif

namespace {

using namespace pendpond;
using nlohmann::json;

enum Exit { ok = 0, math_failure = 1, usage = 2, resource = 3 };

struct Common {
    std::size_t order = 100;
    std::string ring = "int";
    std::uint64_t modulus = 0;
    bool compact = false;
    std::string cache_dir;
    unsigned precision = 50;
    int max_ab = 16;
};

Common common;

std::unique_ptr<Cache> open_cache()
{
    if (common.cache_dir.empty())
        return nullptr;
    return std::make_unique<Cache>(common.cache_dir, PENDPOND_VERSION);
}

std::string ring_tag()
{
    if (common.modulus != 0)
        return "mod:" + std::to_string(common.modulus);
    return common.ring;
}

void emit(const json& j)
{
    std::cout << (common.compact ? j.dump() : j.dump(2)) << '\n';
}

// Expansion of a quotient in the requested ring, through the cache if any.
json expand_json(const EtaQuotient& e, std::size_t order)
{
    auto tag = ring_tag();
    auto ring = parse_ring(tag);
    auto compute = [&] {
        return std::visit([&](const auto& r) { return to_json(expand(e, order, r)); }, ring);
    };
    auto cache = open_cache();
    if (!cache)
        return compute();
    json request = {{"op", "expand"}, {"quotient", to_string(e)}, {"order", order}, {"ring", tag}};
    bool hit = false;
    auto out = cache->get_or_compute(request, compute, &hit);
    std::cerr << (hit ? "cache hit " : "cache store ") << Cache::key_of(request) << '\n';
    return out;
}

Series<ModRing> cached_mod_table(PartitionKind kind, std::size_t bound, std::uint64_t modulus)
{
    ModRing ring(modulus);
    auto cache = open_cache();
    if (!cache)
        return table(kind, bound, ring);
    json request = {{"op", "table"}, {"series", std::string(name_of(kind))}, {"order", bound},
                    {"ring", ring.tag()}};
    auto payload = cache->get_or_compute(request, [&] { return to_json(table(kind, bound, ring)); });
    return series_from_json(payload, ring);
}

int run_expand(const std::string& text)
{
    auto e = parse_quotient(text);
    auto j = expand_json(e, common.order);
    j["quotient"] = to_string(e);
    emit(j);
    std::cerr << "expanded " << to_string(e) << " to order " << common.order << " over "
              << ring_tag() << '\n';
    return ok;
}

int run_table(const std::string& kind_name)
{
    auto kind = parse_partition_kind(kind_name);
    auto j = expand_json(make_named(generating_function_of(kind)), common.order);
    j["series"] = kind_name;
    emit(j);
    std::cerr << kind_name << "(0.." << common.order << ") over " << ring_tag() << '\n';
    return ok;
}

std::uint64_t progression_bound(std::uint64_t m, std::uint64_t r, std::uint64_t n_max)
{
    return m * n_max + r;
}

int run_check(const std::string& kind_name, std::uint64_t m, std::uint64_t r, std::uint64_t n_max)
{
    if (common.modulus == 0)
        throw domain_error("check needs --modulus");
    auto kind = parse_partition_kind(kind_name);
    auto t = cached_mod_table(kind, progression_bound(m, r, n_max), common.modulus);
    auto rep = check_congruence(t, m, r, common.modulus, n_max);
    auto j = to_json(rep);
    j["series"] = kind_name;
    emit(j);
    std::cerr << kind_name << "(" << m << "n+" << r << ") = 0 mod " << common.modulus
              << " for n <= " << n_max << ": "
              << (rep.holds ? "holds" : "fails at n = " + std::to_string(*rep.first_failure)) << '\n';
    return rep.holds ? ok : math_failure;
}

int run_scan(const std::string& kind_name, std::uint64_t max_step, std::uint64_t n_max)
{
    if (common.modulus == 0)
        throw domain_error("scan needs --modulus");
    auto kind = parse_partition_kind(kind_name);
    auto t = cached_mod_table(kind, max_step * n_max + max_step - 1, common.modulus);
    auto found = scan_congruences(t, common.modulus, max_step, n_max);
    json hits = json::array();
    for (auto [m, r] : found)
        hits.push_back({{"step", std::to_string(m)}, {"residue", std::to_string(r)}});
    emit({{"series", kind_name},
          {"modulus", std::to_string(common.modulus)},
          {"max_step", std::to_string(max_step)},
          {"n_max", std::to_string(n_max)},
          {"progressions", hits}});
    std::cerr << found.size() << " progressions of " << kind_name << " vanish mod " << common.modulus
              << " for n <= " << n_max << '\n';
    return ok;
}

LocalizedPolyRep reduce_L(int alpha, int beta)
{
    return reduce(make_L(alpha, beta, common.order), common.max_ab);
}

int run_reduce(int alpha, int beta)
{
    auto rep = reduce_L(alpha, beta);
    auto j = to_json(rep);
    j["alpha"] = alpha;
    j["beta"] = beta;
    emit(j);
    std::cerr << "L_" << alpha << "^(" << beta << ") = " << rep.content.get_str() << " p(x) / ((1-3x)^"
              << rep.a << " (1+3x)^" << rep.b << "), deg p = " << rep.poly.size() - 1 << '\n';
    return ok;
}

// sigma(L_alpha^(beta)) against c L_alpha^(1-beta): reports the constant c if
// the two series are proportional and whether it equals (-1)^alpha 2^(1-2 beta).
int run_sigma(int alpha, int beta)
{
    auto rep = reduce_L(alpha, beta);
    auto image = sigma_apply(rep, common.order);
    auto other = from_integers(make_L(alpha, 1 - beta, common.order), RationalRing{});
    std::optional<mpq_class> ratio;
    bool proportional = true;
    for (std::size_t n = 0; n <= common.order; ++n) {
        const auto& a = image.coeffs()[n];
        const auto& b = other.coeffs()[n];
        if (b == 0) {
            proportional = proportional && a == 0;
            continue;
        }
        mpq_class c = a / b;
        if (!ratio)
            ratio = c;
        proportional = proportional && c == *ratio;
    }
    mpq_class expected = (alpha % 2 == 0 ? 1 : -1) * (beta == 0 ? mpq_class(2) : mpq_class(1, 2));
    bool matches = proportional && ratio && *ratio == expected;
    emit({{"alpha", alpha},
          {"beta", beta},
          {"order", std::to_string(common.order)},
          {"proportional", proportional},
          {"ratio", proportional && ratio ? json(ratio->get_str()) : json(nullptr)},
          {"expected_ratio", expected.get_str()},
          {"matches", matches}});
    std::cerr << "sigma(L_" << alpha << "^(" << beta << ")) = "
              << (proportional && ratio ? ratio->get_str() : std::string("?")) << " L_" << alpha << "^("
              << 1 - beta << "), expected " << expected.get_str() << '\n';
    return matches ? ok : math_failure;
}

int run_gamma(int alpha, const std::vector<std::string>& taus, const std::string& tol_text)
{
    numeta::PrecisionScope scope(common.precision);
    std::vector<numeta::UpperHalfPoint> samples;
    for (const auto& t : taus) {
        auto comma = t.find(',');
        if (comma == std::string::npos)
            throw parse_error("tau must be written re,im");
        samples.emplace_back(t.substr(0, comma), t.substr(comma + 1));
    }
    if (samples.empty())
        samples.emplace_back("0.1", "0.8");
    auto rep = numeta::verify_gamma_identity(alpha, samples, numeta::Real(tol_text));
    emit(to_json(rep));
    std::cerr << "alpha " << alpha << ": ratio " << numeta::to_string(rep.samples[0].ratio.re, 15)
              << ", expected " << rep.expected << (rep.holds ? ", holds" : ", does not hold") << '\n';
    return rep.holds ? ok : math_failure;
}

int run_cusps(const std::string& text, std::int64_t level)
{
    bool named = text == "x" || text == "y" || text == "z1" || text == "z2";
    auto e = named ? make_hauptmodul(text) : parse_quotient(text);
    auto rep = is_modular_function(e, level);
    auto j = to_json(rep);
    j["quotient"] = to_string(e);
    emit(j);
    std::cerr << to_string(e) << " on Gamma0(" << level << "): "
              << (rep.passes() ? "modular function" : "conditions fail") << ", degree "
              << rep.orders.degree().get_str() << '\n';
    return rep.passes() ? ok : math_failure;
}

int run_verify_all(const std::string& depth, bool inject_fault)
{
    if (depth != "quick" && depth != "full")
        throw domain_error("depth must be quick or full");
    verify::Options opt;
    opt.full = depth == "full";
    opt.inject_fault = inject_fault;
    opt.digits = common.precision;
    opt.mod_table = cached_mod_table;
    auto start = std::chrono::steady_clock::now();
    auto results = verify::run_all(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back(verify::to_json(r));
        std::cerr << verify::format_line(r) << '\n';
        all = all && r.pass;
    }
    emit({{"depth", depth}, {"pass", all}, {"checks", checks}});
    std::cerr << (all ? "all checks pass" : "some checks fail") << " in " << secs << " s\n";
    return all ? ok : math_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parity-restricted partition congruences: q-series, modular functions, checks"};
    app.set_version_flag("--version", PENDPOND_VERSION);
    app.require_subcommand(1);

    auto add_common = [](CLI::App* sub) {
        sub->add_option("--order", common.order, "Truncation order");
        sub->add_option("--ring", common.ring, "Coefficient ring: int, rat or mod:m");
        sub->add_option("--modulus", common.modulus, "Work modulo this number");
        sub->add_flag("--json", common.compact, "Single-line JSON output");
        sub->add_option("--cache-dir", common.cache_dir, "Directory for cached tables");
        sub->add_option("--precision", common.precision, "Decimal digits for numeric work");
    };

    std::string quotient;
    auto expand_cmd = app.add_subcommand("expand", "Expand a quotient such as \"q^1 * f2^2 * f4^-1\"");
    expand_cmd->add_option("quotient", quotient)->required();
    add_common(expand_cmd);

    std::string kind;
    auto table_cmd = app.add_subcommand("table", "Counts pend, pond, ped or pod up to --order");
    table_cmd->add_option("kind", kind)->required();
    add_common(table_cmd);

    std::uint64_t step = 1, residue = 0, n_max = 100, max_step = 27;
    auto check_cmd = app.add_subcommand("check", "Is kind(step n + residue) = 0 mod --modulus for n <= --range?");
    check_cmd->add_option("kind", kind)->required();
    check_cmd->add_option("step", step)->required()->check(CLI::PositiveNumber);
    check_cmd->add_option("residue", residue)->required();
    check_cmd->add_option("--range", n_max, "Largest n checked");
    add_common(check_cmd);

    auto scan_cmd = app.add_subcommand("scan", "All vanishing progressions with step <= --max-step");
    scan_cmd->add_option("kind", kind)->required();
    scan_cmd->add_option("--max-step", max_step)->check(CLI::PositiveNumber);
    scan_cmd->add_option("--range", n_max, "Largest n checked");
    add_common(scan_cmd);

    int alpha = 1, beta = 0;
    auto reduce_cmd = app.add_subcommand("reduce", "Write L_alpha^(beta) as a rational function of x");
    reduce_cmd->add_option("--alpha", alpha)->check(CLI::Range(1, 6));
    reduce_cmd->add_option("--beta", beta)->check(CLI::Range(0, 1));
    reduce_cmd->add_option("--max-ab", common.max_ab, "Largest denominator exponent tried")->check(CLI::NonNegativeNumber);
    add_common(reduce_cmd);

    auto sigma_cmd = app.add_subcommand("sigma", "Apply x -> y to L_alpha^(beta) and compare with L_alpha^(1-beta)");
    sigma_cmd->add_option("--alpha", alpha)->check(CLI::Range(1, 6));
    sigma_cmd->add_option("--beta", beta)->check(CLI::Range(0, 1));
    sigma_cmd->add_option("--max-ab", common.max_ab, "Largest denominator exponent tried")->check(CLI::NonNegativeNumber);
    add_common(sigma_cmd);

    std::vector<std::string> taus;
    std::string tolerance = "1e-20";
    auto gamma_cmd = app.add_subcommand("gamma", "Numerically compare P^(0)(gamma tau) with P^(1)(tau)");
    gamma_cmd->add_option("--alpha", alpha)->check(CLI::Range(1, 6));
    gamma_cmd->add_option("--tau", taus, "Sample point re,im (repeatable)");
    gamma_cmd->add_option("--tolerance", tolerance, "Relative tolerance");
    add_common(gamma_cmd);

    std::int64_t level = 12;
    auto cusps_cmd = app.add_subcommand("cusps", "Cusp orders and modularity conditions on Gamma0(level)");
    cusps_cmd->add_option("quotient", quotient, "Quotient text, or x, y, z1, z2")->required();
    cusps_cmd->add_option("--level", level)->check(CLI::PositiveNumber);
    add_common(cusps_cmd);

    std::string depth = "quick";
    bool inject_fault = false;
    auto verify_cmd = app.add_subcommand("verify-all", "Run every end-to-end check");
    verify_cmd->add_option("depth", depth, "quick (alpha = 1) or full (alpha = 1, 2)");
    verify_cmd->add_flag("--inject-fault", inject_fault, "Corrupt one table coefficient");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*expand_cmd)
            return run_expand(quotient);
        if (*table_cmd)
            return run_table(kind);
        if (*check_cmd)
            return run_check(kind, step, residue, n_max);
        if (*scan_cmd)
            return run_scan(kind, max_step, n_max);
        if (*reduce_cmd)
            return run_reduce(alpha, beta);
        if (*sigma_cmd)
            return run_sigma(alpha, beta);
        if (*gamma_cmd)
            return run_gamma(alpha, taus, tolerance);
        if (*cusps_cmd)
            return run_cusps(quotient, level);
        if (*verify_cmd)
            return run_verify_all(depth, inject_fault);
    } catch (const truncation_error& e) {
        std::cerr << "pendpond: " << e.what() << '\n';
        return resource;
    } catch (const precision_error& e) {
        std::cerr << "pendpond: " << e.what() << '\n';
        return resource;
    } catch (const reduction_error& e) {
        std::cerr << "pendpond: " << e.what() << '\n';
        return math_failure;
    } catch (const pendpond::error& e) {
        std::cerr << "pendpond: " << e.what() << '\n';
        return usage;
    } catch (const std::bad_alloc&) {
        std::cerr << "pendpond: out of memory\n";
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "pendpond: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
