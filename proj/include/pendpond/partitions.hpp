#ifndef PENDPOND_PARTITIONS_HPP
#define PENDPOND_PARTITIONS_HPP

// Brute-force ground truth for the four parity-restricted partition functions,
// plus the generating-function tables they validate.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "eta_quotient.hpp"
#include "series.hpp"

namespace pendpond {

enum class PartitionKind { pend, pond, ped, pod };

inline std::string_view name_of(PartitionKind kind)
{
    switch (kind) {
    case PartitionKind::pend:
        return "pend";
    case PartitionKind::pond:
        return "pond";
    case PartitionKind::ped:
        return "ped";
    case PartitionKind::pod:
        return "pod";
    }
    return "?";
}

inline PartitionKind parse_partition_kind(std::string_view name)
{
    for (auto k : {PartitionKind::pend, PartitionKind::pond, PartitionKind::ped, PartitionKind::pod})
        if (name_of(k) == name)
            return k;
    throw domain_error("unknown partition kind '" + std::string(name) + "'");
}

// One distinct part together with how often it occurs.
struct PartBlock {
    std::uint32_t part;
    std::uint32_t multiplicity;
};

// PEND: no even part occurs exactly once.  POND: no odd part occurs exactly once.
// PED: every even part occurs at most once. POD: every odd part occurs at most once.
inline bool accepts(PartitionKind kind, std::span<const PartBlock> blocks)
{
    for (const auto& b : blocks) {
        bool even = b.part % 2 == 0;
        switch (kind) {
        case PartitionKind::pend:
            if (even && b.multiplicity == 1)
                return false;
            break;
        case PartitionKind::pond:
            if (!even && b.multiplicity == 1)
                return false;
            break;
        case PartitionKind::ped:
            if (even && b.multiplicity > 1)
                return false;
            break;
        case PartitionKind::pod:
            if (!even && b.multiplicity > 1)
                return false;
            break;
        }
    }
    return true;
}

namespace detail {

inline void visit_partitions(std::uint32_t remaining, std::uint32_t max_part,
                             std::vector<PartBlock>& blocks,
                             const std::function<void(std::span<const PartBlock>)>& visit)
{
    if (remaining == 0) {
        visit(blocks);
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        for (std::uint32_t mult = 1; mult * part <= remaining; ++mult) {
            blocks.push_back({part, mult});
            visit_partitions(remaining - mult * part, part - 1, blocks, visit);
            blocks.pop_back();
        }
    }
}

} // namespace detail

// Every partition of n, as blocks with strictly decreasing parts.
inline void for_each_partition(std::uint32_t n,
                               const std::function<void(std::span<const PartBlock>)>& visit)
{
    std::vector<PartBlock> blocks;
    detail::visit_partitions(n, n, blocks, visit);
}

inline std::uint64_t count_bruteforce(PartitionKind kind, std::uint32_t n)
{
    std::uint64_t count = 0;
    for_each_partition(n, [&](std::span<const PartBlock> blocks) {
        if (accepts(kind, blocks))
            ++count;
    });
    return count;
}

inline NamedSeries generating_function_of(PartitionKind kind)
{
    switch (kind) {
    case PartitionKind::pend:
        return NamedSeries::pend;
    case PartitionKind::pond:
        return NamedSeries::pond;
    case PartitionKind::ped:
        return NamedSeries::ped;
    case PartitionKind::pod:
        return NamedSeries::pod;
    }
    throw domain_error("unknown partition kind");
}

// Counts for n = 0..bound via the generating function, in the chosen ring
// (ModRing(m) gives the counts reduced mod m).
template <class Ring = IntegerRing>
Series<Ring> table(PartitionKind kind, std::size_t bound, const Ring& ring = Ring{})
{
    return expand(make_named(generating_function_of(kind)), bound, ring);
}

} // namespace pendpond

#endif
