#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ips/field.hpp"

namespace ips {

// Published classification counts bundled for comparison. `printed_total`
// is the total as published; when it disagrees with the sum of the cells
// the row is internally inconsistent and reported as such, never silently
// reconciled.
struct ReferenceRow {
    std::uint32_t q = 0;
    std::uint64_t printed_total = 0;
    std::map<std::size_t, std::uint64_t> counts;
    std::string source;

    std::uint64_t cell_sum() const {
        std::uint64_t s = 0;
        for (auto& [k, v] : counts) s += v;
        return s;
    }
    bool internally_consistent() const { return cell_sum() == printed_total; }
};

// Row for an odd prime power with 3 <= q <= 47, when published.
std::optional<ReferenceRow> reference_spectrum_row(std::uint32_t q);

// Published |H| (line-preserving group): q^2 (q-1)^2 r or q^2 (q^2-1) r,
// with the exceptional values at q = 5 and q = 9.
std::uint64_t reference_h_order(const FieldCtx& F);

// Published |G| (full graph group) for the IR-verified range.
std::uint64_t reference_g_order(const FieldCtx& F);

// Published stabiliser order of the circle construction:fixes
// (q-1) r for q = 1 mod 4 and (q+1) r for q = 3 mod 4.
std::uint64_t reference_circle_stab_order(const FieldCtx& F);

// Published minimum attained size, where stated: 7 for 11 <= q <= 47
// except l_13 = 6.
std::optional<std::size_t> reference_min_size(std::uint32_t q);

} // namespace ips
