#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ips/plane.hpp"
#include "ips/search.hpp"

namespace ips {

// One point set per JSON line: {"q":..,"p":..,"r":..,"points":[[x,y],..]}
// with integer element codes; classification records additionally carry
// "size", "stab_order" and "orbit_len".
struct PointSetRecord {
    std::uint32_t q = 0, p = 0, r = 0;
    std::vector<std::pair<Fe, Fe>> points;
    std::optional<std::uint64_t> stab_order;
    std::optional<std::uint64_t> orbit_len;
};

std::string to_json_line(const FieldCtx& F, const PointSet& set,
                         std::optional<std::uint64_t> stab_order = std::nullopt,
                         std::optional<std::uint64_t> orbit_len = std::nullopt);

PointSetRecord parse_json_line(const std::string& line);

std::vector<PointSetRecord> read_records(std::istream& in);

// Spectrum row in the reference table layout: q, total, then size:count
// cells in ascending size order, tab separated.
std::string spectrum_tsv(const SpectrumRow& row);

// q x q grid with filled dots, one cell per plane point, origin bottom
// left. SVG or fixed-width ASCII.
std::string render_svg(const FieldCtx& F, const PointSet& set);
std::string render_ascii(const FieldCtx& F, const PointSet& set);

} // namespace ips
