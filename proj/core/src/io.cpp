#include "ips/io.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace ips {

using nlohmann::json;

std::string to_json_line(const FieldCtx& F, const PointSet& set,
                         std::optional<std::uint64_t> stab_order,
                         std::optional<std::uint64_t> orbit_len) {
    json j;
    j["q"] = F.q();
    j["p"] = F.p();
    j["r"] = F.r();
    json pts = json::array();
    for (const Point& pt : set.points()) pts.push_back({pt.x, pt.y});
    j["points"] = std::move(pts);
    j["size"] = set.size();
    if (stab_order) j["stab_order"] = *stab_order;
    if (orbit_len) j["orbit_len"] = *orbit_len;
    return j.dump();
}

PointSetRecord parse_json_line(const std::string& line) {
    json j = json::parse(line);
    PointSetRecord rec;
    rec.q = j.at("q").get<std::uint32_t>();
    rec.p = j.at("p").get<std::uint32_t>();
    rec.r = j.at("r").get<std::uint32_t>();
    for (const auto& pt : j.at("points")) {
        if (!pt.is_array() || pt.size() != 2)
            throw std::invalid_argument("point entries must be [x, y] pairs");
        rec.points.emplace_back(pt[0].get<Fe>(), pt[1].get<Fe>());
    }
    if (j.contains("stab_order")) rec.stab_order = j["stab_order"].get<std::uint64_t>();
    if (j.contains("orbit_len")) rec.orbit_len = j["orbit_len"].get<std::uint64_t>();
    return rec;
}

std::vector<PointSetRecord> read_records(std::istream& in) {
    std::vector<PointSetRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_json_line(line));
    }
    return out;
}

std::string spectrum_tsv(const SpectrumRow& row) {
    std::ostringstream os;
    os << row.q << '\t' << row.total();
    for (auto& [size, count] : row.counts) os << '\t' << size << ':' << count;
    return os.str();
}

std::string render_svg(const FieldCtx& F, const PointSet& set) {
    const int cell = 20, margin = 10;
    std::uint32_t q = F.q();
    int side = 2 * margin + cell * static_cast<int>(q);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
       << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    for (std::uint32_t i = 0; i <= q; ++i) {
        int o = margin + cell * static_cast<int>(i);
        os << "  <line x1=\"" << margin << "\" y1=\"" << o << "\" x2=\"" << side - margin
           << "\" y2=\"" << o << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        os << "  <line x1=\"" << o << "\" y1=\"" << margin << "\" x2=\"" << o << "\" y2=\""
           << side - margin << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    }
    for (const Point& pt : set.points()) {
        int cx = margin + cell * static_cast<int>(pt.x) + cell / 2;
        int cy = side - (margin + cell * static_cast<int>(pt.y) + cell / 2);
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell / 3
           << "\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const FieldCtx& F, const PointSet& set) {
    std::uint32_t q = F.q();
    std::vector<std::string> grid(q, std::string(q, '.'));
    for (const Point& pt : set.points()) grid[pt.y][pt.x] = '*';
    std::ostringstream os;
    for (std::uint32_t row = q; row-- > 0;) os << grid[row] << '\n';
    return os.str();
}

} // namespace ips
