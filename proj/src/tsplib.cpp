#include "tspgap/tsplib.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace tspgap {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Splits "KEY : value" / "KEY: value" / bare "KEY" header lines.
std::pair<std::string, std::string> split_header(const std::string& line) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) return {trim(line), ""};
    return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

}  // namespace

int64_t scale_coordinate(double value, int64_t scale) {
    const double scaled = value * static_cast<double>(scale);
    const double rounded = scaled >= 0.0 ? std::floor(scaled + 0.5) : -std::floor(-scaled + 0.5);
    if (std::abs(rounded) > static_cast<double>(std::numeric_limits<int32_t>::max()))
        throw PreconditionError("export_instance: scaled coordinate overflows the integer range");
    return static_cast<int64_t>(rounded);
}

TsplibFile export_instance(const Instance& inst, int64_t scale) {
    if (scale < 1) throw PreconditionError("export_instance: scale must be >= 1");
    TsplibFile file;
    file.name = inst.name();
    file.dimension = inst.size();
    for (int v = 0; v < inst.size(); ++v) {
        const auto& p = inst.point(v);
        file.coords.push_back({v + 1, scale_coordinate(p.x(), scale), scale_coordinate(p.y(), scale)});
    }
    return file;
}

std::string render(const TsplibFile& file) {
    std::ostringstream out;
    out << "NAME: " << file.name << "\n";
    out << "TYPE: TSP\n";
    out << "DIMENSION: " << file.dimension << "\n";
    out << "EDGE_WEIGHT_TYPE: " << file.edge_weight_type << "\n";
    out << "NODE_COORD_SECTION\n";
    for (const auto& row : file.coords) out << row[0] << " " << row[1] << " " << row[2] << "\n";
    out << "EOF\n";
    return out.str();
}

Instance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name = "imported";
    int dimension = -1;
    bool saw_coord_section = false;
    std::vector<Eigen::Vector2d> points;

    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto [key, value] = split_header(stripped);
        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (value != "TSP") throw PreconditionError("parse_tsplib: unsupported TYPE " + value);
        } else if (key == "COMMENT") {
            // ignored
        } else if (key == "DIMENSION") {
            dimension = std::stoi(value);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EUC_2D")
                throw PreconditionError("parse_tsplib: unsupported EDGE_WEIGHT_TYPE " + value);
        } else if (key == "NODE_COORD_SECTION") {
            saw_coord_section = true;
            break;
        } else {
            // Unknown headers are skipped for compatibility with files in the wild.
        }
    }
    if (!saw_coord_section) throw PreconditionError("parse_tsplib: missing NODE_COORD_SECTION");
    if (dimension <= 0) throw PreconditionError("parse_tsplib: missing or invalid DIMENSION");

    points.reserve(dimension);
    int expected_id = 1;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (stripped == "EOF") break;
        std::istringstream row(stripped);
        long long id = 0;
        double x = 0.0, y = 0.0;
        if (!(row >> id >> x >> y))
            throw PreconditionError("parse_tsplib: malformed coordinate row: " + stripped);
        if (id != expected_id)
            throw PreconditionError("parse_tsplib: node ids must be 1..DIMENSION consecutive");
        ++expected_id;
        points.emplace_back(x, y);
        if (static_cast<int>(points.size()) == dimension) break;
    }
    if (static_cast<int>(points.size()) != dimension)
        throw PreconditionError("parse_tsplib: coordinate count does not match DIMENSION");

    return Instance::imported(std::move(name), std::move(points));
}

int64_t euc2d_distance(int64_t px, int64_t py, int64_t qx, int64_t qy) {
    const double dx = static_cast<double>(px - qx);
    const double dy = static_cast<double>(py - qy);
    return static_cast<int64_t>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

}  // namespace tspgap
