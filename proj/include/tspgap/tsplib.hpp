#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tspgap/instance.hpp"

namespace tspgap {

// In-memory form of a TSPLIB EUC_2D file. Node ids are 1..dimension.
struct TsplibFile {
    std::string name;
    int dimension = 0;
    std::string edge_weight_type = "EUC_2D";
    std::vector<std::array<int64_t, 3>> coords;  // id, x, y
};

// Round half away from zero, the convention used when scaling coordinates.
int64_t scale_coordinate(double value, int64_t scale);

// Scales all coordinates by `scale` and rounds to the nearest integer.
TsplibFile export_instance(const Instance& inst, int64_t scale = 10000);

// Serializes header fields in the canonical order, integer coordinates,
// trailing newline, ASCII only.
std::string render(const TsplibFile& file);

// Parses EUC_2D TSPLIB text; the trailing EOF keyword is optional.
// Any other EDGE_WEIGHT_TYPE is rejected.
Instance parse_tsplib(const std::string& text);

// TSPLIB nint distance: nearest integer to the Euclidean distance, ties
// rounded half up (floor(value + 0.5)).
int64_t euc2d_distance(int64_t px, int64_t py, int64_t qx, int64_t qy);

}  // namespace tspgap
