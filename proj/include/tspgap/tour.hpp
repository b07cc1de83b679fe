#pragma once

#include <string>
#include <vector>

#include "tspgap/instance.hpp"

namespace tspgap {

enum class Metric { ExactEuclid, Euc2dRounded };

// Pairwise distance under the chosen metric. Euc2dRounded mirrors what an
// external solver sees on the exported file: coordinates scaled and rounded
// first, then the TSPLIB nint distance (lengths are in scaled units).
double metric_dist(const Instance& inst, int u, int v, Metric metric, int64_t scale = 10000);

// Cyclic visiting order of all vertices of an instance.
struct Tour {
    const Instance* instance = nullptr;
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
};

// Subpath between two consecutive base vertices that visits at least one
// internal vertex. The first and last internal vertex are the connection
// vertices; the side holding the two base endpoints is the main side.
struct Trip {
    std::vector<int> path;  // base endpoint, internal vertices..., base endpoint
    int side = 0;           // 0 = c, 1 = a, 2 = b
    int first_connection = -1;
    int last_connection = -1;
};

struct TripDecomposition {
    std::vector<Trip> trips;
    std::vector<std::pair<int, int>> base_edges;  // direct edges between consecutive base vertices
};

char side_letter(int side);

// Checks `order` is a permutation of 0..size-1 and wraps it in a Tour.
Tour make_tour(const Instance& inst, std::vector<int> order);

double tour_length(const Tour& tour, Metric metric = Metric::ExactEuclid, int64_t scale = 10000);

// True iff no two edges intersect except consecutive edges at their shared
// vertex; collinear overlap counts as an intersection.
bool is_simple_polygon(const Tour& tour);

// True iff the tour visits the vertices on the convex hull boundary in their
// cyclic order (up to rotation and reflection). For the tetrahedron families
// the hull boundary vertices are exactly the base vertices.
bool hull_order_ok(const Tour& tour);

// Splits a hull-ordered tour of a tetrahedron-family instance into trips and
// direct base edges. Throws PreconditionError if the tour violates hull order.
TripDecomposition decompose_trips(const Tour& tour);

// Validates the pseudo-tour definition on an edge multiset over a
// tetrahedron-family instance: every internal vertex is covered by a trip,
// and for any two consecutive base vertices a trip spans them iff no direct
// edge connects them. A structure that is a single tour is not a pseudo-tour.
bool is_pseudo_tour(const Instance& inst, const std::vector<std::pair<int, int>>& edges);

// The canonical single-trip optimum tour of a modified tetrahedron instance:
// one trip with main side c that enters at ring first_ring on e, ascends to
// the center, descends g, jumps to f_{m-1}, descends f and exits; all other
// base vertices joined by unit edges counterclockwise.
Tour build_optimal_tour(const Instance& inst);

// Closed-form length of that tour, evaluated on exact coordinates.
double optimal_tour_length(int n, int m);

// Total length of the unit and spacing-length edges a tour of the modified
// instance can contain: 3n - 1 + (3(m - first_ring) - 1) * spacing.
double short_edge_budget(int n, int m);

// One-cycle text format: whitespace-separated 1-based vertex ids, one line.
std::string tour_to_text(const Tour& tour);
Tour tour_from_text(const Instance& inst, const std::string& line);

}  // namespace tspgap
