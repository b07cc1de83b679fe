#include "tspgap/tour.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tspgap/tsplib.hpp"

namespace tspgap {

namespace {

// Orientation sign of the triangle (a, b, c) with a tolerance relative to the
// magnitude of the cross-product terms; raw coordinates stay well below 1e4
// here, so the relative guard absorbs the rounding of the sqrt(3) grid.
int orient(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
    const double t1 = (b.x() - a.x()) * (c.y() - a.y());
    const double t2 = (b.y() - a.y()) * (c.x() - a.x());
    const double det = t1 - t2;
    const double scale = std::abs(t1) + std::abs(t2);
    if (std::abs(det) <= 1e-12 * std::max(scale, 1.0)) return 0;
    return det > 0 ? 1 : -1;
}

// Assumes p collinear with [a, b]; checks containment with a small slack.
bool on_segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& p) {
    const double eps = 1e-9;
    return p.x() >= std::min(a.x(), b.x()) - eps && p.x() <= std::max(a.x(), b.x()) + eps &&
           p.y() >= std::min(a.y(), b.y()) - eps && p.y() <= std::max(a.y(), b.y()) + eps;
}

// Any shared point counts as an intersection, including collinear overlap.
bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& q1,
                        const Eigen::Vector2d& p2, const Eigen::Vector2d& q2) {
    const int o1 = orient(p1, q1, p2);
    const int o2 = orient(p1, q1, q2);
    const int o3 = orient(p2, q2, p1);
    const int o4 = orient(p2, q2, q1);

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    if (o1 == 0 && on_segment(p1, q1, p2)) return true;
    if (o2 == 0 && on_segment(p1, q1, q2)) return true;
    if (o3 == 0 && on_segment(p2, q2, p1)) return true;
    if (o4 == 0 && on_segment(p2, q2, q1)) return true;
    return false;
}

// Strict convex hull corners, counterclockwise (collinear points dropped).
std::vector<int> hull_corners(const Instance& inst) {
    const int k = inst.size();
    std::vector<int> ids(k);
    for (int i = 0; i < k; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int u, int v) {
        const auto& p = inst.point(u);
        const auto& q = inst.point(v);
        if (p.x() != q.x()) return p.x() < q.x();
        return p.y() < q.y();
    });

    auto build = [&](const std::vector<int>& seq) {
        std::vector<int> chain;
        for (int v : seq) {
            while (chain.size() >= 2 &&
                   orient(inst.point(chain[chain.size() - 2]), inst.point(chain.back()), inst.point(v)) <= 0)
                chain.pop_back();
            chain.push_back(v);
        }
        return chain;
    };

    std::vector<int> lower = build(ids);
    std::reverse(ids.begin(), ids.end());
    std::vector<int> upper = build(ids);
    if (lower.size() < 2) return lower;
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

// All vertices on the hull boundary in counterclockwise cyclic order,
// including points lying on hull edges between corners.
std::vector<int> hull_boundary_order(const Instance& inst) {
    std::vector<int> corners = hull_corners(inst);
    if (corners.size() < 3) return {};

    std::vector<bool> is_corner(inst.size(), false);
    for (int v : corners) is_corner[v] = true;

    std::vector<int> boundary;
    const int h = static_cast<int>(corners.size());
    for (int i = 0; i < h; ++i) {
        const int a = corners[i];
        const int b = corners[(i + 1) % h];
        boundary.push_back(a);
        const Eigen::Vector2d pa = inst.point(a);
        const Eigen::Vector2d dir = inst.point(b) - pa;
        std::vector<std::pair<double, int>> on_edge;
        for (int v = 0; v < inst.size(); ++v) {
            if (is_corner[v]) continue;
            if (orient(pa, inst.point(b), inst.point(v)) != 0) continue;
            if (!on_segment(pa, inst.point(b), inst.point(v))) continue;
            on_edge.emplace_back(dir.dot(inst.point(v) - pa), v);
        }
        std::sort(on_edge.begin(), on_edge.end());
        for (const auto& [t, v] : on_edge) boundary.push_back(v);
    }
    return boundary;
}

// True iff `sub` equals `ref` as a cyclic sequence up to rotation/reflection.
bool cyclic_equal(const std::vector<int>& sub, const std::vector<int>& ref) {
    if (sub.size() != ref.size()) return false;
    const int k = static_cast<int>(sub.size());
    if (k <= 2) return true;
    std::vector<int> pos_in_ref(*std::max_element(ref.begin(), ref.end()) + 1, -1);
    for (int i = 0; i < k; ++i) pos_in_ref[ref[i]] = i;
    for (int v : sub)
        if (v >= static_cast<int>(pos_in_ref.size()) || pos_in_ref[v] < 0) return false;

    for (int dir : {1, -1}) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const int a = pos_in_ref[sub[i]];
            const int b = pos_in_ref[sub[(i + 1) % k]];
            if ((a + dir + k) % k != b) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

double metric_dist(const Instance& inst, int u, int v, Metric metric, int64_t scale) {
    if (metric == Metric::ExactEuclid) return inst.dist(u, v);
    const auto& p = inst.point(u);
    const auto& q = inst.point(v);
    return static_cast<double>(euc2d_distance(scale_coordinate(p.x(), scale), scale_coordinate(p.y(), scale),
                                              scale_coordinate(q.x(), scale), scale_coordinate(q.y(), scale)));
}

char side_letter(int side) { return side == 0 ? 'c' : (side == 1 ? 'a' : 'b'); }

Tour make_tour(const Instance& inst, std::vector<int> order) {
    if (static_cast<int>(order.size()) != inst.size())
        throw PreconditionError("make_tour: order must visit every vertex exactly once");
    std::vector<bool> seen(inst.size(), false);
    for (int v : order) {
        if (v < 0 || v >= inst.size() || seen[v])
            throw PreconditionError("make_tour: order is not a permutation of the vertices");
        seen[v] = true;
    }
    return Tour{&inst, std::move(order)};
}

double tour_length(const Tour& tour, Metric metric, int64_t scale) {
    const Instance& inst = *tour.instance;
    double total = 0.0;
    const int k = tour.size();
    for (int i = 0; i < k; ++i) total += metric_dist(inst, tour.order[i], tour.order[(i + 1) % k], metric, scale);
    return total;
}

bool is_simple_polygon(const Tour& tour) {
    const Instance& inst = *tour.instance;
    const int k = tour.size();
    if (k < 3) return false;

    auto pt = [&](int i) -> const Eigen::Vector2d& { return inst.point(tour.order[i % k]); };

    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            if (adjacent) {
                // Consecutive edges may only meet at the shared vertex; a
                // collinear continuation back over the same ray overlaps.
                const int shared = (j == i + 1) ? j : 0;
                const Eigen::Vector2d& s = pt(shared);
                const Eigen::Vector2d& u = (j == i + 1) ? pt(i) : pt(1);
                const Eigen::Vector2d& w = (j == i + 1) ? pt(j + 1) : pt(k - 1);
                if (orient(s, u, w) == 0 && (u - s).dot(w - s) > 0) return false;
            } else {
                if (segments_intersect(pt(i), pt(i + 1), pt(j), pt(j + 1))) return false;
            }
        }
    }
    return true;
}

bool hull_order_ok(const Tour& tour) {
    const Instance& inst = *tour.instance;
    if (inst.family() == Family::Tetra || inst.family() == Family::TetraModified) {
        std::vector<int> base_seq;
        for (int v : tour.order)
            if (inst.is_base(v)) base_seq.push_back(v);
        const int bc = inst.base_count();
        if (static_cast<int>(base_seq.size()) != bc) return false;
        for (int dir : {1, -1}) {
            bool ok = true;
            for (int i = 0; i < bc && ok; ++i) {
                const int a = base_seq[i];
                const int b = base_seq[(i + 1) % bc];
                if ((a + dir + bc) % bc != b) ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    std::vector<int> boundary = hull_boundary_order(inst);
    if (boundary.size() < 3) return true;  // degenerate hull, vacuous
    std::vector<bool> on_boundary(inst.size(), false);
    for (int v : boundary) on_boundary[v] = true;
    std::vector<int> restricted;
    for (int v : tour.order)
        if (on_boundary[v]) restricted.push_back(v);
    return cyclic_equal(restricted, boundary);
}

TripDecomposition decompose_trips(const Tour& tour) {
    const Instance& inst = *tour.instance;
    if (inst.family() != Family::Tetra && inst.family() != Family::TetraModified)
        throw PreconditionError("decompose_trips: requires a tetrahedron-family instance");
    if (!hull_order_ok(tour))
        throw PreconditionError("decompose_trips: tour does not visit base vertices in hull order");

    const int k = tour.size();
    const int bc = inst.base_count();

    // Normalize: start at a base vertex and traverse with ascending base rank
    // (counterclockwise).
    int start = 0;
    while (!inst.is_base(tour.order[start])) ++start;
    std::vector<int> seq(k);
    for (int i = 0; i < k; ++i) seq[i] = tour.order[(start + i) % k];

    int next_base_pos = 1;
    while (!inst.is_base(seq[next_base_pos])) ++next_base_pos;
    const bool ascending = (seq[0] + 1) % bc == seq[next_base_pos];
    if (!ascending) {
        std::reverse(seq.begin() + 1, seq.end());
        next_base_pos = 1;
        while (!inst.is_base(seq[next_base_pos])) ++next_base_pos;
    }

    TripDecomposition result;
    int pos = 0;
    while (pos < k) {
        const int u = seq[pos];
        int q = pos + 1;
        std::vector<int> internals;
        while (q < k && !inst.is_base(seq[q])) internals.push_back(seq[q++]);
        const int w = seq[q % k];
        if (internals.empty()) {
            result.base_edges.emplace_back(u, w);
        } else {
            Trip trip;
            trip.path.reserve(internals.size() + 2);
            trip.path.push_back(u);
            trip.path.insert(trip.path.end(), internals.begin(), internals.end());
            trip.path.push_back(w);
            trip.side = u / inst.n();
            trip.first_connection = internals.front();
            trip.last_connection = internals.back();
            result.trips.push_back(std::move(trip));
        }
        pos = q;
    }
    return result;
}

bool is_pseudo_tour(const Instance& inst, const std::vector<std::pair<int, int>>& edges) {
    if (inst.family() != Family::Tetra && inst.family() != Family::TetraModified) return false;
    const int bc = inst.base_count();
    const int k = inst.size();

    std::vector<std::vector<std::pair<int, int>>> adj(k);  // (neighbor, edge id)
    std::vector<bool> has_direct_edge(bc, false);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto [u, v] = edges[e];
        if (u < 0 || v < 0 || u >= k || v >= k || u == v) return false;
        if (inst.is_base(u) && inst.is_base(v)) {
            const int lo = std::min(u, v), hi = std::max(u, v);
            if (hi - lo == 1)
                has_direct_edge[lo] = true;
            else if (lo == 0 && hi == bc - 1)
                has_direct_edge[bc - 1] = true;
            else
                return false;  // direct edges join consecutive base vertices only
        }
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    // Internal vertices belong to exactly one trip passing through them.
    for (int v = bc; v < k; ++v)
        if (adj[v].size() != 2) return false;

    // Trace trips from base vertices through internal chains.
    std::vector<bool> used(edges.size(), false);
    std::vector<bool> pair_has_trip(bc, false);
    int traced_internal_edges = 0;
    for (int u = 0; u < bc; ++u) {
        for (const auto& [x, eid] : adj[u]) {
            if (inst.is_base(x) || used[eid]) continue;
            used[eid] = true;
            ++traced_internal_edges;
            int prev = u, cur = x;
            while (!inst.is_base(cur)) {
                int next = -1, next_eid = -1;
                for (const auto& [y, eid2] : adj[cur]) {
                    if (used[eid2]) continue;
                    next = y;
                    next_eid = eid2;
                    break;
                }
                if (next < 0) return false;  // dead end inside a trip
                used[next_eid] = true;
                ++traced_internal_edges;
                prev = cur;
                cur = next;
            }
            (void)prev;
            const int w = cur;
            const int lo = std::min(u, w), hi = std::max(u, w);
            if (hi - lo == 1)
                pair_has_trip[lo] = true;
            else if (lo == 0 && hi == bc - 1)
                pair_has_trip[bc - 1] = true;
            else
                return false;  // trip endpoints must be consecutive base vertices
        }
    }
    // Every non-(base,base) edge must be covered by some traced trip;
    // otherwise internal-only cycles remain.
    int non_base_edges = 0;
    for (const auto& [u, v] : edges)
        if (!(inst.is_base(u) && inst.is_base(v))) ++non_base_edges;
    if (traced_internal_edges != non_base_edges) return false;

    // Spanning condition: a trip spans a consecutive pair iff no direct edge.
    for (int r = 0; r < bc; ++r)
        if (pair_has_trip[r] == has_direct_edge[r]) return false;

    // A single Hamiltonian cycle is a tour, not a pseudo-tour.
    bool all_degree_two = true;
    for (int v = 0; v < k; ++v)
        if (adj[v].size() != 2) all_degree_two = false;
    if (all_degree_two) {
        std::vector<bool> edge_used(edges.size(), false);
        int cur = 0, visited = 1;
        int cur_edge = adj[0].empty() ? -1 : adj[0][0].second;
        edge_used[cur_edge] = true;
        cur = adj[0][0].first;
        while (cur != 0) {
            ++visited;
            int next = -1;
            for (const auto& [y, eid] : adj[cur]) {
                if (edge_used[eid]) continue;
                next = y;
                edge_used[eid] = true;
                break;
            }
            if (next < 0) break;
            cur = next;
        }
        if (cur == 0 && visited == k) return false;
    }
    return true;
}

Tour build_optimal_tour(const Instance& inst) {
    if (inst.family() != Family::TetraModified)
        throw PreconditionError("build_optimal_tour: requires a modified tetrahedron instance");
    const int n = inst.n();
    const int m = inst.m();
    const int ring0 = inst.first_ring();
    if (ring0 > m - 1) throw PreconditionError("build_optimal_tour: no retained internal ring below the center");

    using Kind = VertexLabel::Kind;
    auto id = [&](Kind kind, int index) {
        auto v = inst.find({kind, index});
        if (!v) throw PreconditionError("build_optimal_tour: missing vertex " + to_string({kind, index}));
        return *v;
    };

    const int j = (n - 1) / 2;
    std::vector<int> order;
    order.reserve(inst.size());
    for (int i = 0; i <= j; ++i) order.push_back(id(Kind::BaseC, i));
    for (int r = ring0; r <= m - 1; ++r) order.push_back(id(Kind::InternalE, r));
    order.push_back(id(Kind::InternalG, m));  // center
    for (int r = m - 1; r >= ring0; --r) order.push_back(id(Kind::InternalG, r));
    for (int r = m - 1; r >= ring0; --r) order.push_back(id(Kind::InternalF, r));
    for (int i = j + 1; i < n; ++i) order.push_back(id(Kind::BaseC, i));
    for (int i = 0; i < n; ++i) order.push_back(id(Kind::BaseA, i));
    for (int i = 0; i < n; ++i) order.push_back(id(Kind::BaseB, i));
    return make_tour(inst, std::move(order));
}

double optimal_tour_length(int n, int m) {
    if (n < 40 || m < 22)
        throw PreconditionError("optimal_tour_length: requires n >= 40 and m >= 22");
    const double spacing = internal_spacing(n, m);
    const int ring0 = first_retained_ring(n, m);
    const int j = (n - 1) / 2;

    using Kind = VertexLabel::Kind;
    const Eigen::Vector2d center = tetra_point(n, m, {Kind::InternalG, m});
    const Eigen::Vector2d e0 = tetra_point(n, m, {Kind::InternalE, ring0});
    const Eigen::Vector2d f0 = tetra_point(n, m, {Kind::InternalF, ring0});
    const Eigen::Vector2d g0 = tetra_point(n, m, {Kind::InternalG, ring0});
    const Eigen::Vector2d f_top = tetra_point(n, m, {Kind::InternalF, m - 1});
    const Eigen::Vector2d c_lo = tetra_point(n, m, {Kind::BaseC, j});
    const Eigen::Vector2d c_hi = tetra_point(n, m, {Kind::BaseC, j + 1});

    return 3.0 * n - 1.0 + 3.0 * (center - e0).norm() - spacing + (g0 - f_top).norm() +
           (c_lo - e0).norm() + (c_hi - f0).norm();
}

double short_edge_budget(int n, int m) {
    if (n < 40 || m < 22) throw PreconditionError("short_edge_budget: requires n >= 40 and m >= 22");
    const double spacing = internal_spacing(n, m);
    const int ring0 = first_retained_ring(n, m);
    return 3.0 * n - 1.0 + (3.0 * (m - ring0) - 1.0) * spacing;
}

std::string tour_to_text(const Tour& tour) {
    std::ostringstream out;
    for (int i = 0; i < tour.size(); ++i) {
        if (i) out << ' ';
        out << tour.order[i] + 1;
    }
    out << '\n';
    return out.str();
}

Tour tour_from_text(const Instance& inst, const std::string& line) {
    std::istringstream in(line);
    std::vector<int> order;
    long long id = 0;
    while (in >> id) order.push_back(static_cast<int>(id - 1));
    return make_tour(inst, std::move(order));
}

}  // namespace tspgap
