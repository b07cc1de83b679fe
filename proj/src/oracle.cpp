#include "tspgap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tspgap {

namespace {

Eigen::MatrixXd distance_matrix(const Instance& inst, Metric metric) {
    const int count = inst.size();
    Eigen::MatrixXd d(count, count);
    for (int u = 0; u < count; ++u) {
        d(u, u) = 0.0;
        for (int v = u + 1; v < count; ++v) d(u, v) = d(v, u) = metric_dist(inst, u, v, metric);
    }
    return d;
}

// Start at vertex 0 and fix the orientation: the vertex after 0 gets the
// smaller id of the two neighbors of 0. Makes equal-length results from
// different searches bit-comparable.
std::vector<int> canonical_cycle(std::vector<int> order) {
    const int k = static_cast<int>(order.size());
    int at = 0;
    while (order[at] != 0) ++at;
    std::vector<int> rotated(k);
    for (int i = 0; i < k; ++i) rotated[i] = order[(at + i) % k];
    if (k > 2 && rotated[1] > rotated[k - 1]) std::reverse(rotated.begin() + 1, rotated.end());
    return rotated;
}

}  // namespace

OracleResult held_karp_opt(const Instance& inst, Metric metric) {
    const int count = inst.size();
    if (count > 20) throw SizeGuardError("held_karp_opt: limited to 20 vertices");
    if (count < 3) throw PreconditionError("held_karp_opt: need at least three vertices");
    const Eigen::MatrixXd d = distance_matrix(inst, metric);

    // dp[mask][last]: cheapest path from vertex 0 through the mask over
    // vertices 1..count-1, ending at last (1-based shifted by one).
    const int rest = count - 1;
    const size_t masks = size_t{1} << rest;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(masks * rest, inf);
    std::vector<int8_t> parent(masks * rest, -1);

    for (int v = 0; v < rest; ++v) dp[(size_t{1} << v) * rest + v] = d(0, v + 1);

    for (size_t mask = 1; mask < masks; ++mask) {
        for (int last = 0; last < rest; ++last) {
            if (!(mask & (size_t{1} << last))) continue;
            const double cur = dp[mask * rest + last];
            if (cur == inf) continue;
            for (int next = 0; next < rest; ++next) {
                if (mask & (size_t{1} << next)) continue;
                const size_t nmask = mask | (size_t{1} << next);
                const double cand = cur + d(last + 1, next + 1);
                if (cand < dp[nmask * rest + next]) {
                    dp[nmask * rest + next] = cand;
                    parent[nmask * rest + next] = static_cast<int8_t>(last);
                }
            }
        }
    }

    const size_t full = masks - 1;
    int best_last = -1;
    double best = inf;
    for (int last = 0; last < rest; ++last) {
        const double cand = dp[full * rest + last] + d(last + 1, 0);
        if (cand < best) {
            best = cand;
            best_last = last;
        }
    }

    std::vector<int> order;
    order.reserve(count);
    size_t mask = full;
    int last = best_last;
    while (last >= 0) {
        order.push_back(last + 1);
        const int prev = parent[mask * rest + last];
        mask &= ~(size_t{1} << last);
        last = prev;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());

    OracleResult result;
    result.tour = make_tour(inst, canonical_cycle(std::move(order)));
    result.length = tour_length(result.tour, metric);
    result.method = OracleMethod::HeldKarpDP;
    return result;
}

OracleResult permutation_opt(const Instance& inst, Metric metric) {
    const int count = inst.size();
    if (count > 10) throw SizeGuardError("permutation_opt: limited to 10 vertices");
    if (count < 3) throw PreconditionError("permutation_opt: need at least three vertices");
    const Eigen::MatrixXd d = distance_matrix(inst, metric);

    std::vector<int> perm(count - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best_order;
    double best = std::numeric_limits<double>::infinity();
    do {
        if (perm.front() > perm.back()) continue;  // each cyclic order once
        double len = d(0, perm.front());
        for (int i = 0; i + 1 < count - 1; ++i) len += d(perm[i], perm[i + 1]);
        len += d(perm.back(), 0);
        if (len < best) {
            best = len;
            best_order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    best_order.insert(best_order.begin(), 0);
    OracleResult result;
    result.tour = make_tour(inst, canonical_cycle(std::move(best_order)));
    result.length = tour_length(result.tour, metric);
    result.method = OracleMethod::Permutation;
    return result;
}

Tour two_opt_improve(const Tour& tour, Metric metric) {
    const Instance& inst = *tour.instance;
    const int count = tour.size();
    if (count < 4) return tour;
    const Eigen::MatrixXd d = distance_matrix(inst, metric);

    // Candidate lists: the 16 nearest neighbors, ties by vertex id.
    const int k_neighbors = std::min(16, count - 1);
    std::vector<std::vector<int>> candidates(count);
    {
        std::vector<std::pair<double, int>> by_dist(count - 1);
        for (int v = 0; v < count; ++v) {
            int at = 0;
            for (int u = 0; u < count; ++u)
                if (u != v) by_dist[at++] = {d(v, u), u};
            std::sort(by_dist.begin(), by_dist.end());
            candidates[v].assign(k_neighbors, -1);
            for (int i = 0; i < k_neighbors; ++i) candidates[v][i] = by_dist[i].second;
        }
    }

    std::vector<int> order = tour.order;
    std::vector<int> pos(count);
    for (int i = 0; i < count; ++i) pos[order[i]] = i;

    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < count && !improved; ++i) {
            const int u = order[i];
            const int u_next = order[(i + 1) % count];
            const double d_u = d(u, u_next);
            for (int v : candidates[u]) {
                if (d(u, v) >= d_u) break;  // sorted candidates: no gain possible
                const int j = pos[v];
                const int v_next = order[(j + 1) % count];
                if (v == u_next || v_next == u) continue;
                const double delta = d_u + d(v, v_next) - d(u, v) - d(u_next, v_next);
                if (delta > 1e-12) {
                    // Reverse the segment between u_next and v (inclusive).
                    int lo = (i + 1) % count;
                    int hi = j;
                    const int span = (hi - lo + count) % count + 1;
                    for (int s = 0; s < span / 2; ++s) {
                        const int a = (lo + s) % count;
                        const int b = (hi - s + count) % count;
                        std::swap(order[a], order[b]);
                        pos[order[a]] = a;
                        pos[order[b]] = b;
                    }
                    improved = true;
                    break;
                }
            }
        }
    }
    return make_tour(inst, std::move(order));
}

}  // namespace tspgap
