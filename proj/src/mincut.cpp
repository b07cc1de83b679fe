#include "tspgap/mincut.hpp"

#include <algorithm>
#include <limits>

namespace tspgap {

GlobalCut global_min_cut(int num_vertices, const std::vector<WeightedEdge>& edges) {
    if (num_vertices < 2) throw PreconditionError("global_min_cut: need at least two vertices");
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices || e.u == e.v)
            throw PreconditionError("global_min_cut: invalid edge");
        if (e.weight < 0.0) throw PreconditionError("global_min_cut: negative edge weight");
    }

    std::vector<std::vector<double>> w(num_vertices, std::vector<double>(num_vertices, 0.0));
    for (const auto& e : edges) {
        w[e.u][e.v] += e.weight;
        w[e.v][e.u] += e.weight;
    }

    // A disconnected support graph has a zero cut; report the component of
    // the smallest vertex directly.
    {
        std::vector<bool> seen(num_vertices, false);
        std::vector<int> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < num_vertices; ++v) {
                if (!seen[v] && w[u][v] > 0.0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::vector<int> component;
        for (int v = 0; v < num_vertices; ++v)
            if (seen[v]) component.push_back(v);
        if (static_cast<int>(component.size()) != num_vertices) return {0.0, component};
    }

    // Stoer-Wagner: repeat maximum adjacency search, record the cut of the
    // phase, merge the last two vertices.
    std::vector<std::vector<int>> group(num_vertices);
    for (int v = 0; v < num_vertices; ++v) group[v] = {v};
    std::vector<int> active(num_vertices);
    for (int v = 0; v < num_vertices; ++v) active[v] = v;

    GlobalCut best;
    best.weight = std::numeric_limits<double>::infinity();

    while (active.size() > 1) {
        const int k = static_cast<int>(active.size());
        std::vector<double> attach(k, 0.0);
        std::vector<bool> added(k, false);
        int prev = -1, last = -1;
        for (int step = 0; step < k; ++step) {
            int pick = -1;
            for (int i = 0; i < k; ++i)
                if (!added[i] && (pick < 0 || attach[i] > attach[pick])) pick = i;
            added[pick] = true;
            prev = last;
            last = pick;
            for (int i = 0; i < k; ++i)
                if (!added[i]) attach[i] += w[active[pick]][active[i]];
        }

        const int s = active[prev];
        const int t = active[last];
        const double phase_cut = attach[last];
        if (phase_cut < best.weight) {
            best.weight = phase_cut;
            best.side = group[t];
        }

        // Merge t into s.
        for (int i = 0; i < k; ++i) {
            const int v = active[i];
            if (v == s || v == t) continue;
            w[s][v] += w[t][v];
            w[v][s] = w[s][v];
        }
        group[s].insert(group[s].end(), group[t].begin(), group[t].end());
        active.erase(active.begin() + last);
    }

    std::sort(best.side.begin(), best.side.end());
    return best;
}

}  // namespace tspgap
