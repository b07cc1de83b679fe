#pragma once

#include "tspgap/tour.hpp"

namespace tspgap {

enum class OracleMethod { HeldKarpDP, Permutation, TwoOpt };

struct OracleResult {
    Tour tour;
    double length = 0.0;
    OracleMethod method = OracleMethod::HeldKarpDP;
};

// Provably optimal tour by the bitmask dynamic program. Capped at 20 vertices
// (about 20 * 2^20 table entries); larger requests fail loudly.
OracleResult held_karp_opt(const Instance& inst, Metric metric = Metric::ExactEuclid);

// Exhaustive minimum over (|V|-1)!/2 cyclic orders; capped at 10 vertices.
OracleResult permutation_opt(const Instance& inst, Metric metric = Metric::ExactEuclid);

// First-improvement 2-opt with a fixed scan order over candidate lists of the
// 16 nearest neighbors; deterministic, never lengthens the tour.
Tour two_opt_improve(const Tour& tour, Metric metric = Metric::ExactEuclid);

}  // namespace tspgap
