#include <cmath>

#include "doctest.h"
#include "tspgap/instance.hpp"

using namespace tspgap;
using Kind = VertexLabel::Kind;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("tetrahedron instance counts and coordinates") {
    const Instance inst = build_tetrahedron(9, 5);
    CHECK(inst.size() == 40);  // 3(9+5) - 2

    // a_0 = B = (9, 0), c_0 = A = (0, 0)
    const int a0 = *inst.find({Kind::BaseA, 0});
    const int c0 = *inst.find({Kind::BaseC, 0});
    CHECK(inst.point(a0).x() == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(inst.point(a0).y() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inst.point(c0).norm() == doctest::Approx(0.0).epsilon(1e-12));

    // Explicit coordinate block, spot checks.
    const int a3 = *inst.find({Kind::BaseA, 3});
    CHECK(inst.point(a3).x() == doctest::Approx(9.0 - 1.5).epsilon(1e-12));
    CHECK(inst.point(a3).y() == doctest::Approx(3.0 * kSqrt3 / 2.0).epsilon(1e-12));
    const int e2 = *inst.find({Kind::InternalE, 2});
    CHECK(inst.point(e2).x() == doctest::Approx(2.0 * 9.0 / 10.0).epsilon(1e-12));
    CHECK(inst.point(e2).y() == doctest::Approx(2.0 * 9.0 / (2.0 * kSqrt3 * 5.0)).epsilon(1e-12));
}

TEST_CASE("smallest tetrahedron collapses aliases") {
    const Instance inst = build_tetrahedron(2, 1);
    CHECK(inst.size() == 7);  // A, B, C, M, c_1, a_1, b_1
    CHECK(inst.find({Kind::InternalE, 0}) == inst.find({Kind::BaseC, 0}));
    CHECK(inst.find({Kind::InternalF, 0}) == inst.find({Kind::BaseA, 0}));
    CHECK(inst.find({Kind::InternalG, 0}) == inst.find({Kind::BaseB, 0}));
    CHECK(inst.find({Kind::InternalE, 1}) == inst.find({Kind::InternalG, 1}));
    CHECK(inst.find({Kind::BaseB, 2}) == inst.find({Kind::BaseC, 0}));
    CHECK(inst.find({Kind::BaseC, 2}) == inst.find({Kind::BaseA, 0}));
    CHECK(inst.find({Kind::BaseA, 2}) == inst.find({Kind::BaseB, 0}));
}

TEST_CASE("tetrahedron rejects degenerate parameters") {
    CHECK_THROWS_AS(build_tetrahedron(1, 5), PreconditionError);
    CHECK_THROWS_AS(build_tetrahedron(5, 0), PreconditionError);
}

TEST_CASE("internal spacing") {
    CHECK(internal_spacing(9, 5) == doctest::Approx(9.0 / (5.0 * kSqrt3)).epsilon(1e-12));
    CHECK(internal_spacing(48, 24) == doctest::Approx(2.0 / kSqrt3).epsilon(1e-12));
    CHECK(internal_spacing(3, 3) == doctest::Approx(1.0 / kSqrt3).epsilon(1e-12));
}

TEST_CASE("removal threshold") {
    CHECK(removal_threshold(1.0) == doctest::Approx(10.0));
    CHECK(removal_threshold(2.0) == doctest::Approx(12.0));
    CHECK(removal_threshold(internal_spacing(48, 24)) == doctest::Approx(10.0));
}

TEST_CASE("first retained ring") {
    CHECK(first_retained_ring(48, 24) == 9);
    CHECK(first_retained_ring(40, 22) == 10);  // ceil(10 / (40/(22 sqrt(3)))) = ceil(9.526)

    // Strict removal: rings at exactly the threshold stay, the ring below the
    // first retained one is strictly inside the removal radius.
    for (int n : {40, 48, 60, 80}) {
        for (int m : {22, 24, 30, 40}) {
            const double spacing = internal_spacing(n, m);
            const double threshold = removal_threshold(spacing);
            const int ring0 = first_retained_ring(n, m);
            CHECK(ring0 * spacing >= threshold - 1e-9);
            CHECK((ring0 - 1) * spacing < threshold);
        }
    }
}

TEST_CASE("modified tetrahedron counts and removal properties") {
    const Instance inst = build_modified_tetrahedron(48, 24);
    CHECK(inst.first_ring() == 9);
    CHECK(inst.size() == 3 * 48 + 1 + 3 * (24 - 9));  // 190

    // Property: every retained internal vertex is at distance >= threshold
    // from the nearest corner, and >= 5 from every base vertex.
    for (int n : {40, 48}) {
        for (int m : {22, 27}) {
            const Instance t = build_modified_tetrahedron(n, m);
            const double threshold = removal_threshold(t.internal_spacing());
            const int corner_a = *t.find({Kind::BaseC, 0});
            const int corner_b = *t.find({Kind::BaseA, 0});
            const int corner_c = *t.find({Kind::BaseB, 0});
            for (int v = t.base_count(); v < t.size(); ++v) {
                const double corner_dist =
                    std::min({t.dist(v, corner_a), t.dist(v, corner_b), t.dist(v, corner_c)});
                CHECK(corner_dist >= threshold - 1e-9);
                for (int b = 0; b < t.base_count(); ++b) CHECK(t.dist(v, b) >= 5.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("modified tetrahedron rejects parameters below the guarantee") {
    CHECK_THROWS_AS(build_modified_tetrahedron(39, 22), PreconditionError);
    CHECK_THROWS_AS(build_modified_tetrahedron(40, 21), PreconditionError);
    CHECK_NOTHROW(build_modified_tetrahedron_forced(24, 18));
}

TEST_CASE("modified instance is a coordinate subset of the full instance") {
    const Instance full = build_tetrahedron(48, 24);
    const Instance trimmed = build_modified_tetrahedron(48, 24);
    for (int v = 0; v < trimmed.size(); ++v) {
        const auto u = full.find(trimmed.label(v));
        REQUIRE(u.has_value());
        CHECK((full.point(*u) - trimmed.point(v)).norm() == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("three parallel lines") {
    const Instance a = build_three_lines(34, 0.1);
    CHECK(a.size() == 102);
    double min_y_gap = 1e9;
    for (int u = 0; u < a.size(); ++u)
        for (int v = u + 1; v < a.size(); ++v) {
            const double dy = std::abs(a.point(u).y() - a.point(v).y());
            if (dy > 1e-12) min_y_gap = std::min(min_y_gap, dy);
        }
    CHECK(min_y_gap == doctest::Approx(0.1).epsilon(1e-12));

    const Instance b = build_three_lines(1, 5.0);
    REQUIRE(b.size() == 3);
    CHECK(b.point(0).x() == 0.0);
    CHECK(b.point(1).y() == doctest::Approx(5.0));
    CHECK(b.point(2).y() == doctest::Approx(10.0));

    const Instance c = build_three_lines(2, 1.0);
    CHECK(c.size() == 6);
    CHECK_THROWS_AS(build_three_lines(2, 0.0), PreconditionError);
    CHECK_THROWS_AS(build_three_lines(0, 1.0), PreconditionError);
}

TEST_CASE("hard benchmark size selection") {
    CHECK(hard_params_for_size(214) == std::pair<int, int>(60, 12));
    CHECK(hard_params_for_size(1000) == std::pair<int, int>(296, 38));
    CHECK(hard_params_for_size(250) == std::pair<int, int>(71, 13));
    CHECK_THROWS_AS(hard_params_for_size(213), PreconditionError);
    CHECK_THROWS_AS(hard_params_for_size(49), PreconditionError);

    for (int N = 52; N <= 2002; N += 3) {
        const auto [n, m] = hard_params_for_size(N);
        CHECK(3 * (n + m) - 2 == N);
        CHECK(n >= 2);
        CHECK(m >= 1);
    }
}

TEST_CASE("base and internal spacing invariants on a grid") {
    int combos = 0;
    for (int n : {2, 5, 9, 17, 33}) {
        for (int m : {1, 5, 12, 24}) {
            ++combos;
            const Instance inst = build_tetrahedron(n, m);
            CHECK(inst.size() == 3 * (n + m) - 2);
            const double spacing = inst.internal_spacing();

            for (Kind kind : {Kind::BaseA, Kind::BaseB, Kind::BaseC}) {
                for (int i = 0; i < n; ++i) {
                    const int u = *inst.find({kind, i});
                    const int v = *inst.find({kind, i + 1});
                    CHECK(std::abs(inst.dist(u, v) - 1.0) <= 1e-9);
                }
            }
            for (Kind kind : {Kind::InternalE, Kind::InternalF, Kind::InternalG}) {
                for (int j = 0; j < m; ++j) {
                    const int u = *inst.find({kind, j});
                    const int v = *inst.find({kind, j + 1});
                    CHECK(std::abs(inst.dist(u, v) - spacing) <= 1e-9);
                }
            }

            const int center = *inst.find({Kind::InternalG, m});
            for (Kind corner_side : {Kind::BaseA, Kind::BaseB, Kind::BaseC}) {
                const int corner = *inst.find({corner_side, 0});
                CHECK(std::abs(inst.dist(corner, center) - n / kSqrt3) <= 1e-9);
            }

            // All points pairwise distinct.
            double min_pair = 1e18;
            for (int u = 0; u < inst.size(); ++u)
                for (int v = u + 1; v < inst.size(); ++v) min_pair = std::min(min_pair, inst.dist(u, v));
            CHECK(min_pair > 0.0);
        }
    }
    CHECK(combos == 20);
}
