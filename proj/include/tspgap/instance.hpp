#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "tspgap/errors.hpp"

namespace tspgap {

enum class Family { Tetra, TetraModified, ThreeLines, Imported };

std::string family_name(Family f);

// Symbolic identity of a point. Base vertices sit on the three sides of the
// outer equilateral triangle, internal vertices on the segments joining the
// corners to the center. Corner and center aliases resolve to one canonical
// vertex each:
//   A = c_0 = b_n = e_0,  B = a_0 = c_n = f_0,  C = b_0 = a_n = g_0,
//   M = e_m = f_m = g_m   (stored as c_0, a_0, b_0 and g_m respectively).
struct VertexLabel {
    enum class Kind { BaseA, BaseB, BaseC, InternalE, InternalF, InternalG, Line };
    Kind kind = Kind::Line;
    int index = 0;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& label);

// A labeled point set in the plane. Coordinates are in base-edge units for
// the tetrahedron families (consecutive base vertices at distance 1) and are
// never rounded here; rounding exists only in the TSPLIB layer.
class Instance {
public:
    Family family() const { return family_; }
    const std::string& name() const { return name_; }

    int n() const { return n_; }
    int m() const { return m_; }
    double line_gap() const { return line_gap_; }

    // Spacing of consecutive internal vertices, n / (sqrt(3) * m).
    double internal_spacing() const { return internal_spacing_; }
    // Smallest ring index retained on the internal segments (1 for Tetra,
    // the removal-rule index for TetraModified).
    int first_ring() const { return first_ring_; }

    int size() const { return static_cast<int>(points_.size()); }
    const Eigen::Vector2d& point(int v) const { return points_[v]; }
    const VertexLabel& label(int v) const { return labels_[v]; }

    // Resolves aliased corner/center labels to the canonical vertex.
    std::optional<int> find(VertexLabel label) const;

    double dist(int u, int v) const { return (points_[u] - points_[v]).norm(); }

    // Number of base vertices (3n for the tetrahedron families, 0 otherwise).
    int base_count() const { return base_count_; }
    bool is_base(int v) const { return v < base_count_; }

    // Cyclic counterclockwise position of a base vertex; vertices are stored
    // so that rank == vertex index for base vertices.
    int base_rank(int v) const { return v; }

    static Instance tetra(Family family, std::string name, int n, int m, int first_ring,
                          std::vector<VertexLabel> labels, std::vector<Eigen::Vector2d> points);
    static Instance lines(std::string name, int n, double d, std::vector<VertexLabel> labels,
                          std::vector<Eigen::Vector2d> points);
    static Instance imported(std::string name, std::vector<Eigen::Vector2d> points);

private:
    Family family_ = Family::Imported;
    std::string name_;
    int n_ = 0;
    int m_ = 0;
    double line_gap_ = 0.0;
    double internal_spacing_ = 0.0;
    int first_ring_ = 0;
    int base_count_ = 0;
    std::vector<VertexLabel> labels_;
    std::vector<Eigen::Vector2d> points_;
};

// Exact coordinates of a (possibly aliased) vertex of T_{n,m}.
Eigen::Vector2d tetra_point(int n, int m, VertexLabel label);

// Spacing of consecutive internal vertices of T_{n,m}: n / (sqrt(3) * m).
double internal_spacing(int n, int m);

// Distance below which internal vertices near a corner are removed when
// building the modified instance: max{10, 4 + 4 * spacing}.
double removal_threshold(double spacing);

// Smallest ring index j whose internal vertices survive the removal rule
// (vertices at exactly the threshold distance are kept).
int first_retained_ring(int n, int m);

// The tetrahedron instance T_{n,m}: an equilateral triangle with n unit
// subdivisions per side and m subdivisions per corner-to-center segment,
// 3(n+m) - 2 vertices in total.
Instance build_tetrahedron(int n, int m);

// The modified instance: T_{n,m} with all internal vertices closer than
// removal_threshold to a corner removed. Requires n >= 40 and m >= 22 so that
// at least four internal vertices survive.
Instance build_modified_tetrahedron(int n, int m);

// Same construction without the n >= 40, m >= 22 guard, for rendering
// sub-threshold instances; the structural guarantees do not hold for these.
Instance build_modified_tetrahedron_forced(int n, int m);

// Three parallel lines at vertical distance d with n unit-spaced points each,
// all starting at x = 0.
Instance build_three_lines(int n, double d);

// The (n, m) choice that makes an N-vertex tetrahedron instance hard for
// branch-and-cut solvers: n = floor((3N - 40)/10), m = (N+2)/3 - n.
// Requires N == 1 (mod 3) and N >= 50.
std::pair<int, int> hard_params_for_size(int N);

}  // namespace tspgap
