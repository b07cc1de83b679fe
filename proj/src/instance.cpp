#include "tspgap/instance.hpp"

#include <cmath>
#include <sstream>

namespace tspgap {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Base vertices counterclockwise starting at c_0 = A, then the retained
// internal rings e, f, g by ascending index (M stored once as g_m).
Instance assemble_tetra(Family family, int n, int m, int ring0) {
    std::vector<VertexLabel> labels;
    using Kind = VertexLabel::Kind;
    for (int i = 0; i < n; ++i) labels.push_back({Kind::BaseC, i});
    for (int i = 0; i < n; ++i) labels.push_back({Kind::BaseA, i});
    for (int i = 0; i < n; ++i) labels.push_back({Kind::BaseB, i});
    for (int j = ring0; j <= m - 1; ++j) labels.push_back({Kind::InternalE, j});
    for (int j = ring0; j <= m - 1; ++j) labels.push_back({Kind::InternalF, j});
    for (int j = ring0; j <= m; ++j) labels.push_back({Kind::InternalG, j});

    std::vector<Eigen::Vector2d> points;
    points.reserve(labels.size());
    for (const auto& label : labels) points.push_back(tetra_point(n, m, label));

    std::ostringstream name;
    name << family_name(family) << "_" << n << "_" << m;
    return Instance::tetra(family, name.str(), n, m, ring0, std::move(labels), std::move(points));
}

}  // namespace

Eigen::Vector2d tetra_point(int n, int m, VertexLabel label) {
    using Kind = VertexLabel::Kind;
    const int i = label.index;
    switch (label.kind) {
        case Kind::BaseA: return {n - i / 2.0, i * kSqrt3 / 2.0};
        case Kind::BaseB: return {n / 2.0 - i / 2.0, (n - i) * kSqrt3 / 2.0};
        case Kind::BaseC: return {static_cast<double>(i), 0.0};
        case Kind::InternalE: return {i * n / (2.0 * m), i * n / (2.0 * kSqrt3 * m)};
        case Kind::InternalF: return {n - i * n / (2.0 * m), i * n / (2.0 * kSqrt3 * m)};
        case Kind::InternalG: return {n / 2.0, n * kSqrt3 / 2.0 - i * n / (kSqrt3 * m)};
        case Kind::Line: break;
    }
    throw PreconditionError("tetra_point: not a tetrahedron vertex label");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Tetra: return "tetra";
        case Family::TetraModified: return "tetramod";
        case Family::ThreeLines: return "lines";
        case Family::Imported: return "imported";
    }
    return "unknown";
}

std::string to_string(const VertexLabel& label) {
    using Kind = VertexLabel::Kind;
    const char* prefix = "";
    switch (label.kind) {
        case Kind::BaseA: prefix = "a"; break;
        case Kind::BaseB: prefix = "b"; break;
        case Kind::BaseC: prefix = "c"; break;
        case Kind::InternalE: prefix = "e"; break;
        case Kind::InternalF: prefix = "f"; break;
        case Kind::InternalG: prefix = "g"; break;
        case Kind::Line: prefix = "p"; break;
    }
    return prefix + std::to_string(label.index);
}

std::optional<int> Instance::find(VertexLabel label) const {
    using Kind = VertexLabel::Kind;
    if (family_ == Family::Tetra || family_ == Family::TetraModified) {
        // Canonicalize corner/center aliases first.
        if (label == VertexLabel{Kind::BaseB, n_} || label == VertexLabel{Kind::InternalE, 0})
            label = {Kind::BaseC, 0};  // A
        else if (label == VertexLabel{Kind::BaseC, n_} || label == VertexLabel{Kind::InternalF, 0})
            label = {Kind::BaseA, 0};  // B
        else if (label == VertexLabel{Kind::BaseA, n_} || label == VertexLabel{Kind::InternalG, 0})
            label = {Kind::BaseB, 0};  // C
        else if (label == VertexLabel{Kind::InternalE, m_} || label == VertexLabel{Kind::InternalF, m_})
            label = {Kind::InternalG, m_};  // M

        switch (label.kind) {
            case Kind::BaseC:
                if (label.index < 0 || label.index >= n_) return std::nullopt;
                return label.index;
            case Kind::BaseA:
                if (label.index < 0 || label.index >= n_) return std::nullopt;
                return n_ + label.index;
            case Kind::BaseB:
                if (label.index < 0 || label.index >= n_) return std::nullopt;
                return 2 * n_ + label.index;
            case Kind::InternalE:
                if (label.index < first_ring_ || label.index > m_ - 1) return std::nullopt;
                return 3 * n_ + (label.index - first_ring_);
            case Kind::InternalF:
                if (label.index < first_ring_ || label.index > m_ - 1) return std::nullopt;
                return 3 * n_ + (m_ - first_ring_) + (label.index - first_ring_);
            case Kind::InternalG:
                if (label.index < first_ring_ || label.index > m_) return std::nullopt;
                return 3 * n_ + 2 * (m_ - first_ring_) + (label.index - first_ring_);
            case Kind::Line:
                return std::nullopt;
        }
        return std::nullopt;
    }
    if (label.kind == VertexLabel::Kind::Line && label.index >= 0 && label.index < size())
        return label.index;
    return std::nullopt;
}

Instance Instance::tetra(Family family, std::string name, int n, int m, int first_ring,
                         std::vector<VertexLabel> labels, std::vector<Eigen::Vector2d> points) {
    Instance inst;
    inst.family_ = family;
    inst.name_ = std::move(name);
    inst.n_ = n;
    inst.m_ = m;
    inst.internal_spacing_ = ::tspgap::internal_spacing(n, m);
    inst.first_ring_ = first_ring;
    inst.base_count_ = 3 * n;
    inst.labels_ = std::move(labels);
    inst.points_ = std::move(points);
    return inst;
}

Instance Instance::lines(std::string name, int n, double d, std::vector<VertexLabel> labels,
                         std::vector<Eigen::Vector2d> points) {
    Instance inst;
    inst.family_ = Family::ThreeLines;
    inst.name_ = std::move(name);
    inst.n_ = n;
    inst.line_gap_ = d;
    inst.labels_ = std::move(labels);
    inst.points_ = std::move(points);
    return inst;
}

Instance Instance::imported(std::string name, std::vector<Eigen::Vector2d> points) {
    Instance inst;
    inst.family_ = Family::Imported;
    inst.name_ = std::move(name);
    inst.labels_.resize(points.size());
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        inst.labels_[i] = {VertexLabel::Kind::Line, i};
    inst.points_ = std::move(points);
    return inst;
}

double internal_spacing(int n, int m) {
    if (m < 1) throw PreconditionError("internal_spacing: m must be >= 1");
    return n / (kSqrt3 * m);
}

double removal_threshold(double spacing) {
    if (!(spacing > 0.0)) throw PreconditionError("removal_threshold: spacing must be > 0");
    return std::max(10.0, 4.0 + 4.0 * spacing);
}

int first_retained_ring(int n, int m) {
    const double spacing = internal_spacing(n, m);
    const double threshold = removal_threshold(spacing);
    // Removal is strict: a ring at exactly the threshold distance stays. The
    // 1e-12 slack keeps that boundary stable under rounding of j * spacing.
    return static_cast<int>(std::ceil(threshold / spacing - 1e-12));
}

Instance build_tetrahedron(int n, int m) {
    if (n < 2) throw PreconditionError("build_tetrahedron: n must be >= 2");
    if (m < 1) throw PreconditionError("build_tetrahedron: m must be >= 1");
    return assemble_tetra(Family::Tetra, n, m, 1);
}

namespace {

Instance build_modified_impl(int n, int m) {
    const int ring0 = first_retained_ring(n, m);
    // The removal rule must leave the innermost ring and the center, which
    // holds whenever the threshold stays below dist(A, M) = n / sqrt(3).
    if (ring0 > m - 1)
        throw PreconditionError("modified tetrahedron: removal rule leaves fewer than four internal vertices");
    return assemble_tetra(Family::TetraModified, n, m, ring0);
}

}  // namespace

Instance build_modified_tetrahedron(int n, int m) {
    if (n < 40 || m < 22)
        throw PreconditionError(
            "build_modified_tetrahedron: requires n >= 40 and m >= 22 "
            "(guarantees at least four internal vertices survive the removal rule)");
    return build_modified_impl(n, m);
}

Instance build_modified_tetrahedron_forced(int n, int m) {
    if (n < 2 || m < 1) throw PreconditionError("build_modified_tetrahedron_forced: need n >= 2, m >= 1");
    return build_modified_impl(n, m);
}

Instance build_three_lines(int n, double d) {
    if (n < 1) throw PreconditionError("build_three_lines: n must be >= 1");
    if (!(d > 0.0)) throw PreconditionError("build_three_lines: d must be > 0");

    std::vector<VertexLabel> labels;
    std::vector<Eigen::Vector2d> points;
    labels.reserve(3 * n);
    points.reserve(3 * n);
    for (int row = 0; row < 3; ++row) {
        for (int i = 0; i < n; ++i) {
            labels.push_back({VertexLabel::Kind::Line, row * n + i});
            points.push_back({static_cast<double>(i), row * d});
        }
    }

    std::ostringstream gap;
    gap << d;
    std::string gap_str = gap.str();
    for (auto& ch : gap_str)
        if (ch == '.') ch = '_';
    return Instance::lines("lines_" + std::to_string(n) + "_" + gap_str, n, d, std::move(labels),
                           std::move(points));
}

std::pair<int, int> hard_params_for_size(int N) {
    if (N < 50) throw PreconditionError("hard_params_for_size: N must be >= 50");
    if (N % 3 != 1) throw PreconditionError("hard_params_for_size: N must be congruent 1 mod 3");
    const int n = (3 * N - 40) / 10;
    const int m = (N + 2) / 3 - n;
    return {n, m};
}

}  // namespace tspgap
