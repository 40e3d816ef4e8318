#pragma once

#include "splinedim/polyring.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace splinedim::splinecore {

using exactla::QMatrix;
using exactla::Rational;
using polyring::HPoly;

/// Triangulation validation failures, by kind.
struct TriangulationError : std::runtime_error {
    enum class Kind { NotADisk, DegenerateTriangle, DanglingEdge, Parse };
    TriangulationError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}
    Kind kind;
};

struct Point {
    Rational x, y;
    bool operator==(const Point&) const = default;
};

struct Edge {
    int a, b;                ///< endpoint vertex indices, a < b
    std::vector<int> tris;   ///< incident triangle indices
    bool interior() const { return tris.size() == 2; }
};

/// Planar simplicial complex over rational coordinates whose realization is a
/// topological disk. Triangles are stored counterclockwise.
class Triangulation {
public:
    static Triangulation build(std::vector<Point> vertices,
                               std::vector<std::array<int, 3>> triangles);

    /// Text document: '#' comments, "v <x> <y>" vertex lines (rationals),
    /// "t <i> <j> <k>" triangle lines (0-based vertex indices).
    static Triangulation load(std::string_view document);
    std::string to_document() const;

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& interior_edges() const { return interior_edges_; }
    const std::vector<int>& interior_vertices() const { return interior_vertices_; }

    int f2() const { return static_cast<int>(triangles_.size()); }
    int f1_interior() const { return static_cast<int>(interior_edges_.size()); }
    int f0_interior() const { return static_cast<int>(interior_vertices_.size()); }

    /// Homogenized line form of an edge: coprime integer coefficients, first
    /// nonzero coefficient positive.
    HPoly edge_form(int edge_index) const;

    /// Distinct lines spanned by the interior edges at an interior vertex.
    int slope_count(int vertex) const;

    bool is_interior_vertex(int vertex) const;

private:
    std::vector<Point> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<Edge> edges_;
    std::vector<int> interior_edges_;
    std::vector<int> interior_vertices_;
};

/// Degree-d piece of the smoothness map [d2 | diag(l_e^{r+1})]. Rows are
/// (interior edge, degree-d monomial); columns are the triangle block
/// followed by the edge block (empty when d < r+1).
QMatrix billera_rose_matrix(const Triangulation& t, int r, int d);

struct SplineDimResult {
    long long dim;  ///< dim C^r_d = nullity of the smoothness map
    long long hf_n; ///< Hilbert function of the cokernel at degree d
};

SplineDimResult spline_dim(const Triangulation& t, int r, int d);

struct AlfeldSchumaker {
    long long l_value;
    long long sigma;
};

/// L(T,r,d) = C(d+2,2) + C(d-r+1,2) f1 - (C(d+2,2) - C(r+2,2)) f0 + sigma,
/// with sigma summed over interior vertices and C(m,2) = 0 for m < 2.
AlfeldSchumaker alfeld_schumaker(const Triangulation& t, int r, int d);

struct DimReport {
    int r, d;
    long long dim_spline;
    long long l_value;
    long long sigma;
    long long hf_n;
    bool equal;
};

/// One report per (r, d) with d in {2r, 2r+1, 3r+1}, r = 1..r_max.
std::vector<DimReport> conjecture_report(const Triangulation& t, int r_max);

long long binom2(long long m);

} // namespace splinedim::splinecore
