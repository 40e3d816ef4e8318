#include "splinedim/splinecore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace splinedim::splinecore {

using exactla::Int;
using polyring::Var;
using polyring::VarList;
using polyring::vars_xyz;

long long binom2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

namespace {

Rational signed_area2(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

std::pair<int, int> sorted_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

} // namespace

Triangulation Triangulation::build(std::vector<Point> vertices,
                                   std::vector<std::array<int, 3>> triangles) {
    Triangulation t;
    t.vertices_ = std::move(vertices);
    t.triangles_ = std::move(triangles);
    const int nv = static_cast<int>(t.vertices_.size());

    for (auto& tri : t.triangles_) {
        for (int v : tri)
            if (v < 0 || v >= nv)
                throw TriangulationError(TriangulationError::Kind::Parse,
                                         "triangle references vertex " + std::to_string(v) +
                                             " out of range");
        std::sort(tri.begin(), tri.end());
        Rational area2 = signed_area2(t.vertices_[tri[0]], t.vertices_[tri[1]],
                                      t.vertices_[tri[2]]);
        if (area2 == 0)
            throw TriangulationError(TriangulationError::Kind::DegenerateTriangle,
                                     "triangle with zero area");
        if (area2 < 0) std::swap(tri[1], tri[2]); // counterclockwise
    }

    std::map<std::pair<int, int>, int> edge_index;
    for (std::size_t ti = 0; ti < t.triangles_.size(); ++ti) {
        const auto& tri = t.triangles_[ti];
        for (int k = 0; k < 3; ++k) {
            auto key = sorted_edge(tri[k], tri[(k + 1) % 3]);
            auto [it, inserted] = edge_index.try_emplace(key, static_cast<int>(t.edges_.size()));
            if (inserted) t.edges_.push_back(Edge{key.first, key.second, {}});
            Edge& e = t.edges_[it->second];
            e.tris.push_back(static_cast<int>(ti));
            if (e.tris.size() > 2)
                throw TriangulationError(TriangulationError::Kind::DanglingEdge,
                                         "edge shared by more than two triangles");
        }
    }
    for (std::size_t ei = 0; ei < t.edges_.size(); ++ei)
        if (t.edges_[ei].interior()) t.interior_edges_.push_back(static_cast<int>(ei));

    // Disk check: connected dual graph plus Euler characteristic 1.
    if (t.triangles_.empty())
        throw TriangulationError(TriangulationError::Kind::NotADisk, "no triangles");
    std::vector<char> seen(t.triangles_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int ei : t.interior_edges_) {
            const Edge& e = t.edges_[ei];
            if (e.tris[0] == cur && !seen[e.tris[1]]) {
                seen[e.tris[1]] = 1;
                stack.push_back(e.tris[1]);
            }
            if (e.tris[1] == cur && !seen[e.tris[0]]) {
                seen[e.tris[0]] = 1;
                stack.push_back(e.tris[0]);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }))
        throw TriangulationError(TriangulationError::Kind::NotADisk, "complex is disconnected");
    long long euler = static_cast<long long>(t.vertices_.size()) -
                      static_cast<long long>(t.edges_.size()) +
                      static_cast<long long>(t.triangles_.size());
    if (euler != 1)
        throw TriangulationError(TriangulationError::Kind::NotADisk,
                                 "Euler characteristic " + std::to_string(euler) + ", expected 1");

    std::set<int> boundary_vertices;
    for (const Edge& e : t.edges_)
        if (!e.interior()) {
            boundary_vertices.insert(e.a);
            boundary_vertices.insert(e.b);
        }
    for (int v = 0; v < nv; ++v)
        if (!boundary_vertices.contains(v)) t.interior_vertices_.push_back(v);
    return t;
}

Triangulation Triangulation::load(std::string_view document) {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::istringstream in{std::string(document)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fail = [&](const std::string& msg) -> TriangulationError {
            return TriangulationError(TriangulationError::Kind::Parse,
                                      "line " + std::to_string(line_no) + ": " + msg);
        };
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            std::string xs, ys;
            if (!(ls >> xs >> ys)) throw fail("expected 'v <x> <y>'");
            try {
                vertices.push_back(Point{exactla::parse_rational(xs), exactla::parse_rational(ys)});
            } catch (const exactla::FormatError& ex) {
                throw fail(ex.what());
            }
        } else if (tag == "t") {
            std::array<int, 3> tri{};
            if (!(ls >> tri[0] >> tri[1] >> tri[2])) throw fail("expected 't <i> <j> <k>'");
            triangles.push_back(tri);
        } else {
            throw fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing content '" + extra + "'");
    }
    return build(std::move(vertices), std::move(triangles));
}

std::string Triangulation::to_document() const {
    std::ostringstream os;
    for (const Point& p : vertices_)
        os << "v " << p.x << ' ' << p.y << '\n';
    for (const auto& tri : triangles_)
        os << "t " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
    return os.str();
}

HPoly Triangulation::edge_form(int edge_index) const {
    const Edge& e = edges_.at(edge_index);
    const Point& p = vertices_[e.a];
    const Point& q = vertices_[e.b];
    // Line through p and q, homogenized with z: det of [X Y Z; px py 1; qx qy 1].
    Rational cx = p.y - q.y;
    Rational cy = q.x - p.x;
    Rational cz = p.x * q.y - q.x * p.y;

    Int lcm = boost::multiprecision::lcm(
        boost::multiprecision::lcm(Int(denominator(cx)), Int(denominator(cy))),
        Int(denominator(cz)));
    Int nx = Int(numerator(cx)) * (lcm / Int(denominator(cx)));
    Int ny = Int(numerator(cy)) * (lcm / Int(denominator(cy)));
    Int nz = Int(numerator(cz)) * (lcm / Int(denominator(cz)));
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(nx, ny), nz);
    if (g != 0) {
        nx /= g;
        ny /= g;
        nz /= g;
    }
    Int lead = nx != 0 ? nx : (ny != 0 ? ny : nz);
    if (lead < 0) {
        nx = -nx;
        ny = -ny;
        nz = -nz;
    }
    return HPoly(vars_xyz(), 1, {Rational(nx), Rational(ny), Rational(nz)});
}

bool Triangulation::is_interior_vertex(int vertex) const {
    return std::find(interior_vertices_.begin(), interior_vertices_.end(), vertex) !=
           interior_vertices_.end();
}

int Triangulation::slope_count(int vertex) const {
    if (!is_interior_vertex(vertex))
        throw TriangulationError(TriangulationError::Kind::Parse,
                                 "slope count requires an interior vertex");
    std::set<std::pair<std::string, std::string>> directions;
    for (int ei : interior_edges_) {
        const Edge& e = edges_[ei];
        if (e.a != vertex && e.b != vertex) continue;
        const Point& p = vertices_[e.a];
        const Point& q = vertices_[e.b];
        Rational dx = q.x - p.x;
        Rational dy = q.y - p.y;
        // direction up to sign and scale
        Int nx = Int(numerator(dx)) * Int(denominator(dy));
        Int ny = Int(numerator(dy)) * Int(denominator(dx));
        Int g = boost::multiprecision::gcd(nx, ny);
        if (g != 0) {
            nx /= g;
            ny /= g;
        }
        if (nx < 0 || (nx == 0 && ny < 0)) {
            nx = -nx;
            ny = -ny;
        }
        directions.insert({nx.str(), ny.str()});
    }
    return static_cast<int>(directions.size());
}

QMatrix billera_rose_matrix(const Triangulation& t, int r, int d) {
    if (r < 0 || d < 0) throw exactla::ShapeError("r and d must be nonnegative");
    polyring::MonomialBasis basis_d(vars_xyz(), d);
    const std::size_t nd = basis_d.size();
    const std::size_t f2 = t.triangles().size();
    const std::size_t f1 = t.interior_edges().size();
    const bool has_edge_block = d >= r + 1;
    const std::size_t ne = has_edge_block
                               ? polyring::MonomialBasis(vars_xyz(), d - r - 1).size()
                               : 0;

    const std::size_t rows = f1 * nd;
    const std::size_t cols = f2 * nd + f1 * ne;
    std::vector<Rational> entries(rows * cols);

    for (std::size_t idx = 0; idx < f1; ++idx) {
        const Edge& e = t.edges()[t.interior_edges()[idx]];
        // The triangle whose counterclockwise boundary walks a -> b lies on
        // the left of the directed edge; it gets +1, the other -1.
        int left = -1, right = -1;
        for (int ti : e.tris) {
            const auto& tri = t.triangles()[ti];
            bool forward = false;
            for (int k = 0; k < 3; ++k)
                if (tri[k] == e.a && tri[(k + 1) % 3] == e.b) forward = true;
            (forward ? left : right) = ti;
        }
        if (left < 0 || right < 0)
            throw std::logic_error("interior edge without a consistent orientation pair");
        for (std::size_t m = 0; m < nd; ++m) {
            entries[(idx * nd + m) * cols + left * nd + m] = 1;
            entries[(idx * nd + m) * cols + right * nd + m] = -1;
        }
        if (has_edge_block) {
            QMatrix mult = polyring::mult_map(t.edge_form(t.interior_edges()[idx]).pow(r + 1),
                                              d - r - 1);
            for (std::size_t m = 0; m < nd; ++m)
                for (std::size_t j = 0; j < ne; ++j)
                    if (mult(m, j) != 0)
                        entries[(idx * nd + m) * cols + f2 * nd + idx * ne + j] = -mult(m, j);
        }
    }
    return QMatrix(rows, cols, std::move(entries));
}

SplineDimResult spline_dim(const Triangulation& t, int r, int d) {
    polyring::MonomialBasis basis_d(vars_xyz(), d);
    const long long nd = static_cast<long long>(basis_d.size());
    if (t.f1_interior() == 0) return SplineDimResult{nd, 0};
    QMatrix phi = billera_rose_matrix(t, r, d);
    const long long rk = static_cast<long long>(exactla::rank(phi));
    const long long cols = static_cast<long long>(phi.cols());
    return SplineDimResult{cols - rk, t.f1_interior() * nd - rk};
}

AlfeldSchumaker alfeld_schumaker(const Triangulation& t, int r, int d) {
    if (r < 0 || d < 0) throw exactla::ShapeError("r and d must be nonnegative");
    long long sigma = 0;
    for (int v : t.interior_vertices()) {
        long long n_v = t.slope_count(v);
        if (n_v < 2) throw std::logic_error("interior vertex with fewer than two slopes");
        for (long long j = 1;; ++j) {
            long long term = r + 1 + j * (1 - n_v);
            if (term <= 0) break;
            sigma += term;
        }
    }
    long long l = binom2(d + 2) + binom2(d - r + 1) * t.f1_interior() -
                  (binom2(d + 2) - binom2(r + 2)) * t.f0_interior() + sigma;
    return AlfeldSchumaker{l, sigma};
}

std::vector<DimReport> conjecture_report(const Triangulation& t, int r_max) {
    if (r_max < 1) throw exactla::ShapeError("r_max must be at least 1");
    std::vector<DimReport> out;
    for (int r = 1; r <= r_max; ++r) {
        for (int d : {2 * r, 2 * r + 1, 3 * r + 1}) {
            SplineDimResult s = spline_dim(t, r, d);
            AlfeldSchumaker a = alfeld_schumaker(t, r, d);
            out.push_back(DimReport{r, d, s.dim, a.l_value, a.sigma, s.hf_n,
                                    s.dim == a.l_value});
        }
    }
    return out;
}

} // namespace splinedim::splinecore
