#include "novikov/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace novikov {

namespace {

/// Monotone lattice paths through a x b (staircase simplices of the prism a x b).
void append_staircase(const Simplex& a, const Simplex& b, Vertex nb, std::vector<Simplex>& out) {
    const std::size_t i = a.size() - 1, j = b.size() - 1, steps = i + j;
    for (std::uint32_t mask = 0; mask < (1u << steps); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != i) continue;
        Simplex s;
        std::size_t x = 0, y = 0;
        s.push_back(a[x] * nb + b[y]);
        for (std::size_t k = 0; k < steps; ++k) {
            if (mask & (1u << k)) ++x;
            else ++y;
            s.push_back(a[x] * nb + b[y]);
        }
        out.push_back(std::move(s));
    }
}

SimplicialComplex path_complex(int segments) {
    std::vector<Simplex> edges;
    for (Vertex l = 0; l < segments; ++l) edges.push_back({l, l + 1});
    return SimplicialComplex::build(segments + 1, edges);
}

Vertex floor_div(std::int64_t a, std::int64_t b) { return static_cast<Vertex>(a / b); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::string matrix_string(const Eigen::Matrix2i& A) {
    std::ostringstream os;
    os << "[[" << A(0, 0) << "," << A(0, 1) << "],[" << A(1, 0) << "," << A(1, 1) << "]]";
    return os.str();
}

}  // namespace

SimplicialComplex product(const SimplicialComplex& K, const SimplicialComplex& L) {
    const auto nL = static_cast<Vertex>(L.vertex_count());
    std::vector<Simplex> maximal;
    const auto mk = K.maximal_simplices();
    const auto ml = L.maximal_simplices();
    for (const auto& a : mk)
        for (const auto& b : ml) append_staircase(a, b, nL, maximal);
    return SimplicialComplex::build(K.vertex_count() * L.vertex_count(), maximal);
}

IntegralCocycle circle_cocycle(const SimplicialComplex& circle_complex, std::int64_t holonomy) {
    IntegralCocycle theta = IntegralCocycle::zero(circle_complex);
    std::vector<std::int64_t> values = theta.values();
    values[static_cast<std::size_t>(circle_complex.index_of({0, 1}))] = holonomy;
    return IntegralCocycle(std::move(values));
}

StaircaseTorus staircase_torus(int m, const std::vector<std::int64_t>& holonomies) {
    if (holonomies.empty()) throw Error(ErrorKind::Parameter, "torus needs at least one factor");
    const SimplicialComplex c = circle(m);
    StaircaseTorus t{c, circle_cocycle(c, holonomies[0])};
    for (std::size_t k = 1; k < holonomies.size(); ++k) {
        SimplicialComplex next = product(t.complex, c);
        t.cocycle = combine_cocycles(t.complex, t.cocycle, c, circle_cocycle(c, holonomies[k]), next);
        t.complex = std::move(next);
    }
    return t;
}

std::pair<Simplex, int> image_of(const SimplicialMap& f, const Simplex& s) {
    Simplex img;
    img.reserve(s.size());
    for (Vertex v : s) img.push_back(f(v));
    int sign = 1;
    for (std::size_t i = 1; i < img.size(); ++i)  // insertion sort, counting swaps
        for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
        img.erase(std::unique(img.begin(), img.end()), img.end());
        sign = 0;
    }
    return {img, sign};
}

bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f) {
    if (static_cast<Index>(f.images.size()) != source.vertex_count()) return false;
    for (Vertex v : f.images)
        if (v < 0 || v >= target.vertex_count()) return false;
    for (const auto& s : source.maximal_simplices())
        if (!target.contains(image_of(f, s).first)) return false;
    return true;
}

bool is_automorphism(const SimplicialComplex& K, const SimplicialMap& phi) {
    const auto n = static_cast<std::size_t>(K.vertex_count());
    if (phi.images.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Vertex v : phi.images) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    // A vertex bijection that maps simplices into simplices permutes each (finite) level.
    for (int p = 1; p <= K.dimension(); ++p)
        for (const auto& s : K.simplices(p))
            if (!K.contains(image_of(phi, s).first)) return false;
    return true;
}

SimplicialMap inverse_map(const SimplicialMap& phi) {
    SimplicialMap inv{std::vector<Vertex>(phi.images.size())};
    for (std::size_t v = 0; v < phi.images.size(); ++v) inv.images[static_cast<std::size_t>(phi.images[v])] = static_cast<Vertex>(v);
    return inv;
}

SimplicialMap torus_grid_map(int m, const Eigen::Matrix2i& A) {
    if (m < 3) throw Error(ErrorKind::Parameter, "grid size must be >= 3");
    const std::int64_t det = static_cast<std::int64_t>(A(0, 0)) * A(1, 1) - static_cast<std::int64_t>(A(0, 1)) * A(1, 0);
    if (std::gcd(mod(det, m), static_cast<std::int64_t>(m)) != 1)
        throw Error(ErrorKind::InvalidMap, "matrix " + matrix_string(A) + " is not invertible mod " + std::to_string(m));
    SimplicialMap phi{std::vector<Vertex>(static_cast<std::size_t>(m * m))};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto a = mod(static_cast<std::int64_t>(A(0, 0)) * i + static_cast<std::int64_t>(A(0, 1)) * j, m);
            const auto b = mod(static_cast<std::int64_t>(A(1, 0)) * i + static_cast<std::int64_t>(A(1, 1)) * j, m);
            phi.images[static_cast<std::size_t>(i * m + j)] = static_cast<Vertex>(a * m + b);
        }
    return phi;
}

MappingTorus mapping_torus(const SimplicialComplex& K, const SimplicialMap& phi, int layers) {
    if (layers < 3) throw Error(ErrorKind::Parameter, "mapping torus needs at least 3 layers");
    if (!is_automorphism(K, phi)) throw Error(ErrorKind::InvalidMap, "vertex map is not a simplicial automorphism");
    const auto n = static_cast<Vertex>(K.vertex_count());
    const Vertex L = layers;
    const SimplicialComplex prism = product(K, path_complex(layers));
    const SimplicialMap inv = inverse_map(phi);

    auto glue = [&](Vertex id) -> Vertex {
        const Vertex v = id / (L + 1), l = id % (L + 1);
        return l == L ? inv(v) : l * n + v;
    };

    std::vector<Simplex> maximal;
    for (const auto& s : prism.maximal_simplices()) {
        Simplex g;
        for (Vertex v : s) g.push_back(glue(v));
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw Error(ErrorKind::Construction, "gluing collapses a simplex");
        maximal.push_back(std::move(g));
    }
    MappingTorus out;
    out.complex = SimplicialComplex::build(static_cast<Index>(L) * n, maximal);
    for (int p = 0; p <= prism.dimension(); ++p)
        if (out.complex.count(p) != prism.count(p) - K.count(p))
            throw Error(ErrorKind::Construction, "gluing identifies distinct " + std::to_string(p) + "-simplices");

    std::vector<std::int64_t> values(static_cast<std::size_t>(out.complex.count(1)), 0);
    std::vector<bool> assigned(values.size(), false);
    for (const auto& e : prism.simplices(1)) {
        const std::int64_t d = (e[1] % (L + 1)) - (e[0] % (L + 1));  // chains never go down a layer
        const Vertex a = glue(e[0]), b = glue(e[1]);
        const auto idx = static_cast<std::size_t>(out.complex.index_of({std::min(a, b), std::max(a, b)}));
        const std::int64_t value = a < b ? d : -d;
        if (assigned[idx] && values[idx] != value)
            throw Error(ErrorKind::Construction, "inconsistent fiber cocycle after gluing");
        values[idx] = value;
        assigned[idx] = true;
    }
    out.fiber_cocycle = IntegralCocycle(std::move(values));
    require_closed(out.complex, out.fiber_cocycle);
    out.holonomy_period = layers;
    out.recipe = "mapping_torus(layers=" + std::to_string(layers) + ")";
    return out;
}

std::vector<Simplex> grid_torus_chains(int m) {
    if (m < 3) throw Error(ErrorKind::Parameter, "grid size must be >= 3");
    auto id = [m](int i, int j) { return static_cast<Vertex>(((i % m) * m) + (j % m)); };
    std::vector<Simplex> chains;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            chains.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            chains.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    return chains;
}

SimplicialComplex grid_torus(int m) { return SimplicialComplex::build(static_cast<Index>(m) * m, grid_torus_chains(m)); }

TorusBundle torus_bundle(const Eigen::Matrix2i& A, int m) {
    if (m < 3) throw Error(ErrorKind::Parameter, "grid size must be >= 3");
    if ((A.array() < 0).any())
        throw Error(ErrorKind::InvalidMap, "torus bundle monodromy needs nonnegative entries: " + matrix_string(A));
    const std::int64_t det = static_cast<std::int64_t>(A(0, 0)) * A(1, 1) - static_cast<std::int64_t>(A(0, 1)) * A(1, 0);
    if (det != 1 && det != -1)
        throw Error(ErrorKind::InvalidMap, "torus bundle monodromy must be invertible over Z: " + matrix_string(A));

    TorusBundle out;
    out.monodromy = A;
    out.grid = m;
    out.refinement = std::max(1, static_cast<int>(A.rowwise().sum().maxCoeff()));
    const int s = out.refinement, N = s * m;
    out.fiber = grid_torus(m);
    out.refined_fiber = grid_torus(N);
    const SimplicialComplex& X = out.refined_fiber;
    const SimplicialComplex& Y = out.fiber;

    out.f.images.resize(static_cast<std::size_t>(N * N));
    out.g.images.resize(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const auto a = mod(static_cast<std::int64_t>(A(0, 0)) * i + static_cast<std::int64_t>(A(0, 1)) * j, N);
            const auto b = mod(static_cast<std::int64_t>(A(1, 0)) * i + static_cast<std::int64_t>(A(1, 1)) * j, N);
            out.f.images[static_cast<std::size_t>(i * N + j)] = floor_div(a, s) * m + floor_div(b, s);
            out.g.images[static_cast<std::size_t>(i * N + j)] = (i / s) * m + (j / s);
        }
    if (!is_simplicial(X, Y, out.f) || !is_simplicial(X, Y, out.g))
        throw Error(ErrorKind::Construction, "torus bundle maps are not simplicial");

    const Vertex ny = static_cast<Vertex>(Y.vertex_count()), nx = static_cast<Vertex>(X.vertex_count());
    auto layer_id = [&](int layer, Vertex x) { return ny + layer * nx + x; };
    std::vector<Simplex> maximal = Y.maximal_simplices();
    const auto x_max = grid_torus_chains(N);
    auto add_cylinder = [&](int layer, const SimplicialMap& map) {
        for (const auto& sigma : x_max) {
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                Simplex c;
                for (std::size_t k = 0; k <= i; ++k) c.push_back(layer_id(layer, sigma[k]));
                for (std::size_t k = i; k < sigma.size(); ++k) c.push_back(map(sigma[k]));
                std::sort(c.begin(), c.end());
                c.erase(std::unique(c.begin(), c.end()), c.end());
                maximal.push_back(std::move(c));
            }
        }
    };
    add_cylinder(0, out.f);
    add_cylinder(1, out.g);
    const SimplicialComplex prism = product(X, path_complex(1));
    for (const auto& sp : prism.maximal_simplices()) {
        Simplex c;
        for (Vertex v : sp) c.push_back(layer_id(v % 2, v / 2));
        maximal.push_back(std::move(c));
    }
    out.complex = SimplicialComplex::build(static_cast<Index>(ny) + 2 * static_cast<Index>(nx), maximal);

    std::vector<std::int64_t> values(static_cast<std::size_t>(out.complex.count(1)), 0);
    const auto& edges = out.complex.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e][0] < ny && edges[e][1] >= ny + nx) values[e] = -1;  // X_1 -> Y counts +1
    out.fiber_cocycle = IntegralCocycle(std::move(values));
    require_closed(out.complex, out.fiber_cocycle);
    out.recipe = "torus_bundle(A=" + matrix_string(A) + ",m=" + std::to_string(m) + ")";
    return out;
}

CoveringData cyclic_cover(const SimplicialComplex& K, const IntegralCocycle& theta, int k) {
    if (k < 2) throw Error(ErrorKind::Parameter, "cover needs at least 2 sheets");
    require_closed(K, theta);
    CoveringData out;
    out.base = K;
    out.theta = theta;
    out.sheets = k;
    std::vector<Simplex> lifts;
    for (const auto& s : K.maximal_simplices()) {
        for (int r = 0; r < k; ++r) {
            Simplex lift;
            for (Vertex v : s) {
                const std::int64_t shift = *step_value(K, theta, s[0], v);
                lift.push_back(v * k + static_cast<Vertex>(mod(r + shift, k)));
            }
            lifts.push_back(std::move(lift));
        }
    }
    out.total = SimplicialComplex::build(K.vertex_count() * k, lifts);
    for (int p = 0; p <= K.dimension(); ++p)
        if (out.total.count(p) != k * K.count(p))
            throw Error(ErrorKind::Construction, "cover does not have k lifts per simplex");
    out.projection.images.resize(static_cast<std::size_t>(out.total.vertex_count()));
    for (Vertex v = 0; v < static_cast<Vertex>(out.total.vertex_count()); ++v)
        out.projection.images[static_cast<std::size_t>(v)] = v / k;
    std::vector<std::int64_t> values;
    for (const auto& e : out.total.simplices(1)) values.push_back(*step_value(K, theta, e[0] / k, e[1] / k));
    out.pullback = IntegralCocycle(std::move(values));
    return out;
}

CoveringData cyclic_cover(const SimplicialComplex& K, const RealCocycle& theta, int k) {
    std::vector<std::int64_t> values;
    for (double v : theta.values()) {
        if (!std::isfinite(v) || std::floor(v) != v)
            throw Error(ErrorKind::Integrality, "cyclic cover needs an integer-valued cocycle");
        values.push_back(static_cast<std::int64_t>(v));
    }
    return cyclic_cover(K, IntegralCocycle(std::move(values)), k);
}

}  // namespace novikov
