#include "novikov/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace novikov {

namespace {

std::string describe(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

}  // namespace

SimplicialComplex SimplicialComplex::build(Index vertex_count, const std::vector<Simplex>& maximal) {
    if (vertex_count < 0) throw Error(ErrorKind::Parameter, "negative vertex count");
    SimplicialComplex K;
    K.vertex_count_ = vertex_count;
    std::vector<std::vector<Simplex>> by_dim(1);
    for (Vertex v = 0; v < vertex_count; ++v) by_dim[0].push_back({v});

    for (Simplex s : maximal) {
        if (s.empty()) throw Error(ErrorKind::MalformedSimplex, "empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::MalformedSimplex, "repeated vertex in " + describe(s));
        if (s.front() < 0 || s.back() >= vertex_count)
            throw Error(ErrorKind::MalformedSimplex, "vertex out of range in " + describe(s));
        if (s.size() > 31) throw Error(ErrorKind::MalformedSimplex, "simplex dimension too large");
        const std::size_t n = s.size();
        if (by_dim.size() < n) by_dim.resize(n);
        // Every nonempty face, enumerated by bitmask; masks preserve vertex order.
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            face.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            if (face.size() > 1) by_dim[face.size() - 1].push_back(std::move(face));
        }
    }
    for (auto& list : by_dim) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    K.simplices_ = std::move(by_dim);
    return K;
}

SimplicialComplex SimplicialComplex::build(const std::vector<Simplex>& maximal) {
    Vertex top = -1;
    for (const auto& s : maximal)
        for (Vertex v : s) top = std::max(top, v);
    return build(static_cast<Index>(top) + 1, maximal);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> empty;
    if (p < 0 || p > dimension()) return empty;
    return simplices_[static_cast<std::size_t>(p)];
}

Index SimplicialComplex::count(int p) const { return static_cast<Index>(simplices(p).size()); }

Index SimplicialComplex::total_count() const {
    Index total = 0;
    for (const auto& list : simplices_) total += static_cast<Index>(list.size());
    return total;
}

std::optional<Index> SimplicialComplex::find(const Simplex& s) const {
    const auto& list = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - list.begin());
}

Index SimplicialComplex::index_of(const Simplex& s) const {
    if (auto idx = find(s)) return *idx;
    throw Error(ErrorKind::MalformedSimplex, "simplex " + describe(s) + " not in complex");
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int p = 0; p <= dimension(); ++p) {
        const auto& cofaces = simplices(p + 1);
        std::vector<bool> covered(simplices(p).size(), false);
        for (const auto& c : cofaces) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                Simplex face = c;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                covered[static_cast<std::size_t>(index_of(face))] = true;
            }
        }
        for (std::size_t k = 0; k < covered.size(); ++k)
            if (!covered[k]) out.push_back(simplices(p)[k]);
    }
    return out;
}

bool SimplicialComplex::is_pure() const {
    const auto maximal = maximal_simplices();
    return std::all_of(maximal.begin(), maximal.end(),
                       [&](const Simplex& s) { return static_cast<int>(s.size()) - 1 == dimension(); });
}

Eigen::MatrixXi boundary_matrix(const SimplicialComplex& K, int p) {
    if (p < 1 || p > K.dimension())
        throw Error(ErrorKind::Degree, "boundary degree " + std::to_string(p) + " outside 1.." +
                                           std::to_string(K.dimension()));
    Eigen::MatrixXi D = Eigen::MatrixXi::Zero(K.count(p - 1), K.count(p));
    const auto& cols = K.simplices(p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            Simplex face = cols[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            D(K.index_of(face), static_cast<Index>(j)) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return D;
}

std::int64_t euler_characteristic(const SimplicialComplex& K) {
    std::int64_t chi = 0;
    for (int p = 0; p <= K.dimension(); ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(K.count(p));
    return chi;
}

SimplicialComplex circle(int m) {
    if (m < 3) throw Error(ErrorKind::Parameter, "circle needs at least 3 vertices, got " + std::to_string(m));
    std::vector<Simplex> edges;
    for (Vertex i = 0; i < m; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % m)});
    return SimplicialComplex::build(m, edges);
}

SimplicialComplex sphere_boundary(int d) {
    if (d < 1) throw Error(ErrorKind::Parameter, "sphere dimension must be >= 1");
    std::vector<Simplex> facets;
    for (Vertex omit = 0; omit <= d + 1; ++omit) {
        Simplex s;
        for (Vertex v = 0; v <= d + 1; ++v)
            if (v != omit) s.push_back(v);
        facets.push_back(std::move(s));
    }
    return SimplicialComplex::build(d + 2, facets);
}

SimplicialComplex point() { return SimplicialComplex::build(1, {}); }

std::vector<Index> connected_components(const SimplicialComplex& K) {
    std::vector<Index> parent(static_cast<std::size_t>(K.vertex_count()));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto root = [&](Index v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& e : K.simplices(1)) {
        Index a = root(e[0]), b = root(e[1]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<Index> comp(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v) comp[v] = root(static_cast<Index>(v));
    return comp;
}

}  // namespace novikov
