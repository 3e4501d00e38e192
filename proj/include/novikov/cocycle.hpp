#pragma once

#include <Eigen/QR>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "novikov/simplicial_complex.hpp"

namespace novikov {

inline constexpr double kClosednessTolerance = 1e-12;
inline constexpr double kExactnessResidual = 1e-9;

/// A 1-cochain on the edge list of a complex, indexed like K.simplices(1).
///
/// Values are exponents (the additive level); the weight of an edge is
/// lambda^value. Integral values go with the exact backends, real values
/// with the floating backend. Orientation is implicit: value(v,u) = -value(u,v).
template <class Value>
class OneCocycle {
    static_assert(std::is_same_v<Value, std::int64_t> || std::is_same_v<Value, double>);

public:
    using value_type = Value;

    OneCocycle() = default;
    explicit OneCocycle(std::vector<Value> values) : values_(std::move(values)) {}

    static OneCocycle zero(const SimplicialComplex& K) {
        return OneCocycle(std::vector<Value>(static_cast<std::size_t>(K.count(1)), Value(0)));
    }

    /// From explicit (u, v, value) triples with u < v. Every edge of K must be listed.
    static OneCocycle from_edges(const SimplicialComplex& K,
                                 const std::vector<std::tuple<Vertex, Vertex, Value>>& entries) {
        std::vector<Value> values(static_cast<std::size_t>(K.count(1)), Value(0));
        std::vector<bool> seen(values.size(), false);
        for (const auto& [u, v, value] : entries) {
            if (u >= v)
                throw Error(ErrorKind::Cocycle, "cocycle edge must be listed with u < v, got (" + std::to_string(u) +
                                                    "," + std::to_string(v) + ")");
            auto idx = K.find({u, v});
            if (!idx)
                throw Error(ErrorKind::Cocycle,
                            "cocycle names non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            values[static_cast<std::size_t>(*idx)] = value;
            seen[static_cast<std::size_t>(*idx)] = true;
        }
        for (std::size_t e = 0; e < seen.size(); ++e) {
            if (!seen[e]) {
                const auto& edge = K.simplices(1)[e];
                throw Error(ErrorKind::IncompleteCocycle, "no value for edge (" + std::to_string(edge[0]) + "," +
                                                              std::to_string(edge[1]) + ")");
            }
        }
        return OneCocycle(std::move(values));
    }

    Index size() const { return static_cast<Index>(values_.size()); }
    const Value& operator[](Index e) const { return values_[static_cast<std::size_t>(e)]; }
    const std::vector<Value>& values() const { return values_; }

    OneCocycle operator-() const {
        OneCocycle r = *this;
        for (auto& v : r.values_) v = -v;
        return r;
    }
    friend OneCocycle operator+(const OneCocycle& a, const OneCocycle& b) {
        if (a.size() != b.size()) throw Error(ErrorKind::Cocycle, "adding cocycles on different edge sets");
        OneCocycle r = a;
        for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] += b.values_[i];
        return r;
    }
    OneCocycle scaled(Value factor) const {
        OneCocycle r = *this;
        for (auto& v : r.values_) v *= factor;
        return r;
    }

    template <class Target>
    OneCocycle<Target> cast() const {
        return OneCocycle<Target>(std::vector<Target>(values_.begin(), values_.end()));
    }

    friend bool operator==(const OneCocycle& a, const OneCocycle& b) { return a.values_ == b.values_; }

private:
    std::vector<Value> values_;
};

using IntegralCocycle = OneCocycle<std::int64_t>;
using RealCocycle = OneCocycle<double>;

/// Vertex potential f; its coboundary is (u,v) -> f(v) - f(u).
template <class Value>
using ZeroCochain = std::vector<Value>;

template <class Value>
void require_defined(const SimplicialComplex& K, const OneCocycle<Value>& theta) {
    if (theta.size() != K.count(1))
        throw Error(ErrorKind::IncompleteCocycle, "cocycle has " + std::to_string(theta.size()) +
                                                      " values for " + std::to_string(K.count(1)) + " edges");
}

/// Oriented value on the step u -> v (0 when u == v); nullopt if {u,v} is not an edge.
template <class Value>
std::optional<Value> step_value(const SimplicialComplex& K, const OneCocycle<Value>& theta, Vertex u, Vertex v) {
    if (u == v) return Value(0);
    auto idx = K.find({std::min(u, v), std::max(u, v)});
    if (!idx) return std::nullopt;
    return u < v ? theta[*idx] : -theta[*idx];
}

/// Residual value(v0,v1) + value(v1,v2) - value(v0,v2) of a triangle.
template <class Value>
Value triangle_residual(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Simplex& t) {
    return theta[K.index_of({t[0], t[1]})] + theta[K.index_of({t[1], t[2]})] - theta[K.index_of({t[0], t[2]})];
}

template <class Value>
bool validate_closed(const SimplicialComplex& K, const OneCocycle<Value>& theta) {
    require_defined(K, theta);
    for (const auto& t : K.simplices(2)) {
        const Value r = triangle_residual(K, theta, t);
        if constexpr (std::is_integral_v<Value>) {
            if (r != 0) return false;
        } else {
            if (!(std::abs(r) <= kClosednessTolerance)) return false;
        }
    }
    return true;
}

template <class Value>
void require_closed(const SimplicialComplex& K, const OneCocycle<Value>& theta) {
    if (!validate_closed(K, theta)) throw Error(ErrorKind::Cocycle, "cocycle is not closed");
}

/// Signed sum of edge values along a vertex loop. The loop is closed
/// implicitly when its last vertex differs from the first.
template <class Value>
Value holonomy(const SimplicialComplex& K, const OneCocycle<Value>& theta, const std::vector<Vertex>& loop) {
    require_defined(K, theta);
    if (loop.empty()) throw Error(ErrorKind::InvalidLoop, "empty loop");
    Value total(0);
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Vertex u = loop[i];
        const Vertex v = (i + 1 < loop.size()) ? loop[i + 1] : loop.front();
        if (i + 1 == loop.size() && u == v) break;
        auto value = step_value(K, theta, u, v);
        if (!value)
            throw Error(ErrorKind::InvalidLoop, "step " + std::to_string(u) + "->" + std::to_string(v) + " is not an edge");
        total += *value;
    }
    return total;
}

template <class Value>
OneCocycle<Value> gauge_transform(const SimplicialComplex& K, const OneCocycle<Value>& theta,
                                  const ZeroCochain<Value>& f) {
    require_defined(K, theta);
    if (static_cast<Index>(f.size()) != K.vertex_count())
        throw Error(ErrorKind::Parameter, "gauge function must be defined on every vertex");
    std::vector<Value> values = theta.values();
    const auto& edges = K.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        values[e] += f[static_cast<std::size_t>(edges[e][1])] - f[static_cast<std::size_t>(edges[e][0])];
    return OneCocycle<Value>(std::move(values));
}

template <class Value>
OneCocycle<Value> coboundary(const SimplicialComplex& K, const ZeroCochain<Value>& f) {
    return gauge_transform(K, OneCocycle<Value>::zero(K), f);
}

namespace detail {

/// Breadth-first spanning forest rooted at the least vertex of each component.
/// Returns the potential obtained by integrating theta along tree edges and a
/// flag per edge telling whether it is a tree edge.
template <class Value>
std::pair<ZeroCochain<Value>, std::vector<bool>> tree_potential(const SimplicialComplex& K,
                                                                const OneCocycle<Value>& theta) {
    const auto n = static_cast<std::size_t>(K.vertex_count());
    std::vector<std::vector<std::pair<Vertex, Index>>> adj(n);
    const auto& edges = K.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<std::size_t>(edges[e][0])].emplace_back(edges[e][1], static_cast<Index>(e));
        adj[static_cast<std::size_t>(edges[e][1])].emplace_back(edges[e][0], static_cast<Index>(e));
    }
    ZeroCochain<Value> f(n, Value(0));
    std::vector<bool> visited(n, false), tree(edges.size(), false);
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (const auto& [v, e] : adj[u]) {
                const auto vi = static_cast<std::size_t>(v);
                if (visited[vi]) continue;
                visited[vi] = true;
                tree[static_cast<std::size_t>(e)] = true;
                const Value step = (static_cast<Vertex>(u) < v) ? theta[e] : -theta[e];
                f[vi] = f[u] + step;
                queue.push(vi);
            }
        }
    }
    return {std::move(f), std::move(tree)};
}

}  // namespace detail

/// Holonomies of the fundamental cycles of a breadth-first spanning forest,
/// one per non-tree edge in edge order. All zero iff theta is exact.
template <class Value>
std::vector<Value> fundamental_holonomies(const SimplicialComplex& K, const OneCocycle<Value>& theta) {
    require_defined(K, theta);
    auto [f, tree] = detail::tree_potential(K, theta);
    std::vector<Value> out;
    const auto& edges = K.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (tree[e]) continue;
        out.push_back(theta[static_cast<Index>(e)] - (f[static_cast<std::size_t>(edges[e][1])] -
                                                      f[static_cast<std::size_t>(edges[e][0])]));
    }
    return out;
}

/// Potential f with f(v) - f(u) = theta(u,v) on every edge, anchored to 0 at
/// the least vertex of each component; nullopt when theta is not exact.
/// Real cocycles are solved by least squares and accepted when the residual
/// is at most 1e-9.
template <class Value>
std::optional<ZeroCochain<Value>> is_exact(const SimplicialComplex& K, const OneCocycle<Value>& theta) {
    require_defined(K, theta);
    const auto& edges = K.simplices(1);
    if constexpr (std::is_integral_v<Value>) {
        auto [f, tree] = detail::tree_potential(K, theta);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (f[static_cast<std::size_t>(edges[e][1])] - f[static_cast<std::size_t>(edges[e][0])] !=
                theta[static_cast<Index>(e)])
                return std::nullopt;
        }
        return f;
    } else {
        const Index n = K.vertex_count();
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(K.count(1), n);
        Eigen::VectorXd rhs(K.count(1));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            D(static_cast<Index>(e), edges[e][0]) = -1.0;
            D(static_cast<Index>(e), edges[e][1]) = 1.0;
            rhs(static_cast<Index>(e)) = theta[static_cast<Index>(e)];
        }
        Eigen::VectorXd x = n > 0 ? Eigen::VectorXd(D.completeOrthogonalDecomposition().solve(rhs))
                                  : Eigen::VectorXd();
        if (edges.size() > 0 && (D * x - rhs).cwiseAbs().maxCoeff() > kExactnessResidual) return std::nullopt;
        const auto comp = connected_components(K);
        ZeroCochain<Value> f(static_cast<std::size_t>(n));
        for (Index v = 0; v < n; ++v) f[static_cast<std::size_t>(v)] = x(v) - x(comp[static_cast<std::size_t>(v)]);
        return f;
    }
}

}  // namespace novikov
