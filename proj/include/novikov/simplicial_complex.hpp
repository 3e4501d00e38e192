#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "novikov/scalar.hpp"

namespace novikov {

using Vertex = std::int32_t;
/// Strictly increasing vertex tuple; its position in the tuple fixes the orientation.
using Simplex = std::vector<Vertex>;

/// Finite ordered simplicial complex, closed under faces.
///
/// Simplices of each dimension are kept in lexicographic order, which fixes
/// the row/column indexing of every matrix built from the complex. Every
/// vertex 0..vertex_count-1 is a 0-simplex, isolated or not.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given simplices. Tuples may be unsorted but must not
    /// repeat a vertex.
    static SimplicialComplex build(Index vertex_count, const std::vector<Simplex>& maximal);
    /// Same, with vertex_count = 1 + largest vertex mentioned.
    static SimplicialComplex build(const std::vector<Simplex>& maximal);

    Index vertex_count() const { return vertex_count_; }
    /// Largest p with a p-simplex; -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    const std::vector<Simplex>& simplices(int p) const;
    Index count(int p) const;
    Index total_count() const;

    std::optional<Index> find(const Simplex& s) const;
    /// Index of a simplex known to be present; throws otherwise.
    Index index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    std::vector<Simplex> maximal_simplices() const;
    /// Every simplex is a face of a top-dimensional one.
    bool is_pure() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
    }

private:
    Index vertex_count_ = 0;
    std::vector<std::vector<Simplex>> simplices_;
};

/// Boundary matrix in degree p: rows are (p-1)-simplices, columns p-simplices,
/// entry (-1)^i where the row omits the i-th vertex of the column.
Eigen::MatrixXi boundary_matrix(const SimplicialComplex& K, int p);

std::int64_t euler_characteristic(const SimplicialComplex& K);

/// The m-gon, m >= 3.
SimplicialComplex circle(int m);
/// Boundary of the (d+1)-simplex, a triangulated d-sphere.
SimplicialComplex sphere_boundary(int d);
/// A single vertex.
SimplicialComplex point();

/// Connected components of the 1-skeleton, as component id per vertex (ids
/// numbered by least vertex).
std::vector<Index> connected_components(const SimplicialComplex& K);

}  // namespace novikov
