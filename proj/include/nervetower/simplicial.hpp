#pragma once

#include "nervetower/integers.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nervetower {

/// Finite abstract simplicial complex over named vertices.
/// Vertex order is fixed at construction; simplices are stored as sorted
/// vertex-index lists, closed under faces. Every vertex is a 0-simplex.
class SimplicialComplex {
  public:
    /// `simplices` may omit faces; the closure is computed. Vertices not
    /// covered by any listed simplex become isolated 0-simplices.
    SimplicialComplex(std::vector<std::string> vertices,
                      const std::vector<std::vector<std::string>>& simplices);

    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }
    std::size_t vertex_index(const std::string& name) const;

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t num_simplices(int n) const {
        return (n >= 0 && n <= dimension()) ? by_dim_[n].size() : 0;
    }
    const std::vector<std::vector<std::size_t>>& simplices(int n) const;
    /// Index of a sorted vertex-index list among the n-simplices; -1 if absent.
    long simplex_index(const std::vector<std::size_t>& s) const;

    bool has_simplex(const std::vector<std::size_t>& sorted) const {
        return simplex_index(sorted) >= 0;
    }

    /// Simplices as vertex-name lists (all dimensions), for serialization.
    std::vector<std::vector<std::string>> simplex_names() const;

  private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::vector<std::size_t>>> by_dim_;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup_;
};

/// Simplicial map: a vertex assignment under which every source simplex
/// lands on a target simplex (possibly degenerately).
class SimplicialMap {
  public:
    SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                  std::vector<std::size_t> vertex_map);
    SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                  const std::map<std::string, std::string>& by_name);

    static SimplicialMap identity(const SimplicialComplex& k);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    std::size_t apply(std::size_t v) const { return vertex_map_[v]; }
    const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }

    SimplicialMap compose_after(const SimplicialMap& first) const;

  private:
    void validate() const;
    SimplicialComplex source_, target_;
    std::vector<std::size_t> vertex_map_;
};

/// Cycle graph C_n: vertices "0".."n-1", edges {i, i+1 mod n}.
SimplicialComplex cycle_complex(std::size_t n);

/// Discrete complex on n isolated vertices "0".."n-1".
SimplicialComplex discrete_complex(std::size_t n);

} // namespace nervetower
