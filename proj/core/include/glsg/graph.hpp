#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glsg/cayley_table.hpp"

namespace glsg {

/// One graph vertex (s_i, s_j, s_k) with product(i,j) = k; indices 1-based.
struct Vertex {
  int i = 0;
  int j = 0;
  int k = 0;

  bool operator==(const Vertex&) const = default;
};

/// Explicit graph of a table: the n^2 vertices in row-major cell order and
/// a packed symmetric adjacency bitset. Two distinct vertices are adjacent
/// iff they agree in exactly one coordinate. Vertex indices in this API are
/// 0-based (vertex v corresponds to cell (v/n + 1, v%n + 1)); exported text
/// formats are 1-based.
class GlsgGraph {
 public:
  static constexpr long long kMaxVertices = 4096;

  GlsgGraph(int order, std::vector<Vertex> vertices, std::vector<std::uint64_t> bits,
            std::vector<int> degrees, long long edge_count);

  int order() const noexcept { return order_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  long long edge_count() const noexcept { return edge_count_; }

  bool adjacent(int u, int v) const {
    const std::uint64_t pos =
        static_cast<std::uint64_t>(u) * vertices_.size() + static_cast<std::uint64_t>(v);
    return (bits_[pos >> 6] >> (pos & 63)) & 1u;
  }

 private:
  int order_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
  long long edge_count_;
};

/// Materializes the graph by the literal definition: every vertex pair is
/// tested for agreement in exactly one coordinate, O(n^4) pair checks. This
/// is the independent oracle against the O(n^2) invariant formula. Refuses
/// tables with more than kMaxVertices vertices unless allow_large is set.
///
/// No special case is needed for vertices sharing two coordinates: distinct
/// vertices cannot share both i and j (k is determined by the cell), and a
/// pair sharing {i,k} or {j,k} counts two agreements, which the
/// exactly-one rule already excludes.
GlsgGraph build_graph(const CayleyTable& t, bool allow_large = false);

/// Per-vertex degrees recomputed as adjacency row sums.
std::vector<int> naive_degrees(const GlsgGraph& g);

/// Connected components as sorted 0-based vertex index lists, ordered by
/// smallest contained vertex.
std::vector<std::vector<int>> connected_components(const GlsgGraph& g);

/// For a constant (null semigroup) table, checks that adjacency matches the
/// tensor-square rule of the complete graph: u ~ v iff u.i != v.i and
/// u.j != v.j. Throws NotNull when the table is not constant.
bool verify_null_tensor(const CayleyTable& t, bool allow_large = false);

enum class GraphFormat { edge_list, dot };

/// Accepts "edge-list" or "dot"; anything else is UnknownFormat.
GraphFormat parse_graph_format(std::string_view name);

/// edge-list: one "u v" line per edge with u < v, 1-based row-major vertex
/// indices, sorted. dot: an undirected graph with labels "(i,j,k)".
std::string export_graph(const GlsgGraph& g, GraphFormat format);

/// Number of edges whose endpoints carry different block labels.
long long count_cross_block_edges(const GlsgGraph& g, const std::vector<int>& block_of_vertex);

}  // namespace glsg
