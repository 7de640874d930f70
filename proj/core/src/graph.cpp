#include "glsg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace glsg {

GlsgGraph::GlsgGraph(int order, std::vector<Vertex> vertices, std::vector<std::uint64_t> bits,
                     std::vector<int> degrees, long long edge_count)
    : order_(order),
      vertices_(std::move(vertices)),
      bits_(std::move(bits)),
      degrees_(std::move(degrees)),
      edge_count_(edge_count) {}

GlsgGraph build_graph(const CayleyTable& t, bool allow_large) {
  const int n = t.order();
  const long long vcount = static_cast<long long>(n) * n;
  if (vcount > GlsgGraph::kMaxVertices && !allow_large) {
    throw GraphTooLargeError(vcount, GlsgGraph::kMaxVertices);
  }

  std::vector<Vertex> vertices;
  vertices.reserve(vcount);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      vertices.push_back(Vertex{i, j, t.product(i, j)});
    }
  }

  std::vector<std::uint64_t> bits((static_cast<std::uint64_t>(vcount) * vcount + 63) / 64, 0);
  std::vector<int> degrees(vcount, 0);
  long long edges = 0;
  auto set_bit = [&](long long u, long long v) {
    const std::uint64_t pos = static_cast<std::uint64_t>(u) * vcount + v;
    bits[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  };
  for (long long u = 0; u < vcount; ++u) {
    const Vertex& a = vertices[u];
    for (long long v = u + 1; v < vcount; ++v) {
      const Vertex& b = vertices[v];
      const int agreements = (a.i == b.i) + (a.j == b.j) + (a.k == b.k);
      if (agreements == 1) {
        set_bit(u, v);
        set_bit(v, u);
        ++degrees[u];
        ++degrees[v];
        ++edges;
      }
    }
  }
  return GlsgGraph(n, std::move(vertices), std::move(bits), std::move(degrees), edges);
}

std::vector<int> naive_degrees(const GlsgGraph& g) {
  const int vcount = g.vertex_count();
  std::vector<int> deg(vcount, 0);
  for (int u = 0; u < vcount; ++u) {
    int d = 0;
    for (int v = 0; v < vcount; ++v) {
      if (v != u && g.adjacent(u, v)) ++d;
    }
    deg[u] = d;
  }
  return deg;
}

std::vector<std::vector<int>> connected_components(const GlsgGraph& g) {
  const int vcount = g.vertex_count();
  std::vector<bool> visited(vcount, false);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < vcount; ++start) {
    if (visited[start]) continue;
    std::vector<int> component;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      component.push_back(u);
      for (int v = 0; v < vcount; ++v) {
        if (!visited[v] && g.adjacent(u, v)) {
          visited[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool verify_null_tensor(const CayleyTable& t, bool allow_large) {
  const int zero = t.entries()[0];
  for (int v : t.entries()) {
    if (v != zero) throw NotNullError();
  }
  const GlsgGraph g = build_graph(t, allow_large);
  const int vcount = g.vertex_count();
  const auto& verts = g.vertices();
  for (int u = 0; u < vcount; ++u) {
    for (int v = u + 1; v < vcount; ++v) {
      const bool tensor_rule = verts[u].i != verts[v].i && verts[u].j != verts[v].j;
      if (g.adjacent(u, v) != tensor_rule) return false;
    }
  }
  return true;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::edge_list;
  if (name == "dot") return GraphFormat::dot;
  throw UnknownFormatError(std::string(name));
}

std::string export_graph(const GlsgGraph& g, GraphFormat format) {
  std::ostringstream out;
  const int vcount = g.vertex_count();
  switch (format) {
    case GraphFormat::edge_list:
      for (int u = 0; u < vcount; ++u) {
        for (int v = u + 1; v < vcount; ++v) {
          if (g.adjacent(u, v)) out << (u + 1) << ' ' << (v + 1) << '\n';
        }
      }
      return out.str();
    case GraphFormat::dot: {
      out << "graph glsg {\n";
      for (int u = 0; u < vcount; ++u) {
        const Vertex& a = g.vertices()[u];
        out << "  v" << (u + 1) << " [label=\"(" << a.i << ',' << a.j << ',' << a.k << ")\"];\n";
      }
      for (int u = 0; u < vcount; ++u) {
        for (int v = u + 1; v < vcount; ++v) {
          if (g.adjacent(u, v)) out << "  v" << (u + 1) << " -- v" << (v + 1) << ";\n";
        }
      }
      out << "}\n";
      return out.str();
    }
  }
  throw UnknownFormatError("format=" + std::to_string(static_cast<int>(format)));
}

long long count_cross_block_edges(const GlsgGraph& g, const std::vector<int>& block_of_vertex) {
  const int vcount = g.vertex_count();
  long long cross = 0;
  for (int u = 0; u < vcount; ++u) {
    for (int v = u + 1; v < vcount; ++v) {
      if (g.adjacent(u, v) && block_of_vertex[u] != block_of_vertex[v]) ++cross;
    }
  }
  return cross;
}

}  // namespace glsg
