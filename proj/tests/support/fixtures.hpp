#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "splice_alex/splice_diagram.hpp"

namespace splice_alex::testing {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline SpliceDiagram load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

/// Single node, leaf weight r, arrows of multiplicity 1 and qr on edges
/// weighted 1 and p - qr. Link at infinity of (x^q y + 1)^r + x^p.
inline SpliceDiagram curve_family(std::int64_t p, std::int64_t q, std::int64_t r) {
  std::vector<Vertex> vertices{
      {"n", VertexKind::Node, 0},
      {"w", VertexKind::Leaf, 0},
      {"a1", VertexKind::Arrowhead, 1},
      {"a2", VertexKind::Arrowhead, q * r},
  };
  std::vector<Edge> edges{{0, 1, r, std::nullopt}, {0, 2, 1, std::nullopt}, {0, 3, p - q * r, std::nullopt}};
  return SpliceDiagram(std::move(vertices), std::move(edges));
}

}  // namespace splice_alex::testing
