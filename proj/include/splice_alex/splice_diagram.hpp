#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace splice_alex {

enum class VertexKind { Node, Leaf, Arrowhead };

std::string_view to_string(VertexKind kind);

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Node;
  /// Only meaningful for arrowheads.
  std::int64_t multiplicity = 0;
};

/// Endpoints are vertex indices. A weight sits at an endpoint iff that
/// endpoint has valency > 1.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<std::int64_t> weight_a;
  std::optional<std::int64_t> weight_b;
};

/// A decorated tree: arrowheads carry multiplicities m_i, edge ends at nodes
/// carry weights. Immutable after construction; structural invariants are
/// checked by validate(), not here.
class SpliceDiagram {
 public:
  SpliceDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges, bool uniform_twists = true);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool uniform_twists() const noexcept { return uniform_twists_; }

  /// Vertex indices of the arrowheads; position i is link component L_{i+1}.
  const std::vector<std::size_t>& arrowheads() const noexcept { return arrowheads_; }
  std::vector<std::int64_t> multiplicities() const;

  /// Throws UnknownVertexReference.
  std::size_t vertex_index(std::string_view id) const;
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incidence_.at(v); }
  std::size_t valency(std::size_t v) const { return incidence_.at(v).size(); }
  /// Valency greater than one.
  bool is_node(std::size_t v) const { return valency(v) > 1; }
  bool is_arrowhead(std::size_t v) const { return vertices_.at(v).kind == VertexKind::Arrowhead; }
  std::size_t other_end(std::size_t edge, std::size_t v) const;
  std::optional<std::int64_t> weight_at(std::size_t edge, std::size_t v) const;

  /// Copy with new arrowhead multiplicities, listed in arrowhead order.
  SpliceDiagram with_multiplicities(const std::vector<std::int64_t>& m) const;
  /// Copy whose i-th arrowhead is the current arrowhead order[i].
  SpliceDiagram with_arrowhead_order(const std::vector<std::size_t>& order) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  bool uniform_twists_ = true;
  std::vector<std::size_t> arrowheads_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Parses the line-oriented diagram format:
///
///   splice v1
///   uniform_twists true
///   vertex n1 node
///   vertex w1 leaf
///   vertex a1 arrow 1
///   edge n1 w1 2 _
///
/// Throws SyntaxError, DuplicateVertexId or UnknownVertexReference. No
/// structural checks happen here.
SpliceDiagram parse_diagram(std::string_view text);

/// Canonical text form; parse_diagram(serialize(d)) reproduces d.
std::string serialize(const SpliceDiagram& d);

enum class Severity { Error, Fibration };

struct Finding {
  Severity severity = Severity::Error;
  std::string code;
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const noexcept { return findings.empty(); }
  /// No findings other than fibration ones.
  bool structurally_ok() const noexcept;
};

/// One line per finding: "SEVERITY code location message".
std::string to_string(const Finding& f);

ValidationReport validate(const SpliceDiagram& d);

/// Throws InvalidDiagram on structural findings and, when requested,
/// NotFibered on fibration findings.
void require_valid(const SpliceDiagram& d, bool fibered);

/// Product of the edge weights adjacent to but not on the v-w path.
std::int64_t linking_number(const SpliceDiagram& d, std::size_t v, std::size_t w);

/// m(v) = sum_i m_i * lk(arrowhead_i, v).
std::int64_t virtual_multiplicity(const SpliceDiagram& d, std::size_t v);

/// lk(L_i, L_j) for arrowhead positions i != j.
std::int64_t component_linking(const SpliceDiagram& d, std::size_t i, std::size_t j);

struct ComponentGcds {
  std::int64_t d = 0;
  std::vector<std::int64_t> d_list;
};

/// d = gcd(m_1..m_n), d_i = gcd(m_i, sum_{j != i} m_j lk(L_i, L_j)).
ComponentGcds component_gcds(const SpliceDiagram& d);

/// Edges both of whose ends are nodes.
std::vector<std::size_t> internal_edges(const SpliceDiagram& d);

/// gcd of the linking numbers of the two halves of the diagram, cut at the
/// edge, with the virtual component at the cut.
std::int64_t edge_invariant_dE(const SpliceDiagram& d, std::size_t edge);

/// gcd of d_E over internal edges at v and |m_i| over arrowheads adjacent to v.
std::int64_t node_invariant_dv(const SpliceDiagram& d, std::size_t v);

/// Vertices and edges of the unique path from v to w.
struct TreePath {
  std::vector<std::size_t> vertices;
  std::set<std::size_t> edges;
};

TreePath tree_path(const SpliceDiagram& d, std::size_t v, std::size_t w);

}  // namespace splice_alex
