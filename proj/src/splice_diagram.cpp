#include "splice_alex/splice_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "splice_alex/cyclotomic.hpp"
#include "splice_alex/error.hpp"

namespace splice_alex {

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Node: return "node";
    case VertexKind::Leaf: return "leaf";
    case VertexKind::Arrowhead: return "arrow";
  }
  return "unknown";
}

SpliceDiagram::SpliceDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges, bool uniform_twists)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), uniform_twists_(uniform_twists) {
  incidence_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.a >= vertices_.size() || edge.b >= vertices_.size()) {
      throw Error(ErrorCode::UnknownVertexReference, "edge endpoint out of range");
    }
    incidence_[edge.a].push_back(e);
    if (edge.b != edge.a) incidence_[edge.b].push_back(e);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].kind == VertexKind::Arrowhead) arrowheads_.push_back(v);
  }
}

std::vector<std::int64_t> SpliceDiagram::multiplicities() const {
  std::vector<std::int64_t> m;
  for (std::size_t v : arrowheads_) m.push_back(vertices_[v].multiplicity);
  return m;
}

std::size_t SpliceDiagram::vertex_index(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id == id) return v;
  }
  throw Error(ErrorCode::UnknownVertexReference, "no vertex `" + std::string(id) + "`");
}

std::size_t SpliceDiagram::other_end(std::size_t edge, std::size_t v) const {
  const Edge& e = edges_.at(edge);
  return e.a == v ? e.b : e.a;
}

std::optional<std::int64_t> SpliceDiagram::weight_at(std::size_t edge, std::size_t v) const {
  const Edge& e = edges_.at(edge);
  return e.a == v ? e.weight_a : e.weight_b;
}

SpliceDiagram SpliceDiagram::with_multiplicities(const std::vector<std::int64_t>& m) const {
  if (m.size() != arrowheads_.size()) {
    throw Error(ErrorCode::InvalidDiagram, "expected one multiplicity per arrowhead");
  }
  std::vector<Vertex> vs = vertices_;
  for (std::size_t i = 0; i < m.size(); ++i) vs[arrowheads_[i]].multiplicity = m[i];
  return SpliceDiagram(std::move(vs), edges_, uniform_twists_);
}

SpliceDiagram SpliceDiagram::with_arrowhead_order(const std::vector<std::size_t>& order) const {
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  std::vector<std::size_t> identity(arrowheads_.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (check != identity) throw Error(ErrorCode::InvalidDiagram, "arrowhead order is not a permutation");

  // The arrowhead slots of the vertex list are refilled in the new order.
  std::vector<std::size_t> new_of_old(vertices_.size());
  std::iota(new_of_old.begin(), new_of_old.end(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) new_of_old[arrowheads_[order[i]]] = arrowheads_[i];
  std::vector<Vertex> vs(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) vs[new_of_old[v]] = vertices_[v];
  std::vector<Edge> es = edges_;
  for (auto& e : es) {
    e.a = new_of_old[e.a];
    e.b = new_of_old[e.b];
  }
  return SpliceDiagram(std::move(vs), std::move(es), uniform_twists_);
}

// -- validation --------------------------------------------------------------

bool ValidationReport::structurally_ok() const noexcept {
  return std::all_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Fibration; });
}

std::string to_string(const Finding& f) {
  return std::string(f.severity == Severity::Error ? "ERROR" : "FIBRATION") + " " + f.code + " " +
         (f.location.empty() ? "-" : f.location) + " " + f.message;
}

namespace {

std::string edge_label(const SpliceDiagram& d, std::size_t e) {
  const Edge& edge = d.edges()[e];
  return d.vertices()[edge.a].id + "-" + d.vertices()[edge.b].id;
}

bool is_tree(const SpliceDiagram& d) {
  const std::size_t n = d.vertices().size();
  if (n == 0 || d.edges().size() + 1 != n) return false;
  for (const auto& e : d.edges()) {
    if (e.a == e.b) return false;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : d.incident_edges(v)) {
      const std::size_t w = d.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

}  // namespace

ValidationReport validate(const SpliceDiagram& d) {
  ValidationReport report;
  auto error = [&](std::string code, std::string location, std::string message) {
    report.findings.push_back({Severity::Error, std::move(code), std::move(location), std::move(message)});
  };

  if (!is_tree(d)) error("NotATree", "", "the underlying graph is not a finite tree");
  if (d.arrowheads().empty()) error("NoArrowhead", "", "the diagram has no arrowhead");

  bool has_node = false;
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    const Vertex& vx = d.vertices()[v];
    const std::size_t val = d.valency(v);
    if (val > 1) has_node = true;
    const bool mismatch = vx.kind == VertexKind::Node ? val <= 1 : val != 1;
    if (mismatch) {
      error("KindValencyMismatch", vx.id,
            "declared " + std::string(to_string(vx.kind)) + " has valency " + std::to_string(val));
    }
  }
  if (!has_node) error("NoNode", "", "the diagram has no vertex of valency greater than one");

  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const Edge& edge = d.edges()[e];
    for (std::size_t end : {edge.a, edge.b}) {
      const bool weighted = d.weight_at(e, end).has_value();
      const bool node_end = d.is_node(end);
      if (node_end && !weighted) {
        error("MissingWeight", edge_label(d, e), "no weight at node " + d.vertices()[end].id);
      } else if (!node_end && weighted) {
        error("UnexpectedWeight", edge_label(d, e), "weight at valency-one vertex " + d.vertices()[end].id);
      }
      if (edge.a == edge.b) break;
    }
  }

  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (!d.is_node(v)) continue;
    std::vector<std::int64_t> weights;
    for (std::size_t e : d.incident_edges(v)) {
      if (auto w = d.weight_at(e, v)) weights.push_back(*w);
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      for (std::size_t j = i + 1; j < weights.size(); ++j) {
        if (gcd(weights[i], weights[j]) == 1) continue;
        error("NonCoprimeWeights", d.vertices()[v].id,
              "weights " + std::to_string(weights[i]) + " and " + std::to_string(weights[j]) + " share a factor");
      }
    }
  }

  if (!report.ok()) return report;

  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (d.is_arrowhead(v)) continue;
    try {
      if (virtual_multiplicity(d, v) == 0) {
        report.findings.push_back({Severity::Fibration, "ZeroVirtualMultiplicity", d.vertices()[v].id,
                                   "m(v) = 0, so the multilink is not fibered"});
      }
    } catch (const Error& ex) {
      error(std::string(to_string(ex.code())), d.vertices()[v].id, ex.what());
    }
  }
  return report;
}

void require_valid(const SpliceDiagram& d, bool fibered) {
  const ValidationReport report = validate(d);
  for (const auto& f : report.findings) {
    if (f.severity == Severity::Error) throw Error(ErrorCode::InvalidDiagram, to_string(f));
  }
  if (fibered && !report.ok()) throw Error(ErrorCode::NotFibered, to_string(report.findings.front()));
}

// -- combinatorial invariants -------------------------------------------------

TreePath tree_path(const SpliceDiagram& d, std::size_t v, std::size_t w) {
  const std::size_t n = d.vertices().size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, none);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(v);
  seen[v] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop();
    if (x == w) break;
    for (std::size_t e : d.incident_edges(x)) {
      const std::size_t y = d.other_end(e, x);
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = e;
      queue.push(y);
    }
  }
  if (!seen[w]) throw Error(ErrorCode::InvalidDiagram, "vertices are not connected");
  TreePath path;
  for (std::size_t x = w; x != v;) {
    path.vertices.push_back(x);
    path.edges.insert(parent_edge[x]);
    x = d.other_end(parent_edge[x], x);
  }
  path.vertices.push_back(v);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

namespace {

std::int64_t off_path_product(const SpliceDiagram& d, const TreePath& path) {
  std::int64_t product = 1;
  for (std::size_t u : path.vertices) {
    for (std::size_t e : d.incident_edges(u)) {
      if (path.edges.contains(e)) continue;
      const auto w = d.weight_at(e, u);
      if (!w) throw Error(ErrorCode::InvalidDiagram, "missing weight at " + d.vertices()[u].id);
      product = checked_mul(product, *w);
    }
  }
  return product;
}

}  // namespace

std::int64_t linking_number(const SpliceDiagram& d, std::size_t v, std::size_t w) {
  if (v == w) throw Error(ErrorCode::SameVertex, "linking number of a vertex with itself");
  return off_path_product(d, tree_path(d, v, w));
}

std::int64_t virtual_multiplicity(const SpliceDiagram& d, std::size_t v) {
  if (d.is_arrowhead(v)) throw Error(ErrorCode::IsArrowhead, d.vertices()[v].id + " is an arrowhead");
  std::int64_t total = 0;
  for (std::size_t a : d.arrowheads()) {
    total = checked_add(total, checked_mul(d.vertices()[a].multiplicity, linking_number(d, a, v)));
  }
  return total;
}

std::int64_t component_linking(const SpliceDiagram& d, std::size_t i, std::size_t j) {
  return linking_number(d, d.arrowheads().at(i), d.arrowheads().at(j));
}

ComponentGcds component_gcds(const SpliceDiagram& d) {
  const auto m = d.multiplicities();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) {
      throw Error(ErrorCode::ZeroMultiplicity, "arrowhead " + d.vertices()[d.arrowheads()[i]].id + " has m = 0");
    }
  }
  if (m.empty()) throw Error(ErrorCode::InvalidDiagram, "the diagram has no arrowhead");
  ComponentGcds out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.d = gcd(out.d, m[i]);
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != i) sum = checked_add(sum, checked_mul(m[j], component_linking(d, i, j)));
    }
    out.d_list.push_back(gcd(m[i], sum));
  }
  return out;
}

std::vector<std::size_t> internal_edges(const SpliceDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    if (d.is_node(d.edges()[e].a) && d.is_node(d.edges()[e].b)) out.push_back(e);
  }
  return out;
}

std::int64_t edge_invariant_dE(const SpliceDiagram& d, std::size_t edge) {
  const Edge& cut = d.edges().at(edge);
  if (!d.is_node(cut.a) || !d.is_node(cut.b)) {
    throw Error(ErrorCode::NotAnInternalEdge, edge_label(d, edge) + " does not join two nodes");
  }
  // Each half gets a new leaf at the cut, on the edge that replaces the cut
  // edge, so the cut edge counts as part of every path into that half.
  auto side_value = [&](std::size_t near) {
    std::int64_t total = 0;
    for (std::size_t a : d.arrowheads()) {
      TreePath path = tree_path(d, a, near);
      if (path.edges.contains(edge)) continue;
      path.edges.insert(edge);
      total = checked_add(total, checked_mul(d.vertices()[a].multiplicity, off_path_product(d, path)));
    }
    return total;
  };
  return gcd(side_value(cut.a), side_value(cut.b));
}

std::int64_t node_invariant_dv(const SpliceDiagram& d, std::size_t v) {
  if (!d.is_node(v)) throw Error(ErrorCode::InvalidDiagram, d.vertices()[v].id + " is not a node");
  bool any = false;
  std::int64_t g = 0;
  for (std::size_t e : d.incident_edges(v)) {
    const std::size_t w = d.other_end(e, v);
    if (d.is_node(w)) {
      g = gcd(g, edge_invariant_dE(d, e));
      any = true;
    } else if (d.is_arrowhead(w)) {
      g = gcd(g, d.vertices()[w].multiplicity);
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::EmptyGcdSet, "node " + d.vertices()[v].id + " has no internal edge or arrowhead");
  if (g == 0) throw Error(ErrorCode::ZeroGcd, "d_v vanishes at node " + d.vertices()[v].id);
  return g;
}

}  // namespace splice_alex
