#include "splice_alex/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "splice_alex/at_infinity.hpp"
#include "splice_alex/error.hpp"
#include "splice_alex/multilink.hpp"
#include "splice_alex/oracles.hpp"

namespace splice_alex::report {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

json expanded_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  }
  return out;
}

bool is_polynomial_json(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("factored") && j.contains("expanded");
}

LaurentPoly poly_from_expanded(const json& expanded) {
  std::map<std::int64_t, Rational> terms;
  for (const json& term : expanded) {
    Rational c(integer_from_json(term[1]), integer_from_json(term[2]));
    c.canonicalize();
    terms[term[0].get<std::int64_t>()] = c;
  }
  return LaurentPoly::from_terms(terms);
}

json gcds_json(const ComponentGcds& g) { return {{"d", g.d}, {"d_list", g.d_list}}; }

json module_json(const ModuleDescriptor& m) {
  return {{"rank", m.free_rank}, {"order", polynomial_json(m.order_ideal)}, {"jordan", jordan_json(m.jordan_blocks)}};
}

bool has_zero_multiplicity(const SpliceDiagram& d) {
  const auto m = d.multiplicities();
  return std::find(m.begin(), m.end(), 0) != m.end();
}

// -- text rendering ---------------------------------------------------------

struct Painter {
  bool color = false;
  std::string paint(std::string_view s, std::string_view code) const {
    if (!color) return std::string(s);
    return "\x1b[" + std::string(code) + "m" + std::string(s) + "\x1b[0m";
  }
};

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_text(const json& j) {
  if (is_polynomial_json(j)) return j["factored"].get<std::string>();
  if (j.is_object()) {
    std::string out;
    for (const auto& [k, v] : j.items()) {
      if (!out.empty()) out += ' ';
      out += k + "=" + inline_text(v);
    }
    return out;
  }
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += inline_text(j[i]);
    }
    return out + "]";
  }
  return scalar_text(j);
}

void render_text(std::ostream& os, const std::string& key, const json& j, const Painter& p) {
  if (is_polynomial_json(j)) {
    os << p.paint(key, "1") << ": " << j["factored"].get<std::string>() << '\n';
    os << p.paint(key + "_expanded", "1") << ": " << to_string(poly_from_expanded(j["expanded"])) << '\n';
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(os, key.empty() ? k : key + "." + k, v, p);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    if (j.empty()) return;
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << p.paint(key + "[" + std::to_string(i) + "]", "1") << ": " << inline_text(j[i]) << '\n';
    }
    return;
  }
  std::string value = inline_text(j);
  if (j.is_boolean()) value = p.paint(value, j.get<bool>() ? "32" : "31");
  os << p.paint(key, "1") << ": " << value << '\n';
}

// Expanded form of the first polynomial in a comparison, for the summary line.
std::optional<LaurentPoly> first_polynomial(const json& c) {
  for (const auto& [k, v] : c.items()) {
    if (is_polynomial_json(v)) return poly_from_expanded(v["expanded"]);
    if (v.is_object() && v.contains("order")) return poly_from_expanded(v["order"]["expanded"]);
  }
  return std::nullopt;
}

std::string render(const json& doc, const Style& style) {
  if (style.format == Format::Json) return doc.dump(2) + "\n";
  const Painter p{style.color};
  std::ostringstream os;
  os << p.paint("# " + doc["command"].get<std::string>() + " " + doc["source"].get<std::string>(), "36") << '\n';
  const json& results = doc["results"];
  if (results.contains("comparisons")) {
    for (const json& c : results["comparisons"]) {
      const bool agree = c["agree"].get<bool>();
      os << p.paint(c["name"].get<std::string>(), "1") << ": " << p.paint(agree ? "agree" : "DISAGREE", agree ? "32" : "31");
      if (const auto poly = first_polynomial(c)) os << ": " << to_string(*poly);
      os << '\n';
    }
  }
  render_text(os, "", results, p);
  return os.str();
}

json document(std::string_view command, const std::string& source, const json& digest, json results) {
  return {{"tool_version", kToolVersion},
          {"command", command},
          {"source", source},
          {"diagram_digest", digest},
          {"results", std::move(results)}};
}

std::string error_line(const std::string& source, const std::string& what, const Style& style) {
  return Painter{style.color && style.format == Format::Text}.paint("error", "31") + ": " + source + ": " + what +
         "\n";
}

bool all_agree(const json& results) {
  return std::all_of(results["comparisons"].begin(), results["comparisons"].end(),
                     [](const json& c) { return c["agree"].get<bool>(); });
}

}  // namespace

json polynomial_json(const CycloProduct& p) {
  return {{"factored", to_string(p)}, {"expanded", expanded_json(cyclo_expand(p))}};
}

json polynomial_json(const LaurentPoly& p) {
  return {{"factored", to_string(p)}, {"expanded", expanded_json(p)}};
}

json jordan_json(const std::vector<JordanBlock>& blocks) {
  json out = json::array();
  for (const JordanBlock& b : blocks) {
    out.push_back({{"eigenvalue", to_string(b.eigenvalue)}, {"size", b.size}, {"count", b.count}});
  }
  return out;
}

std::string diagram_digest(const SpliceDiagram& d) {
  const std::string text = serialize(d);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

json check_results(const SpliceDiagram& d) {
  const ValidationReport report = validate(d);
  json findings = json::array();
  for (const Finding& f : report.findings) {
    findings.push_back({{"severity", f.severity == Severity::Error ? "ERROR" : "FIBRATION"},
                        {"code", f.code},
                        {"location", f.location.empty() ? "-" : f.location},
                        {"message", f.message}});
  }
  return {{"ok", report.ok()}, {"findings", std::move(findings)}};
}

json invariants_results(const SpliceDiagram& d) {
  require_valid(d, false);
  json out;
  json warnings = json::array();
  try {
    out["gcds"] = gcds_json(component_gcds(d));
  } catch (const Error& e) {
    out["gcds"] = nullptr;
    warnings.push_back(e.what());
  }

  json vertices = json::array();
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    const Vertex& x = d.vertices()[v];
    json entry{{"id", x.id}, {"kind", to_string(x.kind)}, {"valency", d.valency(v)}};
    entry["m"] = d.is_arrowhead(v) ? x.multiplicity : virtual_multiplicity(d, v);
    vertices.push_back(std::move(entry));
  }
  out["vertices"] = std::move(vertices);

  json edges = json::array();
  for (std::size_t e : internal_edges(d)) {
    const Edge& edge = d.edges()[e];
    json entry{{"a", d.vertices()[edge.a].id}, {"b", d.vertices()[edge.b].id}};
    try {
      entry["d_E"] = edge_invariant_dE(d, e);
    } catch (const Error& err) {
      entry["d_E"] = nullptr;
      warnings.push_back(err.what());
    }
    edges.push_back(std::move(entry));
  }
  out["edges"] = std::move(edges);

  json nodes = json::array();
  for (std::size_t v = 0; v < d.vertices().size(); ++v) {
    if (!d.is_node(v)) continue;
    json entry{{"id", d.vertices()[v].id}};
    try {
      entry["d_v"] = node_invariant_dv(d, v);
    } catch (const Error& err) {
      entry["d_v"] = nullptr;
      warnings.push_back(err.what());
    }
    nodes.push_back(std::move(entry));
  }
  out["nodes"] = std::move(nodes);

  json linking = json::array();
  const auto& arrows = d.arrowheads();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = i + 1; j < arrows.size(); ++j) {
      linking.push_back({{"a", d.vertices()[arrows[i]].id},
                         {"b", d.vertices()[arrows[j]].id},
                         {"lk", linking_number(d, arrows[i], arrows[j])}});
    }
  }
  out["linking"] = std::move(linking);
  out["warnings"] = std::move(warnings);
  return out;
}

json alexander_results(const SpliceDiagram& d) {
  require_valid(d, true);
  json out;
  json warnings = json::array();
  out["gcds"] = gcds_json(component_gcds(d));
  out["delta"] = polynomial_json(characteristic_delta(d));
  out["delta_prime"] = polynomial_json(delta_prime(d));
  const SplitModule split = split_module(d);
  json summands = json::array();
  for (const CycloProduct& s : split.a_b_summands) summands.push_back(polynomial_json(s));
  out["a_b_summands"] = std::move(summands);
  out["a_g_order"] = polynomial_json(split.a_g_order);
  if (d.uniform_twists()) {
    const ModuleDescriptor m = multilink_module(d);
    out["rank"] = m.free_rank;
    out["jordan"] = jordan_json(m.jordan_blocks);
  } else {
    warnings.push_back("uniform_twists is false: Jordan data not determined");
  }
  out["warnings"] = std::move(warnings);
  return out;
}

json at_infinity_results(const SpliceDiagram& d) {
  require_valid(d, true);
  if (has_zero_multiplicity(d)) throw Error(ErrorCode::ZeroMultiplicity, "at-infinity needs every m_i nonzero");
  json out;
  json warnings = json::array();
  const ComponentGcds gcds = component_gcds(d);
  out["gcds"] = gcds_json(gcds);
  out["delta_tilde"] = polynomial_json(order_ideal_tilde_delta(d));
  if (d.uniform_twists()) {
    const ModuleDescriptor m = at_infinity_module(d);
    out["rank"] = m.free_rank;
    out["jordan"] = jordan_json(m.jordan_blocks);
  } else {
    std::int64_t rank = 0;
    for (std::int64_t di : gcds.d_list) rank += di - 1;
    out["rank"] = rank;
    warnings.push_back("uniform_twists is false: Jordan data not determined");
  }
  const RationalSummary q = boundary_link_rational_summary(d);
  out["rational_summary"] = {{"free_rank", q.free_rank},
                             {"t_minus_one_summands", q.t_minus_one_summands},
                             {"a_g", q.a_g_status},
                             {"caveat", q.caveat}};
  out["warnings"] = std::move(warnings);
  return out;
}

json oracle_results(const SpliceDiagram& d) {
  require_valid(d, true);
  const ComponentGcds gcds = component_gcds(d);
  json comparisons = json::array();

  const BoundaryCheck ab = verify_a_b(gcds.d_list, gcds.d);
  comparisons.push_back({{"name", "a_b"},
                         {"agree", ab.agree},
                         {"matrix", module_json(ab.from_matrix)},
                         {"formula", module_json(ab.from_formula)}});

  if (!has_zero_multiplicity(d)) {
    const CycloProduct tilde = order_ideal_tilde_delta(d);
    const auto n = static_cast<std::int64_t>(gcds.d_list.size());
    const CycloProduct via_split = CycloProduct::binomial(1, n - 1) * split_module(d).a_g_order;
    comparisons.push_back({{"name", "delta_tilde"},
                           {"agree", cyclo_normalize(tilde) == cyclo_normalize(via_split)},
                           {"closed_form", polynomial_json(tilde)},
                           {"via_a_g", polynomial_json(via_split)}});
  }

  json genus{{"name", "genus"}};
  try {
    const FiberSummary f = fiber_summary(d);
    genus["agree"] = true;
    genus["genus"] = f.genus;
    genus["rank_h1_fiber"] = f.rank_h1_fiber;
    genus["rank_h1_closed_fiber"] = f.rank_h1_closed_fiber;
  } catch (const Error& e) {
    genus["agree"] = false;
    genus["error"] = e.what();
  }
  comparisons.push_back(std::move(genus));

  if (d.uniform_twists()) {
    const ModuleDescriptor m = multilink_module(d);
    const CycloProduct delta = characteristic_delta(d);
    comparisons.push_back({{"name", "jordan_dimension"},
                           {"agree", jordan_dimension(m.jordan_blocks) == delta.degree()},
                           {"blocks", jordan_dimension(m.jordan_blocks)},
                           {"deg_delta", delta.degree()}});
  }
  return {{"comparisons", std::move(comparisons)}};
}

json oracle_hb_results(const std::vector<std::int64_t>& d_list, std::int64_t d) {
  const BoundaryCheck ab = verify_a_b(d_list, d);
  return {{"comparisons", json::array({{{"name", "a_b"},
                                        {"agree", ab.agree},
                                        {"matrix", module_json(ab.from_matrix)},
                                        {"formula", module_json(ab.from_formula)}}})}};
}

json oracle_torus_results(std::int64_t p, std::int64_t q) {
  const LaurentPoly fox = torus_knot_delta_fox(p, q);
  const LaurentPoly closed = canonical(cyclo_expand(characteristic_delta(torus_knot_diagram(p, q))));
  return {{"comparisons", json::array({{{"name", "torus_delta"},
                                        {"agree", fox == closed},
                                        {"fox", polynomial_json(fox)},
                                        {"splice", polynomial_json(closed)}}})}};
}

CommandOutput run_file(std::string_view command, const std::string& path, const Style& style) {
  CommandOutput out;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.exit_code = 2;
    out.err = error_line(path, "cannot read file", style);
    return out;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  std::optional<SpliceDiagram> parsed;
  try {
    parsed.emplace(parse_diagram(buffer.str()));
  } catch (const Error& e) {
    out.exit_code = 2;
    out.err = error_line(path, e.what(), style);
    return out;
  }
  const SpliceDiagram& d = *parsed;

  try {
    json results;
    if (command == "check") {
      results = check_results(d);
      if (!results["ok"].get<bool>()) out.exit_code = 1;
    } else if (command == "invariants") {
      results = invariants_results(d);
    } else if (command == "alexander") {
      results = alexander_results(d);
    } else if (command == "at-infinity") {
      results = at_infinity_results(d);
    } else if (command == "oracle") {
      results = oracle_results(d);
      if (!all_agree(results)) out.exit_code = 1;
    } else {
      out.exit_code = 2;
      out.err = error_line(path, "unknown command " + std::string(command), style);
      return out;
    }

    if (command == "check" && style.format == Format::Text) {
      // One finding per line; nothing on success.
      const Painter p{style.color};
      for (const json& f : results["findings"]) {
        const std::string sev = f["severity"].get<std::string>();
        out.out += p.paint(sev, sev == "ERROR" ? "31" : "33") + " " + f["code"].get<std::string>() + " " +
                   f["location"].get<std::string>() + " " + f["message"].get<std::string>() + "\n";
      }
      return out;
    }
    out.out = render(document(command, path, diagram_digest(d), std::move(results)), style);
  } catch (const Error& e) {
    out.exit_code = 1;
    out.err = error_line(path, e.what(), style);
  }
  return out;
}

CommandOutput run_oracle_hb(const std::vector<std::int64_t>& args, const Style& style) {
  CommandOutput out;
  if (args.size() < 3 || args[0] < 1 || args.size() != static_cast<std::size_t>(args[0]) + 2) {
    out.exit_code = 2;
    out.err = error_line("--hb", "expected n d d_1 .. d_n", style);
    return out;
  }
  const std::vector<std::int64_t> d_list(args.begin() + 2, args.end());
  try {
    const json results = oracle_hb_results(d_list, args[1]);
    out.exit_code = all_agree(results) ? 0 : 1;
    out.out = render(document("oracle", "--hb", nullptr, results), style);
  } catch (const Error& e) {
    out.exit_code = e.code() == ErrorCode::InvalidGcdChain ? 2 : 1;
    out.err = error_line("--hb", e.what(), style);
  }
  return out;
}

CommandOutput run_oracle_torus(std::int64_t p, std::int64_t q, const Style& style) {
  CommandOutput out;
  try {
    const json results = oracle_torus_results(p, q);
    out.exit_code = all_agree(results) ? 0 : 1;
    out.out = render(document("oracle", "--torus", diagram_digest(torus_knot_diagram(p, q)), results), style);
  } catch (const Error& e) {
    out.exit_code = e.code() == ErrorCode::NotCoprime ? 2 : 1;
    out.err = error_line("--torus", e.what(), style);
  }
  return out;
}

}  // namespace splice_alex::report
