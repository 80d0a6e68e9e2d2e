#include "skelkit/serialize.hpp"

#include <array>
#include <sstream>

#include "skelkit/formats.hpp"

namespace skelkit {
namespace {

constexpr std::array<const char*, 10> kPalette{"#4e79a7", "#e15759", "#59a14f", "#f28e2b", "#b07aa1",
                                               "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac"};

}  // namespace

void to_json(nlohmann::json& j, const Graph& g) {
  j = nlohmann::json{{"n", g.order()}, {"edges", nlohmann::json::array()}};
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels();
}

void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json{{"classes", nlohmann::json::array()}};
  for (const auto& c : p.classes()) {
    j["classes"].push_back({{"members", c.members}, {"kind", std::string(to_string(c.kind))}});
  }
}

void to_json(nlohmann::json& j, const SepSignature& sig) {
  j = nlohmann::json{{"sizes", sig.sizes}, {"s", sig.class_count}, {"alpha", sig.alpha}, {"beta", sig.beta}};
}

void to_json(nlohmann::json& j, const PrimeGraph& pg) {
  j = nlohmann::json{{"vertices", pg.vertices}, {"edges", nlohmann::json::array()}};
  for (const auto& [p, q] : pg.edges) j["edges"].push_back({p, q});
}

void to_json(nlohmann::json& j, const SepSeries& series) {
  j = nlohmann::json{{"length", series.length()}, {"steps", series.steps}};
  j["minimal"] = series.minimal() ? nlohmann::json(*series.minimal()) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const Skeleton& skel) {
  j = nlohmann::json{{"nodes", nlohmann::json::array()}, {"edges", nlohmann::json::array()}};
  for (const auto& node : skel.nodes()) j["nodes"].push_back({{"size", node.size}, {"members", node.members}});
  for (const auto& [a, b] : skel.edges()) j["edges"].push_back({a, b});
}

void to_json(nlohmann::json& j, const SpectralReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"rank_I_plus_A", r.rank_I_plus_A},
                     {"skeleton_vertices", r.skeleton_vertices},
                     {"lambda", r.lambda},
                     {"minus_one_multiplicity", r.minus_one_multiplicity}};
}

void to_json(nlohmann::json& j, const CatalogEntry& e) {
  j = nlohmann::json{{"graph6", e.form.graph6()}, {"rank", e.rank_I_plus_A}, {"lambda", e.lambda}};
  j["name"] = e.name ? nlohmann::json(*e.name) : nlohmann::json(nullptr);
}

std::string partition_dot(const Graph& g, const Partition& p) {
  std::vector<std::string> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = kPalette[p.class_of(v) % kPalette.size()];
  return to_dot(g, colors);
}

std::string skeleton_dot(const Skeleton& skel) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (std::size_t i = 0; i < skel.node_count(); ++i) out << "  " << i << " [label=\"K_" << skel.nodes()[i].size << "\"];\n";
  for (const auto& [a, b] : skel.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string prime_graph_dot(const PrimeGraph& pg) { return to_dot(pg.to_graph(), {}, "prime_graph"); }

std::string catalog_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  out << "graph6,name,rank,lambda\n";
  for (const auto& e : entries) {
    // Names such as K_{1,3} contain commas.
    out << e.form.graph6() << ",\"" << e.display_name() << "\"," << e.rank_I_plus_A << ',' << e.lambda << '\n';
  }
  return out.str();
}

}  // namespace skelkit
