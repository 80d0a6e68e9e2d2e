#pragma once

// JSON, DOT and CSV emitters for the analysis results.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "skelkit/enumeration.hpp"
#include "skelkit/equivalence.hpp"
#include "skelkit/graph.hpp"
#include "skelkit/prime_graph.hpp"
#include "skelkit/sep_group.hpp"
#include "skelkit/skeleton.hpp"
#include "skelkit/spectral.hpp"

namespace skelkit {

// {"n": 5, "edges": [[u, v], ...]} plus "labels" when the graph carries them.
void to_json(nlohmann::json& j, const Graph& g);
// {"classes": [{"members": [...], "kind": "clique|independent|singleton"}]}
void to_json(nlohmann::json& j, const Partition& p);
// {"sizes": [...], "s": .., "alpha": .., "beta": ..}
void to_json(nlohmann::json& j, const SepSignature& sig);
// {"vertices": [...], "edges": [[p, q], ...]}
void to_json(nlohmann::json& j, const PrimeGraph& pg);
// {"length": n, "steps": [prime graphs...], "minimal": prime graph or null}
void to_json(nlohmann::json& j, const SepSeries& series);
// {"nodes": [{"size": a, "members": [...]}], "edges": [[i, j], ...]}
void to_json(nlohmann::json& j, const Skeleton& skel);
void to_json(nlohmann::json& j, const SpectralReport& report);
// {"graph6": .., "name": .. or null, "rank": .., "lambda": ..}
void to_json(nlohmann::json& j, const CatalogEntry& entry);

/// Vertices filled by equivalence class.
std::string partition_dot(const Graph& g, const Partition& p);
/// Super-nodes labeled "K_a".
std::string skeleton_dot(const Skeleton& skel);
std::string prime_graph_dot(const PrimeGraph& pg);

/// Header "graph6,name,rank,lambda" then one row per entry.
std::string catalog_csv(const std::vector<CatalogEntry>& entries);

}  // namespace skelkit
