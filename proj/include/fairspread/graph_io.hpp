// Copyright 2026 The fairspread Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSPREAD_GRAPH_IO_HPP_
#define FAIRSPREAD_GRAPH_IO_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "json.hpp"

namespace fairspread {

using Json = nlohmann::json;

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path.string());
  out << text;
  if (!out) throw FileError("write failed for " + path.string());
}

namespace detail {

template <class T>
T require(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

// Parses the graph document: {n, directed, p, edges: [[u, v], ...],
// communities: [label per vertex]}. Unknown top-level fields are ignored.
inline LabeledGraph load_graph(const Json& doc) {
  if (!doc.is_object()) throw FormatError("graph document must be an object");
  const auto n = detail::require<std::size_t>(doc, "n");
  const auto directed = detail::require<bool>(doc, "directed");
  const auto p = detail::require<double>(doc, "p");
  const auto edges = detail::require<std::vector<Edge>>(doc, "edges");
  const auto labels =
      detail::require<std::vector<CommunityId>>(doc, "communities");
  if (labels.size() != n) {
    throw FormatError("expected " + std::to_string(n) +
                      " community labels, found " +
                      std::to_string(labels.size()) +
                      " (every vertex needs a label)");
  }
  Graph g(n, edges, directed, p);
  return {std::move(g), CommunityPartition(labels)};
}

inline LabeledGraph load_graph_file(const std::filesystem::path& path) {
  return load_graph(read_json_file(path));
}

inline std::string format_graph(const LabeledGraph& lg,
                                const Json& extra = Json::object()) {
  const Graph& g = lg.graph;
  std::ostringstream os;
  os << "{\n";
  for (const auto& [key, value] : extra.items()) {
    os << "  " << Json(key).dump() << ": " << value.dump() << ",\n";
  }
  os << "  \"n\": " << g.num_vertices() << ",\n";
  os << "  \"directed\": " << (g.directed() ? "true" : "false") << ",\n";
  os << "  \"p\": " << Json(g.p()).dump() << ",\n";
  os << "  \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) os << (i % 8 == 0 ? ",\n    " : ", ");
    os << '[' << g.edges()[i].first << ", " << g.edges()[i].second << ']';
  }
  os << "],\n";
  os << "  \"communities\": " << Json(lg.partition.labels()).dump() << "\n";
  os << "}\n";
  return os.str();
}

inline void write_graph_file(const std::filesystem::path& path,
                             const LabeledGraph& lg,
                             const Json& extra = Json::object()) {
  write_text_file(path, format_graph(lg, extra));
}

// {community_sizes, within_prob, between_prob: number | k x k matrix}.
inline SbmSpec load_sbm_spec(const Json& doc) {
  if (!doc.is_object()) throw FormatError("SBM spec must be an object");
  SbmSpec spec;
  spec.community_sizes =
      detail::require<std::vector<std::size_t>>(doc, "community_sizes");
  spec.within_prob = detail::require<std::vector<double>>(doc, "within_prob");
  if (!doc.contains("between_prob")) {
    throw FormatError("missing field 'between_prob'");
  }
  const Json& between = doc.at("between_prob");
  const std::size_t k = spec.community_sizes.size();
  if (between.is_number()) {
    spec.between_prob.assign(
        k, std::vector<double>(k, between.get<double>()));
  } else {
    spec.between_prob =
        detail::require<std::vector<std::vector<double>>>(doc, "between_prob");
  }
  spec.validate();
  return spec;
}

inline Json sbm_spec_to_json(const SbmSpec& spec) {
  return Json{{"community_sizes", spec.community_sizes},
              {"within_prob", spec.within_prob},
              {"between_prob", spec.between_prob}};
}

}  // namespace fairspread

#endif  // FAIRSPREAD_GRAPH_IO_HPP_
