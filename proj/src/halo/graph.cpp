#include "sofic/halo/graph.hpp"

#include "sofic/core/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace sofic {

Graph::Graph(std::vector<long> vertices, const std::vector<std::pair<long, long>>& edges) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("graph: repeated vertex");
  }
  for (auto [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("graph: edge endpoint is not a vertex");
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
}

Graph Graph::path(std::size_t n) { return line(0, static_cast<long>(n) - 1); }

Graph Graph::line(long lo, long hi) {
  std::vector<long> vs;
  std::vector<std::pair<long, long>> es;
  for (long v = lo; v <= hi; ++v) {
    vs.push_back(v);
    if (v > lo) es.push_back({v - 1, v});
  }
  return Graph(vs, es);
}

Graph Graph::complete(std::size_t n) {
  std::vector<long> vs;
  std::vector<std::pair<long, long>> es;
  for (long v = 0; v < static_cast<long>(n); ++v) {
    vs.push_back(v);
    for (long u = 0; u < v; ++u) es.push_back({u, v});
  }
  return Graph(vs, es);
}

Graph Graph::edgeless(std::size_t n) {
  std::vector<long> vs;
  for (long v = 0; v < static_cast<long>(n); ++v) vs.push_back(v);
  return Graph(vs, {});
}

bool Graph::has_vertex(long v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Graph::adjacent(long u, long v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

Graph Graph::induced(const std::vector<long>& subset) const {
  std::vector<long> vs;
  for (long v : subset) {
    if (!has_vertex(v)) throw std::invalid_argument("induced: not a vertex: " + std::to_string(v));
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::pair<long, long>> es;
  for (auto [u, v] : edges_)
    if (std::binary_search(vs.begin(), vs.end(), u) && std::binary_search(vs.begin(), vs.end(), v)) es.push_back({u, v});
  Graph g(vs, es);
  for (long v : vs)
    if (auto it = names_.find(v); it != names_.end()) g.names_[v] = it->second;
  return g;
}

bool Graph::is_induced_embedding(const std::vector<long>& domain, const Graph& target, const std::function<long(long)>& f) const {
  std::set<long> images;
  for (long v : domain) {
    const long w = f(v);
    if (!target.has_vertex(w) || !images.insert(w).second) return false;
  }
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j)
      if (adjacent(domain[i], domain[j]) != target.adjacent(f(domain[i]), f(domain[j]))) return false;
  return true;
}

std::vector<std::map<long, long>> Graph::automorphisms(std::size_t cap) const {
  std::vector<long> perm = vertices_;
  std::size_t seen = 0;
  std::vector<std::map<long, long>> out;
  do {
    if (++seen > cap) throw CapExceeded("graph automorphism search exceeds cap");
    std::map<long, long> m;
    for (std::size_t i = 0; i < perm.size(); ++i) m[vertices_[i]] = perm[i];
    bool ok = true;
    for (auto [u, v] : edges_)
      if (!adjacent(m[u], m[v])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string Graph::name(long v) const {
  auto it = names_.find(v);
  return it == names_.end() ? std::to_string(v) : it->second;
}

std::optional<long> Graph::vertex_named(const std::string& s) const {
  for (auto& [v, n] : names_)
    if (n == s) return v;
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size() && has_vertex(v) && !names_.count(v)) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

void Graph::set_name(long v, std::string s) { names_[v] = std::move(s); }

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) {
    throw std::invalid_argument("graph needs a \"vertices\" array");
  }
  std::vector<long> vs;
  std::map<std::string, long> index;
  for (const auto& v : j.at("vertices")) {
    const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
    if (index.count(name)) throw std::invalid_argument("graph: repeated vertex " + name);
    index[name] = static_cast<long>(vs.size());
    vs.push_back(static_cast<long>(vs.size()));
  }
  std::vector<std::pair<long, long>> es;
  if (j.contains("adjacency")) {
    for (auto& [from, tos] : j.at("adjacency").items()) {
      if (!index.count(from)) throw std::invalid_argument("graph: unknown vertex " + from);
      for (const auto& t : tos) {
        const std::string to = t.is_string() ? t.get<std::string>() : t.dump();
        if (!index.count(to)) throw std::invalid_argument("graph: unknown vertex " + to);
        es.push_back({index[from], index[to]});
      }
    }
  }
  Graph g(vs, es);
  for (auto& [name, v] : index) g.names_[v] = name;
  return g;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  nlohmann::json adj = nlohmann::json::object();
  for (long v : vertices_) {
    vs.push_back(name(v));
    adj[name(v)] = nlohmann::json::array();
  }
  for (auto [u, v] : edges_) {
    adj[name(u)].push_back(name(v));
    adj[name(v)].push_back(name(u));
  }
  return {{"vertices", vs}, {"adjacency", adj}};
}

}  // namespace sofic
