#pragma once

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sofic {

/// Finite simple graph on integer-labelled vertices. The numeric order of the
/// labels is the fixed total vertex order used by canonical forms.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<long> vertices, const std::vector<std::pair<long, long>>& edges);

  /// Vertices 0..n-1 with i ~ i+1.
  static Graph path(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);
  /// Vertices lo..hi of the integer line, consecutive ones adjacent.
  static Graph line(long lo, long hi);

  const std::vector<long>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool has_vertex(long v) const;
  bool adjacent(long u, long v) const;
  const std::set<std::pair<long, long>>& edges() const { return edges_; }

  Graph induced(const std::vector<long>& subset) const;
  /// True when f is injective on `domain`, lands in `target`, and preserves
  /// and reflects adjacency there.
  bool is_induced_embedding(const std::vector<long>& domain, const Graph& target, const std::function<long(long)>& f) const;
  /// All automorphisms as vertex maps; throws CapExceeded past `cap` candidates.
  std::vector<std::map<long, long>> automorphisms(std::size_t cap = 40320) const;

  std::string name(long v) const;
  std::optional<long> vertex_named(const std::string& s) const;
  void set_name(long v, std::string s);

  /// {"vertices": [...names...], "adjacency": {"name": [...names...]}}.
  static Graph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool operator==(const Graph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::vector<long> vertices_;
  std::set<std::pair<long, long>> edges_;  // stored with first < second
  std::map<long, std::string> names_;
};

}  // namespace sofic
