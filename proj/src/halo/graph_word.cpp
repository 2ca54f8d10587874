#include "sofic/halo/graph_word.hpp"

#include "sofic/core/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sofic {

GraphProductGroup::GraphProductGroup(Graph graph, long q) : graph_(std::move(graph)), q_(q) {
  if (q < 0) throw std::invalid_argument("vertex group order must be >= 0");
}

long GraphProductGroup::normalize(long value) const { return q_ == 0 ? value : ((value % q_) + q_) % q_; }

void GraphProductGroup::check(const GraphWord& w) const {
  for (const auto& s : w.syllables)
    if (!graph_.has_vertex(s.vertex)) throw std::invalid_argument("syllable on unknown vertex " + std::to_string(s.vertex));
}

GraphWord GraphProductGroup::reduce(const GraphWord& w) const {
  check(w);
  std::vector<Syllable> out;
  for (const auto& s0 : w.syllables) {
    Syllable s{s0.vertex, normalize(s0.value)};
    if (s.value == 0) continue;
    bool merged = false;
    for (std::size_t i = out.size(); i-- > 0;) {
      if (out[i].vertex == s.vertex) {
        out[i].value = normalize(out[i].value + s.value);
        if (out[i].value == 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        merged = true;
        break;
      }
      if (!graph_.adjacent(out[i].vertex, s.vertex)) break;
    }
    if (!merged) out.push_back(s);
  }
  return {out};
}

namespace {

// Pairs (i, j), i < j, on one vertex with everything strictly between commuting with it.
std::vector<std::pair<std::size_t, std::size_t>> merge_sites(const Graph& g, const std::vector<Syllable>& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == w[i].vertex) {
        out.push_back({i, j});
        break;
      }
      if (!g.adjacent(w[j].vertex, w[i].vertex)) break;
    }
  }
  return out;
}

}  // namespace

GraphWord GraphProductGroup::reduce_random(const GraphWord& w, SplitMix64& rng) const {
  check(w);
  std::vector<Syllable> cur;
  for (const auto& s : w.syllables)
    if (normalize(s.value) != 0) cur.push_back({s.vertex, normalize(s.value)});
  for (;;) {
    const auto sites = merge_sites(graph_, cur);
    if (sites.empty()) break;
    const auto [i, j] = sites[rng.below(sites.size())];
    const long v = normalize(cur[i].value + cur[j].value);
    const bool keep_left = rng.below(2) == 0;
    const std::size_t keep = keep_left ? i : j, drop = keep_left ? j : i;
    cur[keep].value = v;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(drop));
    if (v == 0) cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(keep_left ? i : j - 1));
  }
  return {cur};
}

bool GraphProductGroup::is_reduced(const GraphWord& w) const {
  for (const auto& s : w.syllables)
    if (normalize(s.value) == 0) return false;
  return merge_sites(graph_, w.syllables).empty();
}

GraphWord GraphProductGroup::shuffle_normal_form(const GraphWord& reduced) const {
  std::vector<Syllable> rest = reduced.syllables;
  std::vector<Syllable> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool front = true;
      for (std::size_t k = 0; k < i && front; ++k)
        front = rest[k].vertex != rest[i].vertex && graph_.adjacent(rest[k].vertex, rest[i].vertex);
      if (front && (best == rest.size() || rest[i].vertex < rest[best].vertex)) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return {out};
}

GraphWord GraphProductGroup::multiply(const GraphWord& a, const GraphWord& b) const {
  GraphWord w = a;
  w.syllables.insert(w.syllables.end(), b.syllables.begin(), b.syllables.end());
  return canonical(w);
}

GraphWord GraphProductGroup::inverse(const GraphWord& a) const {
  GraphWord w;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) w.syllables.push_back({it->vertex, normalize(-it->value)});
  return canonical(w);
}

GraphWord GraphProductGroup::generator(long vertex, long value) const { return canonical(GraphWord{{{vertex, value}}}); }

std::vector<long> GraphProductGroup::support(const GraphWord& w) const {
  std::set<long> s;
  for (const auto& x : reduce(w).syllables) s.insert(x.vertex);
  return {s.begin(), s.end()};
}

std::vector<GraphWord> GraphProductGroup::elements(std::uint64_t cap) const {
  if (q_ == 0 && !graph_.vertices().empty()) throw CapExceeded("graph product with infinite vertex groups is infinite");
  const auto& vs = graph_.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!graph_.adjacent(vs[i], vs[j])) throw CapExceeded("graph product over a non-complete graph is infinite");
  std::set<GraphWord> seen{identity()};
  std::vector<GraphWord> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<GraphWord> next;
    for (const auto& w : frontier)
      for (long v : graph_.vertices()) {
        auto x = multiply(w, generator(v));
        if (seen.insert(x).second) {
          if (seen.size() > cap) throw CapExceeded("graph product enumeration exceeds cap");
          next.push_back(std::move(x));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

GraphWord GraphProductGroup::parse(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  GraphWord w;
  while (in >> tok) {
    const auto colon = tok.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("syllable needs the form v:k, got " + tok);
    const auto v = graph_.vertex_named(tok.substr(0, colon));
    if (!v) throw std::invalid_argument("unknown vertex in syllable " + tok);
    long k;
    try {
      std::size_t used = 0;
      k = std::stol(tok.substr(colon + 1), &used);
      if (used != tok.size() - colon - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element index in syllable " + tok);
    }
    w.syllables.push_back({*v, k});
  }
  return w;
}

std::string GraphProductGroup::format(const GraphWord& w) const {
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += graph_.name(s.vertex) + ":" + std::to_string(s.value);
  }
  return out;
}

std::string format_word(const GraphWord& w) {
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.vertex) + ":" + std::to_string(s.value);
  }
  return out;
}

void to_json(nlohmann::json& j, const GraphWord& w) { j = format_word(w); }

}  // namespace sofic
