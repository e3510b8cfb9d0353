#include "puz5/graph.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

namespace puz5 {

std::int64_t WalkTrace::distinct_count() const {
  std::unordered_set<std::int32_t> seen(visited.begin(), visited.end());
  return static_cast<std::int64_t>(seen.size());
}

bool WalkTrace::simple() const {
  std::unordered_set<std::int32_t> seen;
  for (std::size_t i = 0; i + 1 < visited.size(); ++i)
    if (!seen.insert(visited[i]).second) return false;
  // The last vertex may only coincide with the start (a closed walk).
  return !seen.contains(visited.back()) || visited.back() == visited.front();
}

WalkTrace trace(const LabeledDigraph& g, std::int32_t start, const MoveWord& w) {
  WalkTrace t;
  t.start = start;
  t.word = w;
  t.visited.reserve(w.size() + 1);
  t.visited.push_back(start);
  std::int32_t cur = start;
  for (MoveLetter l : w) {
    cur = g.step(cur, l);
    t.visited.push_back(cur);
  }
  return t;
}

bool is_hamiltonian_cycle(const LabeledDigraph& g, const WalkTrace& t) {
  return t.closed() && t.simple() &&
         t.visited.size() == static_cast<std::size_t>(g.size()) + 1 &&
         t.distinct_count() == g.size();
}

bool is_hamiltonian_path(const LabeledDigraph& g, const WalkTrace& t) {
  return !t.closed() && t.simple() &&
         t.visited.size() == static_cast<std::size_t>(g.size()) &&
         t.distinct_count() == g.size();
}

GroupGraph build_cayley_g() {
  std::array<GroupElem, 3> gens = {generator(MoveLetter::L),
                                   generator(MoveLetter::R),
                                   generator(MoveLetter::V)};
  return build_cayley(gens, GroupElem::identity(), "cayley-g",
                      [](const GroupElem& e) { return e.str(); });
}

PermGraph build_cayley_s5() {
  std::array<Perm, 3> gens = {letter_perm(MoveLetter::L),
                              letter_perm(MoveLetter::R),
                              letter_perm(MoveLetter::V)};
  return build_cayley(gens, Perm::identity(), "cayley-s5",
                      [](const Perm& p) { return p.one_line(); });
}

StateGraph build_state_graph() {
  // Enumerate positions breadth-first, then index them by their encoding so
  // vertex numbering agrees with the Cayley graph's.
  std::vector<Position> found = {Position::home()};
  std::set<Position> seen = {Position::home()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    Position cur = found[head];
    for (MoveLetter l : kAllLetters) {
      Position nxt = apply_move(cur, l);
      if (seen.insert(nxt).second) found.push_back(nxt);
    }
  }

  std::vector<std::pair<GroupElem, Position>> keyed;
  keyed.reserve(found.size());
  for (const Position& p : found) keyed.emplace_back(encode(p), p);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::map<Position, std::int32_t> index;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    index[keyed[i].second] = static_cast<std::int32_t>(i);

  StateGraph out;
  out.digraph.id = "state";
  out.positions.reserve(keyed.size());
  for (const auto& [g, p] : keyed) {
    out.positions.push_back(p);
    out.digraph.names.push_back(p.str());
    std::array<std::int32_t, 3> row{};
    for (int l = 0; l < 3; ++l)
      row[l] = index.at(apply_move(p, static_cast<MoveLetter>(l)));
    out.digraph.next.push_back(row);
  }
  return out;
}

std::vector<UndirectedEdge> undirected_edges(const LabeledDigraph& g) {
  // One edge per R-arc (its reverse is an L-arc), one per V-arc pair.
  // Emitting per arc keeps parallel edges between the same coset pair.
  std::vector<UndirectedEdge> edges;
  for (std::int32_t v = 0; v < g.size(); ++v) {
    std::int32_t r = g.step(v, MoveLetter::R);
    edges.push_back({std::min(v, r), std::max(v, r), MoveLetter::R});
    std::int32_t w = g.step(v, MoveLetter::V);
    if (v <= w) edges.push_back({v, w, MoveLetter::V});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

nlohmann::ordered_json digraph_to_json(const LabeledDigraph& g) {
  nlohmann::ordered_json j;
  j["graph"] = g.id;
  j["vertices"] = g.names;
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (std::int32_t v = 0; v < g.size(); ++v)
    for (MoveLetter l : kAllLetters)
      arcs.push_back({v, std::string(1, to_char(l)), g.step(v, l)});
  j["arcs"] = std::move(arcs);
  return j;
}

std::string digraph_to_dot(const LabeledDigraph& g, bool letter_labels) {
  std::ostringstream os;
  os << "graph \"" << g.id << "\" {\n";
  for (std::int32_t v = 0; v < g.size(); ++v)
    os << "  " << v << " [label=\"" << g.names[v] << "\"];\n";
  for (const UndirectedEdge& e : undirected_edges(g)) {
    os << "  " << e.u << " -- " << e.v;
    if (letter_labels) os << " [label=\"" << to_char(e.label) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace puz5
