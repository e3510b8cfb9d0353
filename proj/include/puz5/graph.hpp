#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "puz5/group.hpp"
#include "puz5/puzzle.hpp"

namespace puz5 {

// Letter-labeled digraph with a deterministic successor per (vertex, letter).
// Vertex indexing is fixed at build time (sorted by payload) so exports and
// certificates are reproducible.
struct LabeledDigraph {
  std::string id;
  std::vector<std::string> names;                  // payload per vertex
  std::vector<std::array<std::int32_t, 3>> next;   // next[v][letter]

  std::int32_t size() const { return static_cast<std::int32_t>(next.size()); }
  std::int32_t step(std::int32_t v, MoveLetter l) const {
    return next[v][static_cast<int>(l)];
  }
};

struct WalkTrace {
  std::int32_t start = 0;
  MoveWord word;
  std::vector<std::int32_t> visited;  // word.size() + 1 entries

  bool closed() const { return visited.front() == visited.back(); }
  std::int64_t distinct_count() const;
  // No vertex repeats, except the final one when the walk closes.
  bool simple() const;
};

WalkTrace trace(const LabeledDigraph& g, std::int32_t start, const MoveWord& w);

bool is_hamiltonian_cycle(const LabeledDigraph& g, const WalkTrace& t);
bool is_hamiltonian_path(const LabeledDigraph& g, const WalkTrace& t);

// Generic Cayley-graph builder: closure of `seed` under right multiplication
// by the letter generators, vertices sorted by element value.
template <class Elem>
struct CayleyGraph {
  LabeledDigraph digraph;
  std::vector<Elem> elems;  // sorted; aligned with vertex indices

  std::int32_t index_of(const Elem& e) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    return static_cast<std::int32_t>(it - elems.begin());
  }
};

using GroupGraph = CayleyGraph<GroupElem>;
using PermGraph = CayleyGraph<Perm>;

template <class Elem, class NameFn>
CayleyGraph<Elem> build_cayley(const std::array<Elem, 3>& letter_gens,
                               const Elem& seed, std::string graph_id,
                               NameFn&& name) {
  std::vector<Elem> elems = {seed};
  std::map<Elem, std::int32_t> seen = {{seed, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Elem cur = elems[head];
    for (const Elem& gen : letter_gens) {
      Elem nxt = cur * gen;
      if (seen.emplace(nxt, 0).second) elems.push_back(nxt);
    }
  }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i)
    seen[elems[i]] = static_cast<std::int32_t>(i);

  CayleyGraph<Elem> out;
  out.elems = std::move(elems);
  out.digraph.id = std::move(graph_id);
  out.digraph.names.reserve(out.elems.size());
  out.digraph.next.reserve(out.elems.size());
  for (const Elem& e : out.elems) {
    out.digraph.names.push_back(name(e));
    std::array<std::int32_t, 3> row{};
    for (int l = 0; l < 3; ++l) row[l] = seen.at(e * letter_gens[l]);
    out.digraph.next.push_back(row);
  }
  return out;
}

// Cay(G, {L^, R^, V^}) on all 720 elements, id "cayley-g".
GroupGraph build_cayley_g();

// Cay(S5, {L, R, V}) on 120 elements, id "cayley-s5".
PermGraph build_cayley_s5();

// The state graph: breadth-first position enumeration from the home position
// via apply_move.  Vertices carry positions, indexed by their encoding so the
// arc set coincides with build_cayley_g()'s.
struct StateGraph {
  LabeledDigraph digraph;  // id "state"
  std::vector<Position> positions;
};

StateGraph build_state_graph();

// Undirected view: an R-arc and its reverse L-arc collapse to one edge, V-arcs
// pair up.  Loops (quotients only) are kept as single loop edges.
struct UndirectedEdge {
  std::int32_t u;
  std::int32_t v;
  MoveLetter label;  // R for horizontal edges, V for vertical ones
  auto operator<=>(const UndirectedEdge&) const = default;
};

std::vector<UndirectedEdge> undirected_edges(const LabeledDigraph& g);

nlohmann::ordered_json digraph_to_json(const LabeledDigraph& g);
std::string digraph_to_dot(const LabeledDigraph& g, bool letter_labels);

}  // namespace puz5
