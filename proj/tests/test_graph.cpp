#include <doctest.h>

#include <random>

#include "puz5/graph.hpp"
#include "puz5/hamilton.hpp"

using namespace puz5;

TEST_CASE("Cayley graph of G") {
  GroupGraph x = build_cayley_g();
  CHECK(x.digraph.size() == 720);
  CHECK(x.digraph.names[0] == "(12345,0,0)");
  CHECK(x.elems[0] == GroupElem::identity());

  // out-degree is 3 by construction; count in-degrees
  std::vector<int> indeg(720, 0);
  for (std::int32_t v = 0; v < 720; ++v)
    for (MoveLetter l : kAllLetters) ++indeg[x.digraph.step(v, l)];
  for (int d : indeg) CHECK(d == 3);

  // R then L, L then R, V then V all return
  for (std::int32_t v = 0; v < 720; ++v) {
    CHECK(x.digraph.step(x.digraph.step(v, MoveLetter::R), MoveLetter::L) == v);
    CHECK(x.digraph.step(x.digraph.step(v, MoveLetter::L), MoveLetter::R) == v);
    CHECK(x.digraph.step(x.digraph.step(v, MoveLetter::V), MoveLetter::V) == v);
  }
}

TEST_CASE("Cayley graph of S5") {
  PermGraph s5 = build_cayley_s5();
  CHECK(s5.digraph.size() == 120);
  WalkTrace t = trace(s5.digraph, s5.index_of(Perm::identity()),
                      lemma1_seed_word());
  CHECK(s5.elems[t.visited.back()].one_line() == "53412");
}

TEST_CASE("traces") {
  GroupGraph x = build_cayley_g();
  std::int32_t id0 = x.index_of(GroupElem::identity());

  WalkTrace empty = trace(x.digraph, id0, {});
  CHECK(empty.visited == std::vector<std::int32_t>{id0});
  CHECK(empty.closed());
  CHECK(empty.simple());

  // the seed word's product has order 15, so 15 repetitions return to id
  WalkTrace t = trace(x.digraph, id0, repeat_word(lemma1_seed_word(), 15));
  CHECK(t.visited.back() == id0);
  CHECK(t.closed());
}

TEST_CASE("trace end equals start times the word product") {
  GroupGraph x = build_cayley_g();
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> vert(0, 719);
  std::uniform_int_distribution<int> len(0, 50);
  std::uniform_int_distribution<int> letter(0, 2);
  for (int it = 0; it < 200; ++it) {
    MoveWord w(len(rng));
    for (MoveLetter& l : w) l = static_cast<MoveLetter>(letter(rng));
    std::int32_t v = vert(rng);
    WalkTrace t = trace(x.digraph, v, w);
    CHECK(x.elems[t.visited.back()] == x.elems[v] * product_in_g(w));
  }
}

TEST_CASE("state graph agrees with the Cayley graph") {
  StateGraph s = build_state_graph();
  GroupGraph x = build_cayley_g();
  CHECK(s.digraph.size() == 720);

  // positions are indexed by their encoding, so arcs must coincide
  REQUIRE(s.positions.size() == 720);
  for (std::int32_t v = 0; v < 720; ++v)
    CHECK(encode(s.positions[v]) == x.elems[v]);
  CHECK(s.digraph.next == x.digraph.next);

  // strong connectivity: forward BFS reaches everything, and so does
  // following the inverse moves
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(720, 0);
    std::vector<std::int32_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::int32_t v = stack.back();
      stack.pop_back();
      for (MoveLetter l : kAllLetters) {
        std::int32_t u = s.digraph.step(v, l);
        if (dir == 1) {
          // inverse arc: the reverse of letter l out of v
          MoveLetter inv = l == MoveLetter::R   ? MoveLetter::L
                           : l == MoveLetter::L ? MoveLetter::R
                                                : MoveLetter::V;
          u = s.digraph.step(v, inv);
        }
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    for (char c : seen) CHECK(c == 1);
  }
}

TEST_CASE("undirected view is 3-regular with 1080 edges") {
  GroupGraph x = build_cayley_g();
  auto edges = undirected_edges(x.digraph);
  CHECK(edges.size() == 1080);
  std::vector<int> deg(720, 0);
  for (const UndirectedEdge& e : edges) {
    CHECK(e.u != e.v);  // the state graph is simple
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int d : deg) CHECK(d == 3);
}

TEST_CASE("state export sizes") {
  StateGraph s = build_state_graph();
  nlohmann::ordered_json j = digraph_to_json(s.digraph);
  CHECK(j["vertices"].size() == 720);
  CHECK(j["arcs"].size() == 2160);
  CHECK(j["vertices"][0] == "012/345");
}

TEST_CASE("json and dot exports") {
  PermGraph s5 = build_cayley_s5();
  nlohmann::ordered_json j = digraph_to_json(s5.digraph);
  CHECK(j["vertices"].size() == 120);
  CHECK(j["arcs"].size() == 360);
  CHECK(j["arcs"][0].size() == 3);

  std::string dot = digraph_to_dot(s5.digraph, true);
  CHECK(dot.substr(0, 5) == "graph");
  CHECK(dot.find("label=\"V\"") != std::string::npos);

  // byte-identical across rebuilds
  PermGraph again = build_cayley_s5();
  CHECK(digraph_to_json(again.digraph).dump() == j.dump());
}
