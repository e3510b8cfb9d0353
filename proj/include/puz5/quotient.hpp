#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "puz5/graph.hpp"
#include "puz5/group.hpp"

namespace puz5 {

// Explicit finite subgroup of G, closed under product and inverse.
struct Subgroup {
  std::string description;
  std::vector<GroupElem> elements;  // sorted

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(const GroupElem& g) const;
};

// Closure of the given S5 generators, optionally crossed with the full Z/2
// and/or Z/3 factors.
Subgroup make_subgroup(const std::vector<Perm>& perm_generators,
                       bool include_z2, bool include_z3,
                       std::string description = {});

// K0 = <(1,2,3,4,5)> x Z/2 x Z/3 (order 30); K1 drops the Z/2 factor.
Subgroup subgroup_k0();
Subgroup subgroup_k1();

// Quotient K\X of a Cayley graph by left multiplication.  Vertices are left
// cosets, indexed by their minimal member; letters act by right
// multiplication, which descends to cosets.  Loops and parallel arcs are
// preserved.
struct QuotientGraph {
  LabeledDigraph digraph;                    // names = representative encodings
  std::vector<std::int32_t> coset_of;        // base vertex -> coset index
  std::vector<std::int32_t> representative;  // coset index -> base vertex
  std::vector<std::vector<std::int32_t>> fibers;

  std::int32_t fiber_size() const {
    return fibers.empty() ? 0 : static_cast<std::int32_t>(fibers[0].size());
  }
};

QuotientGraph build_quotient(const GroupGraph& base, const Subgroup& K,
                             std::string graph_id);

// The covering projection: the coset containing a base vertex.  Commutes with
// the letter actions.
std::int32_t project(const QuotientGraph& q, std::int32_t base_vertex);

}  // namespace puz5
