#include "puz5/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <set>
#include <stdexcept>

namespace puz5 {

bool Subgroup::contains(const GroupElem& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(const std::vector<Perm>& perm_generators,
                       bool include_z2, bool include_z3,
                       std::string description) {
  std::set<Perm> perms = {Perm::identity()};
  std::vector<Perm> frontier = {Perm::identity()};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier) {
      for (const Perm& g : perm_generators) {
        Perm b = a * g;
        if (perms.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }

  Subgroup k;
  k.description = std::move(description);
  for (const Perm& p : perms)
    for (std::uint8_t x = 0; x < (include_z2 ? 2 : 1); ++x)
      for (std::uint8_t y = 0; y < (include_z3 ? 3 : 1); ++y)
        k.elements.push_back({p, x, y});
  std::sort(k.elements.begin(), k.elements.end());

  // A subgroup generated this way is closed by construction; the inverse of
  // each element must land back inside.
  for (const GroupElem& e : k.elements)
    if (!k.contains(e.inverse()))
      throw std::logic_error("subgroup closure is missing an inverse");
  return k;
}

Subgroup subgroup_k0() {
  return make_subgroup({parse_cycles("(1,2,3,4,5)")}, true, true,
                       "<(1,2,3,4,5)> x Z/2 x Z/3");
}

Subgroup subgroup_k1() {
  return make_subgroup({parse_cycles("(1,2,3,4,5)")}, false, true,
                       "<(1,2,3,4,5)> x {0} x Z/3");
}

QuotientGraph build_quotient(const GroupGraph& base, const Subgroup& K,
                             std::string graph_id) {
  const std::int32_t n = base.digraph.size();
  QuotientGraph q;
  q.coset_of.assign(n, -1);

  // Scanning vertices in index (= sorted payload) order makes each coset's
  // first unassigned vertex its minimal member, which becomes the
  // representative.
  for (std::int32_t v = 0; v < n; ++v) {
    if (q.coset_of[v] >= 0) continue;
    std::int32_t c = static_cast<std::int32_t>(q.representative.size());
    q.representative.push_back(v);
    q.fibers.emplace_back();
    for (const GroupElem& k : K.elements) {
      std::int32_t u = base.index_of(k * base.elems[v]);
      if (q.coset_of[u] != -1 && q.coset_of[u] != c)
        throw std::logic_error("left cosets failed to partition the group");
      q.coset_of[u] = c;
    }
  }
  for (std::int32_t v = 0; v < n; ++v) q.fibers[q.coset_of[v]].push_back(v);
  // left multiplication acts freely, so every fiber has the subgroup's size
  for (const auto& f : q.fibers)
    if (f.size() != K.elements.size())
      throw std::logic_error("fiber size differs from the subgroup order");

  q.digraph.id = std::move(graph_id);
  for (std::size_t c = 0; c < q.representative.size(); ++c) {
    std::int32_t rep = q.representative[c];
    q.digraph.names.push_back(base.digraph.names[rep]);
    std::array<std::int32_t, 3> row{};
    for (int l = 0; l < 3; ++l) row[l] = q.coset_of[base.digraph.next[rep][l]];
    q.digraph.next.push_back(row);
  }
  return q;
}

std::int32_t project(const QuotientGraph& q, std::int32_t base_vertex) {
  if (base_vertex < 0 ||
      base_vertex >= static_cast<std::int32_t>(q.coset_of.size()))
    throw std::out_of_range("base vertex out of range");
  return q.coset_of[base_vertex];
}

}  // namespace puz5
