#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "puz5/graph.hpp"
#include "puz5/quotient.hpp"

namespace puz5 {

struct InvalidCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpliceNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A directed Hamiltonian cycle certificate: tracing `word` from `start`
// visits every vertex exactly once and returns to `start`.
struct HamCycleWord {
  std::string graph_id;
  std::int32_t start = 0;
  MoveWord word;
};

bool certifies_cycle(const LabeledDigraph& g, const HamCycleWord& c);

// First vertex (ascending) from which the word traces a Hamiltonian cycle.
std::optional<std::int32_t> find_cycle_anchor(const LabeledDigraph& g,
                                              const MoveWord& word);

// Vertex-disjoint directed cycles partitioning a graph's vertex set.
struct CycleCover {
  std::string graph_id;
  std::vector<std::pair<std::int32_t, MoveWord>> cycles;  // (start, closed word)

  std::vector<std::int64_t> lengths() const;
};

// Symmetry of cyclic words: index rotation, sequence reversal, and the
// letter swap L <-> R.
struct WordSymmetry {
  int rotation = 0;
  bool reversed = false;
  bool reflected = false;
};

MoveWord apply_symmetry(const WordSymmetry& s, const MoveWord& w);
std::vector<MoveWord> symmetry_orbit(const MoveWord& w);  // deduplicated

// Lexicographically least orbit member under L < R < V.
MoveWord canonicalize(const MoveWord& w);

// Exhaustive backtracking enumeration of directed Hamiltonian cycles,
// anchored at vertex 0, letters tried in order L, R, V.  Loops are skipped.
// `limit` caps the number of cycles returned.  `threads` > 1 fans the search
// out over the first-letter branches; the result list is identical to the
// single-threaded one.
std::vector<HamCycleWord> find_ham_cycles(
    const LabeledDigraph& g, std::optional<std::int64_t> limit = std::nullopt,
    int threads = 1);

// Sorted deduplicated canonical forms.
std::vector<MoveWord> canonical_classes(const std::vector<HamCycleWord>& raw);

// Lifts a quotient Hamiltonian cycle through the covering projection: from
// each unvisited vertex of the anchor coset's fiber (ascending, so the
// identity leads when the anchor is its coset), the word is repeated until
// first return.  Cycle count x cycle length = base size.  Throws
// InvalidCertificate if the cycle does not verify on the quotient.
CycleCover lift_cycle(const QuotientGraph& q, const GroupGraph& base,
                      const HamCycleWord& cycle);

// Splices a verified 2-cycle cover into a Hamiltonian path by substituting a
// single letter (R <-> L; V positions admit no substitute).  Substitution
// positions are scanned from each cycle's last letter backward; the first
// jump landing in the other cycle wins.  A 1-cycle cover is returned as its
// own (already Hamiltonian) closed trace.
WalkTrace splice_to_path(const CycleCover& cover, const LabeledDigraph& X);

// The explicit 719-letter Hamiltonian path word (ss')^14 ss (tt')^15 minus
// its last letter.
MoveWord theorem1_path_word();

// The 48-letter word whose 15-fold repetition traces the Hamiltonian cycle.
MoveWord theorem2_cycle_word();

// The 24-letter seed word ss' whose running products give the certified
// 24-row table, and its building blocks.
MoveWord lemma1_seed_word();

}  // namespace puz5
