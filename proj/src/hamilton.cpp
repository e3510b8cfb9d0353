#include "puz5/hamilton.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <limits>
#include <set>
#include <unordered_map>

namespace puz5 {

bool certifies_cycle(const LabeledDigraph& g, const HamCycleWord& c) {
  if (c.start < 0 || c.start >= g.size()) return false;
  return is_hamiltonian_cycle(g, trace(g, c.start, c.word));
}

std::optional<std::int32_t> find_cycle_anchor(const LabeledDigraph& g,
                                              const MoveWord& word) {
  for (std::int32_t v = 0; v < g.size(); ++v)
    if (is_hamiltonian_cycle(g, trace(g, v, word))) return v;
  return std::nullopt;
}

std::vector<std::int64_t> CycleCover::lengths() const {
  std::vector<std::int64_t> out;
  out.reserve(cycles.size());
  for (const auto& [start, word] : cycles)
    out.push_back(static_cast<std::int64_t>(word.size()));
  return out;
}

MoveWord apply_symmetry(const WordSymmetry& s, const MoveWord& w) {
  MoveWord base = w;
  if (s.reflected) {
    for (MoveLetter& l : base) {
      if (l == MoveLetter::L) l = MoveLetter::R;
      else if (l == MoveLetter::R) l = MoveLetter::L;
    }
  }
  if (s.reversed) std::reverse(base.begin(), base.end());
  const std::size_t n = base.size();
  MoveWord out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = base[(i + s.rotation) % n];
  return out;
}

std::vector<MoveWord> symmetry_orbit(const MoveWord& w) {
  std::set<MoveWord> orbit;
  for (int refl = 0; refl < 2; ++refl)
    for (int rev = 0; rev < 2; ++rev)
      for (int rot = 0; rot < static_cast<int>(w.size()); ++rot)
        orbit.insert(apply_symmetry({rot, rev != 0, refl != 0}, w));
  return {orbit.begin(), orbit.end()};
}

MoveWord canonicalize(const MoveWord& w) {
  if (w.empty()) throw std::invalid_argument("cannot canonicalize an empty word");
  MoveWord best = w;
  for (int refl = 0; refl < 2; ++refl)
    for (int rev = 0; rev < 2; ++rev)
      for (int rot = 0; rot < static_cast<int>(w.size()); ++rot) {
        MoveWord cand = apply_symmetry({rot, rev != 0, refl != 0}, w);
        if (cand < best) best = cand;
      }
  return best;
}

namespace {

// Plain exhaustive backtracking.  At this scale (quotients of a 720-vertex
// graph) no pruning is needed; keeping the search bare guarantees the
// enumerated set is exactly the set of anchored directed Hamiltonian cycles.
struct CycleSearch {
  const LabeledDigraph& g;
  std::int64_t remaining;
  std::vector<MoveWord> found;
  std::vector<char> visited;
  MoveWord word;

  CycleSearch(const LabeledDigraph& graph, std::int64_t cap)
      : g(graph), remaining(cap), visited(graph.size(), 0) {}

  // Returns false once the cap is exhausted.
  bool dfs(std::int32_t v, std::int32_t depth) {
    if (depth == g.size()) {
      for (MoveLetter l : kAllLetters) {
        if (g.step(v, l) == 0) {
          word.push_back(l);
          found.push_back(word);
          word.pop_back();
          if (--remaining == 0) return false;
        }
      }
      return true;
    }
    for (MoveLetter l : kAllLetters) {
      std::int32_t u = g.step(v, l);
      if (u == v || visited[u]) continue;  // loops can never extend a cycle
      visited[u] = 1;
      word.push_back(l);
      bool go_on = dfs(u, depth + 1);
      word.pop_back();
      visited[u] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

std::vector<MoveWord> search_branch(const LabeledDigraph& g, MoveLetter first,
                                    std::int64_t cap) {
  CycleSearch s(g, cap);
  std::int32_t u = g.step(0, first);
  if (u == 0) return {};
  s.visited[0] = 1;
  s.visited[u] = 1;
  s.word.push_back(first);
  s.dfs(u, 2);
  return std::move(s.found);
}

}  // namespace

std::vector<HamCycleWord> find_ham_cycles(const LabeledDigraph& g,
                                          std::optional<std::int64_t> limit,
                                          int threads) {
  if (g.size() < 2)
    throw std::invalid_argument("Hamiltonian search needs at least 2 vertices");
  const std::int64_t cap =
      limit.value_or(std::numeric_limits<std::int64_t>::max());
  if (cap <= 0) return {};

  std::vector<MoveWord> words;
  if (threads > 1) {
    // Fan out over the first-letter branches; concatenating the branch
    // results in letter order reproduces the sequential enumeration.
    std::vector<std::future<std::vector<MoveWord>>> futs;
    for (MoveLetter l : kAllLetters)
      futs.push_back(std::async(std::launch::async, search_branch, std::cref(g),
                                l, cap));
    for (auto& f : futs) {
      std::vector<MoveWord> part = f.get();
      words.insert(words.end(), part.begin(), part.end());
    }
    if (static_cast<std::int64_t>(words.size()) > cap) words.resize(cap);
  } else {
    std::int64_t left = cap;
    for (MoveLetter l : kAllLetters) {
      if (left == 0) break;
      std::vector<MoveWord> part = search_branch(g, l, left);
      left -= static_cast<std::int64_t>(part.size());
      words.insert(words.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
  }

  std::vector<HamCycleWord> out;
  out.reserve(words.size());
  for (MoveWord& w : words) out.push_back({g.id, 0, std::move(w)});
  return out;
}

std::vector<MoveWord> canonical_classes(const std::vector<HamCycleWord>& raw) {
  std::set<MoveWord> classes;
  for (const HamCycleWord& c : raw) classes.insert(canonicalize(c.word));
  return {classes.begin(), classes.end()};
}

CycleCover lift_cycle(const QuotientGraph& q, const GroupGraph& base,
                      const HamCycleWord& cycle) {
  if (!certifies_cycle(q.digraph, cycle))
    throw InvalidCertificate("word " + word_to_string(cycle.word) +
                             " does not trace a Hamiltonian cycle of " +
                             q.digraph.id + " from vertex " +
                             std::to_string(cycle.start));

  std::vector<char> visited(base.digraph.size(), 0);
  CycleCover cover{base.digraph.id, {}};
  // Every lifted cycle meets the anchor coset's fiber, so starting from its
  // unvisited members (ascending; the identity leads when present) reaches
  // the whole partition.
  for (std::int32_t v : q.fibers[cycle.start]) {
    if (visited[v]) continue;
    MoveWord closed;
    std::int32_t cur = v;
    do {
      for (MoveLetter l : cycle.word) {
        if (visited[cur])
          throw InvalidCertificate("lift revisits " + base.digraph.names[cur]);
        visited[cur] = 1;
        closed.push_back(l);
        cur = base.digraph.step(cur, l);
      }
    } while (cur != v);
    cover.cycles.emplace_back(v, std::move(closed));
  }
  std::int64_t total = 0;
  for (const auto& [start, word] : cover.cycles)
    total += static_cast<std::int64_t>(word.size());
  if (total != base.digraph.size())
    throw InvalidCertificate("lift does not cover the base graph");
  return cover;
}

namespace {

void verify_cover(const CycleCover& cover, const LabeledDigraph& X) {
  std::vector<char> seen(X.size(), 0);
  std::int64_t total = 0;
  for (const auto& [start, word] : cover.cycles) {
    WalkTrace t = trace(X, start, word);
    if (!t.closed() || !t.simple())
      throw InvalidCertificate("cover cycle from " + X.names[start] +
                               " is not a simple closed cycle");
    for (std::size_t i = 0; i + 1 < t.visited.size(); ++i) {
      if (seen[t.visited[i]])
        throw InvalidCertificate("cover cycles are not vertex-disjoint");
      seen[t.visited[i]] = 1;
    }
    total += static_cast<std::int64_t>(word.size());
  }
  if (total != X.size())
    throw InvalidCertificate("cover does not partition the vertex set");
}

MoveLetter swapped_letter(MoveLetter l) {
  return l == MoveLetter::R ? MoveLetter::L : MoveLetter::R;
}

}  // namespace

WalkTrace splice_to_path(const CycleCover& cover, const LabeledDigraph& X) {
  verify_cover(cover, X);
  if (cover.cycles.size() == 1) {
    // Already a Hamiltonian cycle of X.
    const auto& [start, word] = cover.cycles.front();
    return trace(X, start, word);
  }
  if (cover.cycles.size() != 2)
    throw std::invalid_argument(
        "splicing is implemented for 2-cycle covers only");

  std::array<WalkTrace, 2> tr = {
      trace(X, cover.cycles[0].first, cover.cycles[0].second),
      trace(X, cover.cycles[1].first, cover.cycles[1].second)};

  for (int brk = 0; brk < 2; ++brk) {
    const WalkTrace& a = tr[brk];
    const WalkTrace& b = tr[1 - brk];
    const std::size_t la = a.word.size(), lb = b.word.size();
    std::unordered_map<std::int32_t, std::size_t> pos_in_b;
    for (std::size_t j = 0; j < lb; ++j) pos_in_b[b.visited[j]] = j;

    // Substitution positions from the last letter backward.
    for (std::size_t back = 0; back < la; ++back) {
      const std::size_t p = la - 1 - back;
      if (a.word[p] == MoveLetter::V) continue;  // V has no substitute
      const MoveLetter sub = swapped_letter(a.word[p]);
      const std::int32_t land = X.step(a.visited[p], sub);
      auto it = pos_in_b.find(land);
      if (it == pos_in_b.end()) continue;

      // Walk cycle `a` from just past the substituted arc, jump, then walk
      // all of cycle `b` from the landing vertex.
      MoveWord path;
      path.reserve(la + lb - 1);
      for (std::size_t k = 1; k < la; ++k)
        path.push_back(a.word[(p + k) % la]);
      path.push_back(sub);
      for (std::size_t k = 0; k + 1 < lb; ++k)
        path.push_back(b.word[(it->second + k) % lb]);

      WalkTrace out = trace(X, a.visited[(p + 1) % la], path);
      if (!is_hamiltonian_path(X, out))
        throw InvalidCertificate("spliced walk failed verification");
      return out;
    }
  }
  throw SpliceNotFound("no single-letter substitution joins the two cycles");
}

namespace {

const MoveWord& twelve_move_seed() {
  static const MoveWord s = word_from_string("VLVRVLVRVRVL");
  return s;
}

MoveWord perturbed_seed() {
  MoveWord sp = twelve_move_seed();
  sp.back() = MoveLetter::R;
  return sp;
}

MoveWord rotate_left(const MoveWord& w) {
  MoveWord out(w.begin() + 1, w.end());
  out.push_back(w.front());
  return out;
}

}  // namespace

MoveWord lemma1_seed_word() {
  MoveWord w = twelve_move_seed();
  MoveWord sp = perturbed_seed();
  w.insert(w.end(), sp.begin(), sp.end());
  return w;
}

MoveWord theorem1_path_word() {
  const MoveWord s = twelve_move_seed();
  const MoveWord sp = perturbed_seed();
  const MoveWord t = rotate_left(s);
  const MoveWord tp = rotate_left(sp);

  MoveWord word = repeat_word(lemma1_seed_word(), 14);
  word.insert(word.end(), s.begin(), s.end());
  word.insert(word.end(), s.begin(), s.end());
  MoveWord ttp = t;
  ttp.insert(ttp.end(), tp.begin(), tp.end());
  MoveWord tail = repeat_word(ttp, 15);
  word.insert(word.end(), tail.begin(), tail.end());
  word.pop_back();
  return word;
}

MoveWord theorem2_cycle_word() {
  return word_from_string(
      "RVLVRVLVRRRVLVRVRVLVLVRVLVLLVRVRVLLLVLVRRRVRVRVR");
}

}  // namespace puz5
