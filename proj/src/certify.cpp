#include "puz5/certify.hpp"

#include <openssl/evp.h>

#include <array>
#include <iomanip>
#include <set>
#include <sstream>

#include "puz5/graph.hpp"
#include "puz5/hamilton.hpp"
#include "puz5/quotient.hpp"

namespace puz5 {

namespace {

// Reference 24-row table: letter, running product, orbit representative.
struct TableRow {
  char letter;
  const char* g;
  const char* rho;
};

constexpr std::array<TableRow, 24> kTable24 = {{
    {'V', "45312", "12453"}, {'L', "54231", "13524"}, {'V', "31254", "12435"},
    {'R', "13542", "13542"}, {'V', "42513", "13254"}, {'L', "24351", "12543"},
    {'V', "51324", "14253"}, {'R', "15243", "15243"}, {'V', "43215", "14352"},
    {'R', "34152", "15234"}, {'V', "52134", "15423"}, {'L', "25413", "14235"},
    {'V', "13425", "13425"}, {'L', "31542", "12354"}, {'V', "42531", "13245"},
    {'R', "24315", "12534"}, {'V', "15324", "15324"}, {'L', "51432", "14325"},
    {'V', "32451", "14532"}, {'R', "23514", "15432"}, {'V', "14523", "14523"},
    {'R', "41235", "15342"}, {'V', "35241", "13452"}, {'R', "53412", "12345"},
}};

// The four reference quotient cycles and the cycle count of each one's lift.
struct QuotientRow {
  const char* word;
  int cover_cycles;
};

constexpr std::array<QuotientRow, 4> kQuotientRows = {{
    {"VRVLVRVLVLVRVRVLVRVLVLVL", 2},
    {"VLVLVLVRVLVLVRVRVRVLVRVR", 6},
    {"LLLLLVLVRRRVLLLVRVRRRRRV", 6},
    {"LLLLLVRRRRRVLVRRRVLLLVRV", 6},
}};

constexpr const char* kCycleVisitDigest =
    "f3838cdff6ce9d0ac9274453312d9452e44ad353aabe5e15794ed9768aae66d6";

class CheckList {
 public:
  void add(const std::string& name, bool ok, const nlohmann::ordered_json& got) {
    checks_.push_back({{"name", name}, {"pass", ok}, {"got", got}});
    all_ &= ok;
  }
  void expect(const std::string& name, const nlohmann::ordered_json& got,
              const nlohmann::ordered_json& expected) {
    bool ok = got == expected;
    checks_.push_back(
        {{"name", name}, {"pass", ok}, {"got", got}, {"expected", expected}});
    all_ &= ok;
  }

  bool all() const { return all_; }
  nlohmann::ordered_json take() { return std::move(checks_); }

 private:
  nlohmann::ordered_json checks_ = nlohmann::ordered_json::array();
  bool all_ = true;
};

// Running products of the seed word and their representatives: rho_i is the
// unique member of <g_24> g_i fixing 1.
struct Table24Computed {
  std::vector<char> letters;
  std::vector<Perm> g;
  std::vector<Perm> rho;
};

Table24Computed compute_table24() {
  Table24Computed t;
  const MoveWord seed = lemma1_seed_word();
  Perm run;
  for (MoveLetter l : seed) {
    run = run * letter_perm(l);
    t.letters.push_back(to_char(l));
    t.g.push_back(run);
  }
  const Perm g24 = t.g.back();
  std::array<Perm, 5> powers;
  powers[0] = Perm::identity();
  for (int k = 1; k < 5; ++k) powers[k] = powers[k - 1] * g24;
  for (const Perm& gi : t.g) {
    for (const Perm& pk : powers) {
      Perm cand = pk * gi;
      if (cand(1) == 1) {
        t.rho.push_back(cand);
        break;
      }
    }
  }
  return t;
}

void add_table24_checks(CheckList& cl, nlohmann::ordered_json& details) {
  Table24Computed t = compute_table24();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool rows_ok = true;
  int first_bad = 0;
  for (int i = 0; i < 24; ++i) {
    rows.push_back({{"i", i + 1},
                    {"w", std::string(1, t.letters[i])},
                    {"g", t.g[i].one_line()},
                    {"rho", t.rho[i].one_line()}});
    bool ok = t.letters[i] == kTable24[i].letter &&
              t.g[i].one_line() == kTable24[i].g &&
              t.rho[i].one_line() == kTable24[i].rho;
    if (!ok && rows_ok) {
      rows_ok = false;
      first_bad = i + 1;
    }
  }
  details["rows"] = rows;
  cl.add("all 24 rows match the reference table", rows_ok,
         rows_ok ? nlohmann::ordered_json("rows 1..24")
                 : nlohmann::ordered_json("first mismatch at i=" +
                                          std::to_string(first_bad)));

  std::set<std::string> gs = {"12345"};
  for (const Perm& p : t.g) gs.insert(p.one_line());
  cl.expect("products id,g_1..g_24 pairwise distinct", gs.size() == 25, true);

  std::set<std::string> rhos;
  for (const Perm& p : t.rho) rhos.insert(p.one_line());
  cl.expect("representatives rho_1..rho_24 pairwise distinct",
            rhos.size() == 24, true);

  cl.expect("g_24", t.g.back().one_line(), "53412");
  cl.expect("order of g_24", t.g.back().order(), 5);
}

void emit(CertReport& r, const std::string& claim, CheckList& cl,
          nlohmann::ordered_json details) {
  r.claim = claim;
  r.details = std::move(details);
  r.details["checks"] = cl.take();
  r.pass = cl.all();
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

CertReport certify_table1() {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;
  details["word"] = word_to_string(lemma1_seed_word());
  add_table24_checks(cl, details);
  emit(r, "table1", cl, std::move(details));
  return r;
}

CertReport certify_lemma1() {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;
  details["word"] = word_to_string(lemma1_seed_word());
  add_table24_checks(cl, details);

  PermGraph s5 = build_cayley_s5();
  const MoveWord w = repeat_word(lemma1_seed_word(), 5);
  WalkTrace t = trace(s5.digraph, s5.index_of(Perm::identity()), w);
  cl.expect("five-fold repetition closes at the identity",
            s5.elems[t.visited.back()].one_line(), "12345");
  cl.expect("five-fold repetition visits 120 distinct vertices",
            t.distinct_count(), 120);
  cl.add("five-fold repetition is a Hamiltonian cycle of Cay(S5)",
         is_hamiltonian_cycle(s5.digraph, t), is_hamiltonian_cycle(s5.digraph, t));
  details["cycle_length"] = w.size();

  emit(r, "lemma1", cl, std::move(details));
  return r;
}

CertReport certify_theorem1() {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;

  const MoveWord seed = lemma1_seed_word();
  int nl = 0, nr = 0, nv = 0;
  for (MoveLetter l : seed) {
    nl += l == MoveLetter::L;
    nr += l == MoveLetter::R;
    nv += l == MoveLetter::V;
  }
  details["seed_word"] = word_to_string(seed);
  cl.expect("seed letter counts (L,R,V)",
            nlohmann::ordered_json::array({nl, nr, nv}),
            nlohmann::ordered_json::array({5, 7, 12}));

  const GroupElem ps = product_in_g(seed);
  cl.expect("Z/3 part of the seed product", int(ps.y), 2);
  cl.expect("Z/2 part of the seed product", int(ps.x), 0);
  cl.expect("Z/3 part agrees with (R + 2L) mod 3", int(ps.y), (nr + 2 * nl) % 3);
  const GroupElem pw = product_in_g(repeat_word(seed, 5));
  cl.expect("product of the 120-move word", pw.str(), "(12345,0,1)");

  GroupGraph X = build_cayley_g();
  const MoveWord d = repeat_word(seed, 15);
  const std::int32_t a0 = X.index_of(GroupElem::identity());
  const std::int32_t a1 = X.index_of({Perm::identity(), 1, 0});
  CycleCover cover{X.digraph.id, {{a0, d}, {a1, d}}};

  WalkTrace path;
  bool cover_ok = true;
  std::string cover_err;
  try {
    path = splice_to_path(cover, X.digraph);
  } catch (const std::exception& e) {
    cover_ok = false;
    cover_err = e.what();
  }
  cl.add("w^3 from (12345,0,0) and (12345,1,0) is a verified 2-cycle cover",
         cover_ok, cover_ok ? nlohmann::ordered_json("disjoint simple cycles")
                            : nlohmann::ordered_json(cover_err));
  details["cover_lengths"] = cover.lengths();
  cl.expect("cover cycle lengths", cover.lengths(),
            std::vector<std::int64_t>{360, 360});

  if (cover_ok) {
    cl.expect("splice substitutes the last letter (R -> L)",
              std::string(1, to_char(path.word[359])), "L");
    cl.expect("splice lands at", X.digraph.names[path.visited[360]],
              "(12453,0,1)");
    cl.expect("spliced path length", path.word.size(), 719);
    cl.expect("spliced path equals the explicit 719-letter word",
              word_to_string(path.word), word_to_string(theorem1_path_word()));
    details["path_start"] = X.digraph.names[path.visited.front()];
    details["path_end"] = X.digraph.names[path.visited.back()];
    cl.expect("path end", X.digraph.names[path.visited.back()], "(53412,1,1)");
  }

  WalkTrace direct = trace(X.digraph, a0, theorem1_path_word());
  cl.expect("explicit word visits 720 distinct vertices",
            direct.distinct_count(), 720);
  cl.add("explicit word traces a Hamiltonian path",
         is_hamiltonian_path(X.digraph, direct),
         is_hamiltonian_path(X.digraph, direct));

  emit(r, "theorem1", cl, std::move(details));
  return r;
}

CertReport certify_theorem2() {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;

  const MoveWord c = theorem2_cycle_word();
  details["word"] = word_to_string(c);
  cl.expect("word length", c.size(), 48);
  int nl = 0, nr = 0, nv = 0;
  for (MoveLetter l : c) {
    nl += l == MoveLetter::L;
    nr += l == MoveLetter::R;
    nv += l == MoveLetter::V;
  }
  cl.expect("letter counts (L,R,V)", nlohmann::ordered_json::array({nl, nr, nv}),
            nlohmann::ordered_json::array({12, 16, 20}));
  cl.expect("group product of the word", product_in_g(c).str(), "(35214,0,1)");

  GroupGraph X = build_cayley_g();
  const std::int32_t id0 = X.index_of(GroupElem::identity());
  WalkTrace single = trace(X.digraph, id0, c);
  cl.expect("one repetition: 49 distinct vertices", single.distinct_count(), 49);
  cl.add("one repetition is a simple open path",
         single.simple() && !single.closed(),
         single.simple() && !single.closed());

  WalkTrace full = trace(X.digraph, id0, repeat_word(c, 15));
  cl.expect("15 repetitions: distinct vertices", full.distinct_count(), 720);
  cl.add("15 repetitions close at the start", full.closed(), full.closed());
  cl.add("15 repetitions trace a Hamiltonian cycle",
         is_hamiltonian_cycle(X.digraph, full),
         is_hamiltonian_cycle(X.digraph, full));

  std::string lines;
  for (std::int32_t v : full.visited) {
    lines += X.digraph.names[v];
    lines += '\n';
  }
  const std::string digest = sha256_hex(lines);
  details["visit_digest_sha256"] = digest;
  cl.expect("visit sequence digest", digest, kCycleVisitDigest);

  // No repetition of the word is a Hamiltonian cycle of Cay(S5).
  PermGraph s5 = build_cayley_s5();
  const int ord = [&] {
    Perm p = product_in_s5(c);
    return p.order();
  }();
  details["s5_product_order"] = ord;
  bool none = true;
  for (int k = 1; k <= ord; ++k) {
    WalkTrace t = trace(s5.digraph, s5.index_of(Perm::identity()),
                        repeat_word(c, k));
    if (is_hamiltonian_cycle(s5.digraph, t)) none = false;
  }
  cl.expect("no repetition c^k (k <= order) is a Hamiltonian cycle of Cay(S5)",
            none, true);

  emit(r, "theorem2", cl, std::move(details));
  return r;
}

CertReport certify_table2(int threads) {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;

  GroupGraph X = build_cayley_g();
  QuotientGraph q = build_quotient(X, subgroup_k0(), "quotient-k0");
  cl.expect("quotient vertex count", q.digraph.size(), 24);

  std::vector<HamCycleWord> raw = find_ham_cycles(q.digraph, std::nullopt, threads);
  details["raw_cycles"] = raw.size();
  std::vector<MoveWord> classes = canonical_classes(raw);
  cl.expect("canonical class count", classes.size(), 4);

  std::set<std::string> found;
  for (const MoveWord& w : classes) found.insert(word_to_string(w));
  std::set<std::string> expected;
  for (const QuotientRow& row : kQuotientRows)
    expected.insert(word_to_string(canonicalize(word_from_string(row.word))));
  cl.expect("classes equal the canonical forms of the four reference words",
            nlohmann::ordered_json(found), nlohmann::ordered_json(expected));

  PermGraph s5 = build_cayley_s5();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < kQuotientRows.size(); ++i) {
    const MoveWord w = word_from_string(kQuotientRows[i].word);
    nlohmann::ordered_json row;
    row["word"] = kQuotientRows[i].word;
    row["canonical"] = word_to_string(canonicalize(w));

    std::optional<std::int32_t> anchor = find_cycle_anchor(q.digraph, w);
    cl.add("row " + std::to_string(i + 1) + " certifies a quotient cycle",
           anchor.has_value(),
           anchor ? nlohmann::ordered_json(*anchor)
                  : nlohmann::ordered_json("no anchor"));
    if (anchor) {
      row["anchor"] = *anchor;
      CycleCover cover = lift_cycle(q, X, {q.digraph.id, *anchor, w});
      row["cover_cycles"] = cover.cycles.size();
      row["cycle_lengths"] = cover.lengths();
      cl.expect("row " + std::to_string(i + 1) + " lift cycle count",
                cover.cycles.size(), kQuotientRows[i].cover_cycles);
      // Dual route: the lift size must match the word product's order.
      const int ord = product_in_g(w).order();
      cl.expect("row " + std::to_string(i + 1) +
                    " cycle count matches 30 / ord(product)",
                static_cast<int>(cover.cycles.size()), 30 / ord);
    }

    WalkTrace five = trace(s5.digraph, s5.index_of(Perm::identity()),
                           repeat_word(w, 5));
    cl.add("row " + std::to_string(i + 1) +
               " five-fold repetition is Hamiltonian in Cay(S5)",
           is_hamiltonian_cycle(s5.digraph, five),
           is_hamiltonian_cycle(s5.digraph, five));
    rows.push_back(std::move(row));
  }
  details["rows"] = std::move(rows);

  emit(r, "table2", cl, std::move(details));
  return r;
}

CertReport certify_quotient_counts() {
  CertReport r;
  CheckList cl;
  nlohmann::ordered_json details;

  GroupGraph X = build_cayley_g();
  Subgroup k0 = subgroup_k0();
  Subgroup k1 = subgroup_k1();
  cl.expect("|K0|", k0.size(), 30);
  cl.expect("|K1|", k1.size(), 15);

  QuotientGraph q0 = build_quotient(X, k0, "quotient-k0");
  QuotientGraph q1 = build_quotient(X, k1, "quotient-k1");
  cl.expect("K0 quotient vertices", q0.digraph.size(), 24);
  cl.expect("K1 quotient vertices", q1.digraph.size(), 48);
  cl.expect("K0 fiber size", q0.fiber_size(), 30);
  cl.expect("K1 fiber size", q1.fiber_size(), 15);
  bool fibers_equal = true;
  for (const auto& f : q0.fibers) fibers_equal &= f.size() == 30;
  for (const auto& f : q1.fibers) fibers_equal &= f.size() == 15;
  cl.expect("all fibers have the subgroup's size", fibers_equal, true);

  emit(r, "quotient-counts", cl, std::move(details));
  return r;
}

std::vector<CertReport> certify_all(int threads) {
  std::vector<CertReport> out;
  out.push_back(certify_lemma1());
  out.push_back(certify_theorem1());
  out.push_back(certify_theorem2());
  out.push_back(certify_table2(threads));
  return out;
}

nlohmann::ordered_json report_to_json(const CertReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["status"] = r.pass ? "pass" : "fail";
  j["details"] = r.details;
  return j;
}

std::string report_to_text(const CertReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << ' ' << r.claim << '\n';
  if (r.details.contains("rows") && (r.claim == "lemma1" || r.claim == "table1")) {
    os << "   i  w  g_i    rho_i\n";
    for (const auto& row : r.details["rows"]) {
      os << "  " << std::setw(2) << row["i"].get<int>() << "  "
         << row["w"].get<std::string>() << "  " << row["g"].get<std::string>()
         << "  " << row["rho"].get<std::string>() << '\n';
    }
  }
  for (const auto& c : r.details["checks"]) {
    os << "  [" << (c["pass"].get<bool>() ? "ok" : "!!") << "] "
       << c["name"].get<std::string>();
    if (!c["pass"].get<bool>()) {
      os << ": got " << c["got"].dump();
      if (c.contains("expected")) os << ", expected " << c["expected"].dump();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace puz5
