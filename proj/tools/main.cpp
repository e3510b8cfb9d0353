// Command-line front end: certify, search, lift, trace, export.
// Exit codes: 0 = verified/pass, 1 = checked and false/failed, 2 = usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "puz5/certify.hpp"
#include "puz5/graph.hpp"
#include "puz5/hamilton.hpp"
#include "puz5/puzzle.hpp"
#include "puz5/quotient.hpp"

namespace {

using namespace puz5;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

LabeledDigraph build_selected(const std::string& selector) {
  if (selector == "state") return build_state_graph().digraph;
  if (selector == "cayley-s5") return build_cayley_s5().digraph;
  GroupGraph base = build_cayley_g();
  if (selector == "quotient-k0")
    return build_quotient(base, subgroup_k0(), "quotient-k0").digraph;
  return build_quotient(base, subgroup_k1(), "quotient-k1").digraph;
}

int run_certify(const std::string& claim, const std::string& format,
                const std::string& out_path, int threads, bool verbose) {
  std::vector<CertReport> reports;
  if (claim == "all") {
    reports = certify_all(threads);
  } else if (claim == "lemma1") {
    reports.push_back(certify_lemma1());
  } else if (claim == "theorem1") {
    reports.push_back(certify_theorem1());
  } else if (claim == "theorem2") {
    reports.push_back(certify_theorem2());
  } else {
    reports.push_back(certify_table2(threads));
  }

  std::string text;
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const CertReport& r : reports) j.push_back(report_to_json(r));
    text = j.dump(2) + "\n";
  } else {
    for (const CertReport& r : reports) {
      if (verbose)
        text += report_to_text(r);
      else
        text += std::string(r.pass ? "PASS" : "FAIL") + " " + r.claim + "\n";
    }
  }
  write_output(text, out_path);
  for (const CertReport& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int run_search(const std::string& selector, std::optional<std::int64_t> limit,
               const std::string& format, const std::string& out_path,
               int threads) {
  LabeledDigraph g = build_selected(selector);
  std::vector<HamCycleWord> raw = find_ham_cycles(g, limit, threads);

  // One representative per canonical class: the least raw word found.
  std::map<MoveWord, MoveWord> rep;  // canonical -> least raw
  for (const HamCycleWord& c : raw) {
    MoveWord canon = canonicalize(c.word);
    auto [it, fresh] = rep.emplace(canon, c.word);
    if (!fresh && c.word < it->second) it->second = c.word;
  }

  std::string text;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [canon, raw_word] : rep) {
      nlohmann::ordered_json cert;
      cert["graph"] = g.id;
      cert["start"] = g.names[0];
      cert["word"] = word_to_string(raw_word);
      cert["kind"] = "cycle";
      cert["cycle_lengths"] = {raw_word.size()};
      arr.push_back(std::move(cert));
    }
    text = arr.dump(2) + "\n";
  } else {
    for (const auto& [canon, raw_word] : rep)
      text += word_to_string(canon) + "\n";
  }
  write_output(text, out_path);
  return 0;
}

int run_lift(const std::string& selector, const std::string& word_text,
             bool splice, const std::string& format,
             const std::string& out_path) {
  const MoveWord word = word_from_string(word_text);
  GroupGraph base = build_cayley_g();
  Subgroup k = selector == "quotient-k0" ? subgroup_k0() : subgroup_k1();
  QuotientGraph q = build_quotient(base, k, selector);

  std::optional<std::int32_t> anchor = find_cycle_anchor(q.digraph, word);
  if (!anchor) {
    std::cerr << "word does not trace a Hamiltonian cycle of " << selector
              << " from any vertex\n";
    return 1;
  }
  CycleCover cover = lift_cycle(q, base, {selector, *anchor, word});

  nlohmann::ordered_json jout = nlohmann::ordered_json::array();
  std::string text;
  {
    nlohmann::ordered_json cert;
    cert["graph"] = cover.graph_id;
    cert["start"] = base.digraph.names[cover.cycles.front().first];
    cert["word"] = word_to_string(word);
    cert["kind"] = "cover";
    cert["cycle_lengths"] = cover.lengths();
    jout.push_back(std::move(cert));

    text += std::to_string(cover.cycles.size()) + "-cycle cover, lengths [";
    auto lens = cover.lengths();
    for (std::size_t i = 0; i < lens.size(); ++i)
      text += (i ? ", " : "") + std::to_string(lens[i]);
    text += "]\n";
  }

  if (splice) {
    WalkTrace path = splice_to_path(cover, base.digraph);
    Position start = decode(base.elems[path.visited.front()]);
    nlohmann::ordered_json cert;
    cert["graph"] = cover.graph_id;
    cert["start"] = base.digraph.names[path.visited.front()];
    cert["word"] = word_to_string(path.word);
    cert["kind"] = path.closed() ? "cycle" : "path";
    cert["cycle_lengths"] = {path.visited.size() - (path.closed() ? 1 : 0)};
    jout.push_back(std::move(cert));

    text += "spliced " + std::string(path.closed() ? "cycle" : "path") + ": " +
            std::to_string(path.word.size()) + " letters from position " +
            start.str() + "\n";
    text += word_to_string(path.word) + "\n";
  }

  write_output(format == "json" ? jout.dump(2) + "\n" : text, out_path);
  return 0;
}

int run_trace(const std::string& word_text, const std::string& start_text,
              int repeat, const std::string& format,
              const std::string& out_path, bool verbose) {
  const MoveWord word = repeat_word(word_from_string(word_text), repeat);
  const Position start = Position::parse(start_text);

  std::vector<Position> visited = {start};
  for (MoveLetter l : word) visited.push_back(apply_move(visited.back(), l));

  std::set<Position> distinct(visited.begin(), visited.end());
  const bool closed = visited.front() == visited.back();
  bool simple = true;
  {
    std::set<Position> seen;
    for (std::size_t i = 0; i + 1 < visited.size(); ++i)
      if (!seen.insert(visited[i]).second) simple = false;
    if (seen.contains(visited.back()) && !closed) simple = false;
  }
  std::string classification = "revisits";
  if (simple && closed && distinct.size() == 720)
    classification = "Hamiltonian cycle";
  else if (simple && !closed && distinct.size() == 720)
    classification = "Hamiltonian path";
  else if (simple)
    classification = "simple";

  std::string text;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["start"] = start.str();
    j["moves"] = word.size();
    j["distinct"] = distinct.size();
    j["closed"] = closed;
    j["simple"] = simple;
    j["classification"] = classification;
    if (verbose) {
      nlohmann::ordered_json seq = nlohmann::ordered_json::array();
      for (const Position& p : visited) seq.push_back(p.str());
      j["sequence"] = std::move(seq);
    }
    text = j.dump(2) + "\n";
  } else {
    if (verbose)
      for (const Position& p : visited) text += p.str() + "\n";
    text += std::to_string(distinct.size()) + " distinct, " +
            (closed ? "closed" : "open") + ", " + classification + "\n";
  }
  write_output(text, out_path);
  return 0;
}

int run_export(const std::string& selector, const std::string& format,
               const std::string& out_path) {
  LabeledDigraph g = build_selected(selector);
  std::string text = format == "dot" ? digraph_to_dot(g, true)
                                     : digraph_to_json(g).dump(2) + "\n";
  write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylindrical 5-puzzle state graph: construction, Hamiltonian "
               "search, quotient lifting, splicing, certification"};
  app.require_subcommand(1);

  const std::vector<std::string> selectors = {"state", "cayley-s5",
                                              "quotient-k0", "quotient-k1"};
  const std::vector<std::string> quotients = {"quotient-k0", "quotient-k1"};

  std::string claim, graph, word, format = "text", out_path, start = "012/345";
  std::int64_t limit = -1;
  int threads = 1, repeat = 1;
  bool splice = false, verbose = false;

  CLI::App* certify = app.add_subcommand("certify", "run a verification claim");
  certify->add_option("claim", claim, "lemma1|theorem1|theorem2|table2|all")
      ->required()
      ->check(CLI::IsMember({"lemma1", "theorem1", "theorem2", "table2", "all"}));
  certify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  certify->add_option("--out", out_path);
  certify->add_option("--threads", threads)->check(CLI::PositiveNumber);
  certify->add_flag("-v,--verbose", verbose);

  CLI::App* search = app.add_subcommand(
      "search", "enumerate Hamiltonian cycles, canonicalized");
  search->add_option("graph", graph)->required()->check(CLI::IsMember(selectors));
  search->add_option("--limit", limit)->check(CLI::PositiveNumber);
  search->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  search->add_option("--out", out_path);
  search->add_option("--threads", threads)->check(CLI::PositiveNumber);

  CLI::App* lift = app.add_subcommand(
      "lift", "lift a quotient Hamiltonian cycle to a cycle cover");
  lift->add_option("graph", graph)->required()->check(CLI::IsMember(quotients));
  lift->add_option("word", word, "move word over LRV")->required();
  lift->add_flag("--splice", splice, "splice a 2-cycle cover into a path");
  lift->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  lift->add_option("--out", out_path);

  CLI::App* trace_cmd = app.add_subcommand("trace", "trace a word through positions");
  trace_cmd->add_option("word", word, "move word over LRV (may be empty: \"\")")
      ->required();
  trace_cmd->add_option("--start", start, "start position, e.g. 012/345");
  trace_cmd->add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  trace_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  trace_cmd->add_option("--out", out_path);
  trace_cmd->add_flag("-v,--verbose", verbose);

  CLI::App* export_cmd = app.add_subcommand("export", "write a graph to dot/json");
  export_cmd->add_option("graph", graph)->required()->check(CLI::IsMember(selectors));
  export_cmd->add_option("--format", format)
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (certify->parsed())
      return run_certify(claim, format, out_path, threads, verbose);
    if (search->parsed())
      return run_search(graph, limit < 0 ? std::nullopt
                                         : std::optional<std::int64_t>(limit),
                        format, out_path, threads);
    if (lift->parsed()) return run_lift(graph, word, splice, format, out_path);
    if (trace_cmd->parsed())
      return run_trace(word, start, repeat, format, out_path, verbose);
    if (export_cmd->parsed()) return run_export(graph, format, out_path);
  } catch (const InvalidCertificate& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const SpliceNotFound& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
