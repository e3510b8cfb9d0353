#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace puz5 {

// Machine-checked verification report for one claim.  `pass` is true iff
// every sub-check passed; `details` carries the per-step evidence and is
// byte-for-byte reproducible across runs and thread counts.
struct CertReport {
  std::string claim;
  bool pass = false;
  nlohmann::ordered_json details;
};

// Recomputes the 24 running products of the seed word and their orbit
// representatives, checks them against the fixed reference table, and checks
// distinctness.
CertReport certify_table1();

// Table-1 checks plus: g_24 has order 5, the representatives are distinct,
// and the five-fold repetition of the seed word traces a 120-vertex
// Hamiltonian cycle of Cay(S5).
CertReport certify_lemma1();

// Intermediate arithmetic of the path construction (letter counts, the Z/2
// and Z/3 parts of the seed product), the [360,360] 2-cycle cover, the
// single-letter splice and its landing point, and the full 719-move trace.
CertReport certify_theorem1();

// The 48-letter word: c^15 traces a 720-vertex Hamiltonian cycle; c alone is
// a simple path; no repetition c^k is a Hamiltonian cycle of Cay(S5).  The
// report carries a SHA-256 digest of the full 721-entry visit sequence.
CertReport certify_theorem2();

// Full pipeline on the 24-vertex quotient: exhaustive search, canonical
// classes vs the four reference words, and lift classification per row.
CertReport certify_table2(int threads = 1);

// Quotient orders: 24 and 48 cosets with fibers of 30 and 15.
CertReport certify_quotient_counts();

// The four headline claims, in order: lemma1, theorem1, theorem2, table2.
std::vector<CertReport> certify_all(int threads = 1);

nlohmann::ordered_json report_to_json(const CertReport& r);
std::string report_to_text(const CertReport& r);

std::string sha256_hex(std::string_view data);

}  // namespace puz5
