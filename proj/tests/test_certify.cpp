#include <doctest.h>

#include "puz5/certify.hpp"

using namespace puz5;

TEST_CASE("table1 report reproduces the reference rows") {
  CertReport r = certify_table1();
  CHECK(r.pass);
  CHECK(r.claim == "table1");
  REQUIRE(r.details["rows"].size() == 24);
  CHECK(r.details["rows"][0]["g"] == "45312");
  CHECK(r.details["rows"][0]["rho"] == "12453");
  CHECK(r.details["rows"][2]["rho"] == "12435");
  CHECK(r.details["rows"][23]["g"] == "53412");
  CHECK(r.details["rows"][23]["rho"] == "12345");

  std::string text = report_to_text(r);
  CHECK(text.find("PASS table1") == 0);
  CHECK(text.find("53412") != std::string::npos);
}

TEST_CASE("lemma1 report") {
  CertReport r = certify_lemma1();
  CHECK(r.pass);
  CHECK(r.details["cycle_length"] == 120);
}

TEST_CASE("theorem1 report") {
  CertReport r = certify_theorem1();
  CHECK(r.pass);
  CHECK(r.details["cover_lengths"] == nlohmann::ordered_json({360, 360}));
  CHECK(r.details["path_start"] == "(12345,0,0)");
  CHECK(r.details["path_end"] == "(53412,1,1)");
}

TEST_CASE("theorem2 report carries the visit digest") {
  CertReport r = certify_theorem2();
  CHECK(r.pass);
  CHECK(r.details["visit_digest_sha256"] ==
        "f3838cdff6ce9d0ac9274453312d9452e44ad353aabe5e15794ed9768aae66d6");
  CHECK(r.details["s5_product_order"] == 5);
}

TEST_CASE("table2 report") {
  CertReport r = certify_table2();
  CHECK(r.pass);
  CHECK(r.details["raw_cycles"] == 40);
  REQUIRE(r.details["rows"].size() == 4);
  CHECK(r.details["rows"][0]["cover_cycles"] == 2);
  CHECK(r.details["rows"][1]["cover_cycles"] == 6);
  CHECK(r.details["rows"][2]["cover_cycles"] == 6);
  CHECK(r.details["rows"][3]["cover_cycles"] == 6);
}

TEST_CASE("quotient counts report") {
  CertReport r = certify_quotient_counts();
  CHECK(r.pass);
  CHECK(r.claim == "quotient-counts");
}

TEST_CASE("full run passes and serializes deterministically") {
  auto runs1 = certify_all(1);
  REQUIRE(runs1.size() == 4);
  CHECK(runs1[0].claim == "lemma1");
  CHECK(runs1[1].claim == "theorem1");
  CHECK(runs1[2].claim == "theorem2");
  CHECK(runs1[3].claim == "table2");
  for (const CertReport& r : runs1) CHECK(r.pass);

  auto runs2 = certify_all(1);
  auto runs4 = certify_all(4);
  for (std::size_t i = 0; i < runs1.size(); ++i) {
    CHECK(report_to_json(runs1[i]).dump() == report_to_json(runs2[i]).dump());
    CHECK(report_to_json(runs1[i]).dump() == report_to_json(runs4[i]).dump());
  }
}

TEST_CASE("sha256 known answer") {
  // FIPS 180-2 test vector for "abc"
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
