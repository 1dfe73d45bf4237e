#include <doctest.h>

#include "mpbern/report_io.hpp"

using namespace mpbern;

TEST_CASE("congruence reports survive a JSON round trip") {
  std::vector<CongruenceReport> reports = {
      mpb_kummer(Index{2, -1}, Family::CStar, Prime(7), 3, 9, 1),
      classical_kummer(Prime(5), 2, 2, 3),  // infinite valuation
      classical_kummer(Prime(5), 4, 8, 1),
      kitahara_counterexample(Prime(3), 2),
  };
  for (const auto& r : reports) {
    const json j = r;
    const auto text = j.dump();
    CHECK(json::parse(text).get<CongruenceReport>() == r);
  }
  const json j = reports[1];
  CHECK(j["achieved"] == "inf");
  CHECK(j["family"].is_null());
  CHECK(j["lhs"].is_string());
}

TEST_CASE("bound reports, Mahler expansions and values round trip") {
  const auto key = keylemma_scan(Index{1, 1}, Prime(5), 60);
  CHECK(json(key).get<BoundReport>() == key);
  const auto fmin = F_min_scan(Index{2}, Prime(7), 40);
  CHECK(json(fmin).get<BoundReport>() == fmin);

  const auto e = mahler_expand(2, 1, 1, Prime(3));
  const json je = e;
  CHECK(je["coeffs"][2] == "2/3");
  CHECK(je["all_integral"] == false);
  CHECK(je.get<MahlerExpansion>() == e);

  const MpbValue v{Index{1, -2}, 7, Family::BStar, mpb_explicit(Index{1, -2}, 7, Family::BStar), Method::Explicit};
  CHECK(mpb_value_from_json(json(v)) == v);
}

TEST_CASE("malformed JSON is rejected") {
  json j = kitahara_counterexample(Prime(5), 2);
  j["kind"] = "bogus";
  CHECK_THROWS(j.get<CongruenceReport>());
  json k = kitahara_counterexample(Prime(5), 2);
  k["lhs"] = "1/0";
  CHECK_THROWS(k.get<CongruenceReport>());
}

TEST_CASE("csv rows line up with their headers") {
  auto columns = [](const std::string& s) {
    std::size_t n = 1;
    bool quoted = false;
    for (char c : s) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++n;
    }
    return n;
  };
  const auto r = mpb_kummer(Index{1, 2}, Family::B, Prime(7), 2, 8, 1);
  CHECK(columns(csv_row(r)) == columns(csv_header_reports()));
  ScanSummaryRow row{Family::C, Index{1, 2}, 7, 1, 3, 3, 0, 2};
  CHECK(columns(csv_row(row)) == columns(csv_header_summary()));
  CHECK(csv_row(row).find("\"1,2\"") != std::string::npos);
}
