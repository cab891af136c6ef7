#include <doctest.h>

#include <sstream>

#include "progfree/io.hpp"

using namespace progfree;
using progfree::io::Json;

TEST_CASE("site set JSON round-trip and schema") {
  auto s = SiteSet::from_coords(5, 2, {{4, 0}, {1, 2}, {0, 3}});
  Json j = io::site_set_to_json(s);
  CHECK(j["m"] == 5);
  CHECK(j["d"] == 2);
  REQUIRE(j["points"].size() == 3);
  // points sorted lexicographically
  CHECK(j["points"][0] == Json::array({0, 3}));
  CHECK(io::site_set_from_json(j) == s);

  // extra keys are ignored on read
  j["config"] = {{"anything", true}};
  CHECK(io::site_set_from_json(j) == s);
}

TEST_CASE("site set JSON rejects malformed input") {
  CHECK_THROWS(io::site_set_from_json(Json::object()));
  Json bad = {{"m", 3}, {"d", 2}, {"points", {{0, 1, 2}}}};  // wrong arity
  CHECK_THROWS(io::site_set_from_json(bad));
}

TEST_CASE("serialization is byte-identical across runs") {
  auto s = SiteSet::from_coords(7, 2, {{6, 6}, {0, 0}, {3, 1}});
  CHECK(io::site_set_to_json(s).dump(2) == io::site_set_to_json(s).dump(2));
  auto again = SiteSet::from_coords(7, 2, {{3, 1}, {6, 6}, {0, 0}});
  CHECK(io::site_set_to_json(s).dump(2) == io::site_set_to_json(again).dump(2));
}

TEST_CASE("certificate JSON round-trip") {
  auto s = SiteSet::from_coords(5, 1, {{0}, {1}, {2}});
  auto cert = greedy_peel(s, PeelStrategy::Lexicographic);
  Json j = io::certificate_to_json(cert);
  CHECK(j["strategy"] == "lexicographic");
  CHECK(j["seed"].is_null());
  auto back = io::certificate_from_json(j);
  CHECK(back.removed == cert.removed);
  CHECK(back.core == cert.core);
  CHECK(back.strategy == cert.strategy);
  CHECK(verify_certificate(back));

  auto seeded = greedy_peel(s, PeelStrategy::Random, std::nullopt, 42);
  auto back2 = io::certificate_from_json(io::certificate_to_json(seeded));
  CHECK(back2.seed == std::optional<std::uint64_t>(42));
}

TEST_CASE("search result JSON uses p/q strings") {
  SearchResult r;
  r.m = 5;
  r.alpha = Rational(1, 240);
  r.beta = Rational(7, 240);
  r.count = 8;
  r.threshold = Rational(175, 24);
  r.success = true;
  r.step = Rational(1, 120);
  Json j = io::search_result_to_json(r);
  CHECK(j["alpha"] == "1/240");
  CHECK(j["threshold"] == "175/24");
  CHECK(j["success"] == true);
}

TEST_CASE("bounds table CSV has fixed columns") {
  auto rows = bounds_table(3);
  auto csv = io::bounds_rows_to_csv(rows);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "m,box_size,threshold,searched_count,alpha,beta,searched_beats_box,"
        "per_coord_constant");
  int lines = 0;
  for (std::string line; std::getline(is, line);) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("text format round-trip") {
  auto lifted = SiteSet::from_coords(2, 4, {{0, 1, 1, 0}, {1, 0, 0, 1}});
  auto text = io::site_set_to_text(lifted);
  CHECK(text == "0 1 1 0\n1 0 0 1\n");
  std::istringstream is(text);
  CHECK(io::site_set_from_text(is, 2) == lifted);
}

TEST_CASE("SVG export renders both parts with solid and dashed strokes") {
  auto svg = io::region_svg();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("facts report JSON") {
  FactsReport rep;
  rep.sum_range_checked = 10;
  Json j = io::facts_report_to_json(rep);
  CHECK(j["sum_range"]["checked"] == 10);
  CHECK(j["sum_range"]["violations"] == 0);
}
