#include "progfree/io.hpp"

#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace progfree::io {

namespace {

Json points_to_json(const std::vector<GridPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(p.coords);
  return arr;
}

std::vector<GridPoint> points_from_json(const Json& arr, std::int32_t m, std::int32_t d) {
  if (!arr.is_array()) throw std::invalid_argument("points: expected an array");
  std::vector<GridPoint> pts;
  pts.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<std::int32_t>(row.size()) != d)
      throw std::invalid_argument("points: coordinate tuple has wrong length");
    std::vector<std::int32_t> coords;
    coords.reserve(row.size());
    for (const auto& v : row) coords.push_back(v.get<std::int32_t>());
    pts.emplace_back(m, std::move(coords));
  }
  return pts;
}

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    if (r) return *r;
  }
  throw std::invalid_argument(std::string(what) + ": expected a \"p/q\" string");
}

std::string big_rational_str(const BigRational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace

Json site_set_to_json(const SiteSet& s) {
  Json j;
  j["m"] = s.modulus();
  j["d"] = s.dimension();
  j["points"] = points_to_json(s.points());
  return j;
}

SiteSet site_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("d") || !j.contains("points"))
    throw std::invalid_argument("site set: expected {\"m\", \"d\", \"points\"}");
  std::int32_t m = j.at("m").get<std::int32_t>();
  std::int32_t d = j.at("d").get<std::int32_t>();
  return SiteSet::from_points(m, d, points_from_json(j.at("points"), m, d));
}

Json certificate_to_json(const PeelCertificate& c) {
  Json j;
  j["strategy"] = c.strategy;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["m"] = c.m;
  j["d"] = c.d;
  j["removed"] = points_to_json(c.removed);
  j["core"] = points_to_json(c.core);
  return j;
}

PeelCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("strategy") || !j.contains("m") || !j.contains("d") ||
      !j.contains("removed") || !j.contains("core"))
    throw std::invalid_argument(
        "certificate: expected {\"strategy\", \"seed\", \"m\", \"d\", \"removed\", \"core\"}");
  PeelCertificate c;
  c.strategy = j.at("strategy").get<std::string>();
  if (j.contains("seed") && !j.at("seed").is_null())
    c.seed = j.at("seed").get<std::uint64_t>();
  c.m = j.at("m").get<std::int32_t>();
  c.d = j.at("d").get<std::int32_t>();
  for (auto& p : points_from_json(j.at("removed"), c.m, c.d)) c.removed.push_back(std::move(p));
  for (auto& p : points_from_json(j.at("core"), c.m, c.d)) c.core.push_back(std::move(p));
  return c;
}

Json search_result_to_json(const SearchResult& r) {
  Json j;
  j["m"] = r.m;
  j["alpha"] = r.alpha.str();
  j["beta"] = r.beta.str();
  j["count"] = r.count;
  j["threshold"] = r.threshold.str();
  j["success"] = r.success;
  j["step"] = r.step.str();
  j["refinements"] = r.refinements;
  j["candidates_evaluated"] = r.candidates_evaluated;
  return j;
}

Json lift_report_to_json(const LiftReport& r) {
  Json j;
  j["size"] = r.size.str();
  j["crude_bound"] = big_rational_str(r.bounds.crude);
  j["refined_bound"] = big_rational_str(r.bounds.refined);
  j["core_dim"] = r.core_dim;
  j["padding"] = r.padding;
  j["progression_free"] = r.progression_free;
  if (r.witness) {
    j["witness"] = Json::object();
    j["witness"]["x"] = r.witness->x.coords;
    j["witness"]["y"] = r.witness->y.coords;
    j["witness"]["z"] = r.witness->z.coords;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json facts_report_to_json(const FactsReport& r) {
  Json j;
  j["sum_range"] = {{"checked", r.sum_range_checked}, {"violations", r.sum_range_violations}};
  j["cross_pair"] = {{"checked", r.cross_pair_checked}, {"violations", r.cross_pair_violations}};
  j["midpoint"] = {{"checked", r.midpoint_checked}, {"violations", r.midpoint_violations}};
  j["ap_sum"] = {{"checked", r.ap_sum_checked}, {"violations", r.ap_sum_violations}};
  j["fold"] = {{"checked", r.fold_checked}, {"violations", r.fold_violations}};
  j["ok"] = r.ok();
  return j;
}

Json bounds_rows_to_json(const std::vector<BoundsRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["m"] = r.m;
    j["box_size"] = r.box_size;
    j["threshold"] = r.threshold.str();
    j["searched_count"] = r.searched_count;
    j["alpha"] = r.alpha.str();
    j["beta"] = r.beta.str();
    j["searched_beats_box"] = r.searched_beats_box;
    j["per_coord_constant"] = r.per_coord_constant;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string bounds_rows_to_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "m,box_size,threshold,searched_count,alpha,beta,searched_beats_box,per_coord_constant\n";
  for (const auto& r : rows) {
    os << r.m << ',' << r.box_size << ',' << r.threshold.str() << ',' << r.searched_count << ','
       << r.alpha.str() << ',' << r.beta.str() << ',' << (r.searched_beats_box ? 1 : 0) << ','
       << std::setprecision(6) << std::fixed << r.per_coord_constant << '\n';
  }
  return os.str();
}

std::string site_set_to_text(const SiteSet& s) {
  std::ostringstream os;
  for (const auto& p : s.points()) {
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      if (i) os << ' ';
      os << p.coords[i];
    }
    os << '\n';
  }
  return os.str();
}

SiteSet site_set_from_text(std::istream& in, std::int32_t m) {
  std::vector<std::vector<std::int32_t>> rows;
  std::string line;
  std::int32_t d = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::int32_t> coords;
    std::int64_t v;
    while (ls >> v) coords.push_back(static_cast<std::int32_t>(v));
    if (coords.empty()) continue;
    if (d < 0) d = static_cast<std::int32_t>(coords.size());
    if (static_cast<std::int32_t>(coords.size()) != d)
      throw std::invalid_argument("text set: inconsistent row lengths");
    rows.push_back(std::move(coords));
  }
  if (d < 0) d = 0;
  return SiteSet::from_coords(m, d, rows);
}

std::string region_svg() {
  constexpr int scale = 480;
  constexpr int margin = 40;
  auto px = [](const Rational& r) {
    return margin + scale * static_cast<double>(r.num()) / static_cast<double>(r.den());
  };
  auto py = [](const Rational& r) {
    return margin + scale * (1.0 - static_cast<double>(r.num()) / static_cast<double>(r.den()));
  };

  std::ostringstream os;
  os << std::setprecision(4) << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (scale + 2 * margin)
     << "\" height=\"" << (scale + 2 * margin) << "\">\n";
  os << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << scale
     << "\" height=\"" << scale << "\" fill=\"none\" stroke=\"#999\"/>\n";

  auto polygon = [&](const std::vector<region::Vertex>& vs) {
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) os << ' ';
      os << px(vs[i].first) << ',' << py(vs[i].second);
    }
    os << "\" fill=\"#aac8f0\" stroke=\"none\"/>\n";
  };
  polygon(region::upper_vertices());
  polygon(region::lower_vertices());

  for (const auto& e : region::boundary_edges()) {
    os << "  <line x1=\"" << px(e.from.first) << "\" y1=\"" << py(e.from.second) << "\" x2=\""
       << px(e.to.first) << "\" y2=\"" << py(e.to.second) << "\" stroke=\"#1040a0\""
       << " stroke-width=\"2\"" << (e.included ? "" : " stroke-dasharray=\"3,5\"") << "/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace progfree::io
