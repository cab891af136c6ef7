#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "progfree/facts.hpp"
#include "progfree/grid.hpp"
#include "progfree/lift.hpp"
#include "progfree/reduce.hpp"
#include "progfree/search.hpp"

namespace progfree::io {

using Json = nlohmann::ordered_json;

/// Shared site-set file schema:
///   {"m": <int>, "d": <int>, "points": [[<int>, ...], ...]}
/// points sorted lexicographically, coordinates reduced to [0, m). Extra
/// keys (e.g. an echoed "config") are permitted and ignored on read.
Json site_set_to_json(const SiteSet& s);
SiteSet site_set_from_json(const Json& j);

/// Certificate schema: {"strategy", "seed", "m", "d", "removed", "core"}.
Json certificate_to_json(const PeelCertificate& c);
PeelCertificate certificate_from_json(const Json& j);

Json search_result_to_json(const SearchResult& r);
Json lift_report_to_json(const LiftReport& r);
Json facts_report_to_json(const FactsReport& r);
Json bounds_rows_to_json(const std::vector<BoundsRow>& rows);
std::string bounds_rows_to_csv(const std::vector<BoundsRow>& rows);

/// Line-per-vector text format ("0 1 1 0"). Reading requires the modulus.
std::string site_set_to_text(const SiteSet& s);
SiteSet site_set_from_text(std::istream& in, std::int32_t m);

/// The region drawn as two filled polygons; solid boundary segments are
/// included in the region, dotted ones are excluded.
std::string region_svg();

}  // namespace progfree::io
