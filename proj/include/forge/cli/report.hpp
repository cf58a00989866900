#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "forge/qfield.hpp"
#include "forge/signedperm.hpp"

namespace forge::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "polytope-forge/1";

struct Claim {
  std::string id;
  int criterion = 0;  // acceptance criterion number, 0 for supplementary claims
  json expected;
  json computed;
  bool pass = false;
  std::string anchor;  // short topic phrase
};

/// Claim that passes when computed == expected.
Claim equal_claim(std::string id, int criterion, json expected, json computed, std::string anchor);
/// Claim with an explicit verdict (for checks that are not a plain equality).
Claim check_claim(std::string id, int criterion, json expected, json computed, bool pass, std::string anchor);

struct Report {
  std::string object;
  std::vector<Claim> claims;
  json artifact = json::object();
  double seconds = 0;  // kept out of the JSON payload so reruns are identical

  bool all_pass() const;
  json to_json() const;
  std::string to_text() const;
};

json to_json(const Claim& c);
json rational_json(const Rational& q);
json point_json(const PointVec& p);
json q3_json(const Q3& x);
/// The (a, b, c, d) coordinates of a + b sqrt3 + c i + d i sqrt3, as strings.
json qfield_json(const QField& z);

}  // namespace forge::cli
