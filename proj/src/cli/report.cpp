#include "forge/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace forge::cli {

Claim equal_claim(std::string id, int criterion, json expected, json computed, std::string anchor) {
  const bool pass = expected == computed;
  return {std::move(id), criterion, std::move(expected), std::move(computed), pass, std::move(anchor)};
}

Claim check_claim(std::string id, int criterion, json expected, json computed, bool pass, std::string anchor) {
  return {std::move(id), criterion, std::move(expected), std::move(computed), pass, std::move(anchor)};
}

bool Report::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

json to_json(const Claim& c) {
  return {{"id", c.id},         {"criterion", c.criterion}, {"expected", c.expected},
          {"computed", c.computed}, {"pass", c.pass},       {"anchor", c.anchor}};
}

json Report::to_json() const {
  json claims_json = json::array();
  for (const auto& c : claims) claims_json.push_back(cli::to_json(c));
  return {{"schema", kSchema}, {"object", object}, {"pass", all_pass()}, {"claims", claims_json}, {"artifact", artifact}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << object << '\n';
  for (const auto& c : claims) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << ": computed " << c.computed.dump();
    if (!c.pass) os << ", expected " << c.expected.dump();
    os << '\n';
  }
  const auto failed = std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; });
  os << claims.size() - failed << '/' << claims.size() << " claims pass\n";
  return os.str();
}

json rational_json(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

json point_json(const PointVec& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(rational_json(x));
  return out;
}

json q3_json(const Q3& x) { return json::array({rational_json(x.a()), rational_json(x.b())}); }

json qfield_json(const QField& z) {
  json out = json::array();
  for (const auto& c : z.coords()) out.push_back(rational_json(c));
  return out;
}

}  // namespace forge::cli
