#pragma once

#include <string>
#include <vector>

#include "forge/cli/report.hpp"
#include "forge/groupcore.hpp"
#include "forge/mkconfig.hpp"

namespace forge::cli {

struct Options {
  std::string format = "json";
  std::string out;
  std::size_t cap = kDefaultCap;
  LabelSeed seed = LabelSeed::Lex;
};

/// Every claim of the verification battery, in a fixed order. Claims with
/// criterion 1..9 make up the acceptance criteria.
std::vector<Claim> run_battery(const Options& opts);

}  // namespace forge::cli
