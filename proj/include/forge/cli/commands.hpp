#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forge/cli/battery.hpp"
#include "forge/cli/projection.hpp"

namespace forge::cli {

enum ExitCode { kPass = 0, kClaimFailure = 1, kUsage = 2 };

/// Builds one object and reports its certificate.
/// target: cube | hemi | map | roli | enantiomorph | cover | mk.
Report build_report(const std::string& target, const Options& opts);
int cmd_build(const std::string& target, const Options& opts, std::ostream& out, std::ostream& err);

/// Runs the battery, keeping only `ids` unless `all`.
int cmd_verify(const std::vector<std::string>& ids, bool all, const Options& opts, std::ostream& out,
               std::ostream& err);

/// Writes the SVG to opts.out (or `out` when empty); reports edge-length
/// and layout claims on `out` when the SVG goes to a file.
int cmd_project(const ProjectionSpec& spec, const Options& opts, std::ostream& out, std::ostream& err);

/// Report as JSON or text per opts.format, to opts.out or `out`.
int emit(const Report& r, const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace forge::cli
