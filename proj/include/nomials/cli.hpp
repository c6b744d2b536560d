#pragma once

#include "nomials/dist.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace nomials::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `index,probability,numerator,denominator` rows, one per support
/// element; probability printed to 12 significant digits. Throws
/// std::runtime_error if the file cannot be written.
void export_plot_data(const Dist<Level>& dist, const std::filesystem::path& path);

}  // namespace nomials::cli
