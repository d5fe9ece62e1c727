// goldens.hpp — Paper-value acceptance suite: each criterion measures the
// shipped implementation against its pinned expectation and tolerance.

#pragma once

#include <string>
#include <vector>

namespace wqed::cli {

struct GoldenResult {
    std::string name;
    std::string detail;  // measured vs expected, human readable
    bool pass = false;
};

// Runs every criterion whose name contains the filter (all when empty).
std::vector<GoldenResult> run_goldens(const std::string& filter = "");

// Prints one pass/fail line per criterion; returns the failure count.
int report_goldens(const std::vector<GoldenResult>& results);

}  // namespace wqed::cli
