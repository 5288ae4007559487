#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bo2d {

/// Per-property result bundle: summary statistics, per-trial ratios and any
/// extra lines (e.g. the resolution sweep table). Serializes to a plain-text
/// report and a CSV of per-trial ratios.
struct PropsReport {
    std::string name;
    std::uint64_t seed = 0;
    int trials = 0;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    std::vector<double> ratios;
    std::vector<std::pair<std::string, std::string>> extra;
    std::vector<std::string> table;

    void finalize();  // fills trials/max/median from `ratios`
};

/// Writes <dir>/<name>.txt and <dir>/<name>_ratios.csv.
void write_props_report(const PropsReport& report, const std::string& dir);

double median_of(std::vector<double> values);

/// Evaluate fn(trial) for trial = 0..count-1 on `threads` workers; results
/// are stored by trial index, so the outcome is independent of scheduling.
std::vector<double> run_trials(int count, int threads, const std::function<double(int)>& fn);

}  // namespace bo2d
