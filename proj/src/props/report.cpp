#include "props/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "core/errors.hpp"

namespace bo2d {

double median_of(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

void PropsReport::finalize() {
    trials = static_cast<int>(ratios.size());
    max_ratio = 0.0;
    for (double r : ratios) max_ratio = std::max(max_ratio, r);
    median_ratio = median_of(ratios);
}

void write_props_report(const PropsReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir + "/" + report.name + ".txt");
        if (!out) fail(ErrorCode::IoError, "cannot write report in " + dir);
        out << "estimate: " << report.name << "\n";
        out << "seed: " << report.seed << "\n";
        out << "trials: " << report.trials << "\n";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", report.max_ratio);
        out << "max_ratio: " << buf << "\n";
        std::snprintf(buf, sizeof(buf), "%.17g", report.median_ratio);
        out << "median_ratio: " << buf << "\n";
        for (const auto& [k, v] : report.extra) out << k << ": " << v << "\n";
        if (!report.table.empty()) {
            out << "\n";
            for (const auto& line : report.table) out << line << "\n";
        }
    }
    {
        std::ofstream out(dir + "/" + report.name + "_ratios.csv");
        if (!out) fail(ErrorCode::IoError, "cannot write ratio CSV in " + dir);
        out << "trial,ratio\n";
        char buf[64];
        for (std::size_t i = 0; i < report.ratios.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", report.ratios[i]);
            out << i << ',' << buf << "\n";
        }
    }
}

std::vector<double> run_trials(int count, int threads, const std::function<double(int)>& fn) {
    std::vector<double> out(count, 0.0);
    const int nthreads = std::max(1, threads);
    if (nthreads == 1 || count <= 1) {
        for (int t = 0; t < count; ++t) out[t] = fn(t);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w)
        pool.emplace_back([&] {
            for (int t = next.fetch_add(1); t < count; t = next.fetch_add(1)) out[t] = fn(t);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace bo2d
