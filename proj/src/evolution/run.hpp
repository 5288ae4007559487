#pragma once

#include <functional>
#include <string>
#include <utility>

#include "diagnostics/series.hpp"
#include "evolution/stepper.hpp"

namespace bo2d {

struct RunHooks {
    /// Called after every record is appended to the series.
    std::function<void(const SimState&, const DiagnosticRecord&)> on_record;
    /// Called after every checkpoint write with the written path.
    std::function<void(const SimState&, const std::string&)> on_checkpoint;
};

struct RunOutput {
    SimState state;
    DiagnosticSeries series;
    bool stability_warning = false;  // advective guard dt*max|kx|*max|u| > 1 tripped
};

/// Step the state until time >= T, recording diagnostics every record_every
/// steps and at the final step, writing checkpoints per cadence into
/// checkpoint_dir (files checkpoint_<step>.ckpt). Each checkpoint write
/// canonicalizes the in-memory state through the serialized samples so a
/// resumed run reproduces the uninterrupted one bit-for-bit.
RunOutput run(SimState state, double T, const StepperConfig& cfg, const SeriesSpec& sspec,
              const std::string& checkpoint_dir = "", const RunHooks& hooks = {});

}  // namespace bo2d
