#include "evolution/run.hpp"

#include <cmath>
#include <cstdio>

#include "evolution/checkpoint.hpp"

namespace bo2d {

namespace {

void append_record(DiagnosticSeries& series, const SimState& state, const RunHooks& hooks) {
    series.records.push_back(
        make_record(state.time, state.field, state.spec, series.spec));
    if (hooks.on_record) hooks.on_record(state, series.records.back());
}

}  // namespace

RunOutput run(SimState state, double T, const StepperConfig& cfg, const SeriesSpec& sspec,
              const std::string& checkpoint_dir, const RunHooks& hooks) {
    if (!(T >= state.time))
        fail(ErrorCode::RangeError, "run: target time precedes state time");
    if (cfg.record_every < 1) fail(ErrorCode::RangeError, "run: record_every must be >= 1");
    if (cfg.checkpoint_every < 0)
        fail(ErrorCode::RangeError, "run: checkpoint_every must be >= 0");

    IfRk4Stepper stepper(state.spec, state.grid, cfg);

    RunOutput out;
    out.series.spec = sspec;
    out.series.grid = state.grid;
    out.series.equation = state.spec;

    const long long steps =
        static_cast<long long>(std::ceil((T - state.time) / cfg.dt - 1e-9));

    append_record(out.series, state, hooks);

    bool warned = false;
    for (long long s = 1; s <= steps; ++s) {
        stepper.step(state);

        if (cfg.nonlinearity && !warned &&
            cfg.dt * stepper.max_kx() * stepper.last_max_u() > 1.0) {
            std::fprintf(stderr,
                         "warning: advective stability guard tripped "
                         "(dt*max|kx|*max|u| = %.3g > 1) at step %llu\n",
                         cfg.dt * stepper.max_kx() * stepper.last_max_u(),
                         static_cast<unsigned long long>(state.step_count));
            warned = true;
            out.stability_warning = true;
        }

        if (cfg.checkpoint_every > 0 &&
            state.step_count % static_cast<std::uint64_t>(cfg.checkpoint_every) == 0) {
            const std::string path = (checkpoint_dir.empty() ? std::string(".")
                                                             : checkpoint_dir) +
                                     "/checkpoint_" + std::to_string(state.step_count) +
                                     ".ckpt";
            // Canonicalize through the serialized representation: the bytes on
            // disk and the state we carry forward agree exactly, so resuming
            // from this file is indistinguishable from never having stopped.
            const RealField phys = inverse_transform(state.field);
            write_checkpoint(path, state, phys);
            state.field = forward_transform(phys);
            if (hooks.on_checkpoint) hooks.on_checkpoint(state, path);
        }

        if (s % cfg.record_every == 0 || s == steps) append_record(out.series, state, hooks);
    }

    out.state = std::move(state);
    return out;
}

}  // namespace bo2d
