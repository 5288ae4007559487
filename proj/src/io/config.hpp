#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evolution/stepper.hpp"

namespace bo2d {

enum class IcKind { Gaussian, DxGaussian, CosProduct, RandomBand, Checkpoint };

struct InitialCondition {
    IcKind kind = IcKind::Gaussian;
    double amplitude = 1.0;
    double sigma_x = 1.0;
    double sigma_y = 1.0;
    double center_x = 0.0;
    double center_y = 0.0;
    int mode_m = 1;
    int mode_n = 1;
    std::uint64_t seed = 1;
    int band_m = 8;
    int band_n = 8;
    std::string path;  // checkpoint source
};

/// Fully validated run configuration, parsed from line-oriented
/// `key = value` text (`#` comments, unknown keys rejected).
struct RunConfig {
    Model model = Model::BO2D;
    TransverseSign transverse_sign = TransverseSign::Minus;
    int nx = 64;
    int ny = 64;
    double Lx = 2.0 * 3.141592653589793;
    double Ly = 2.0 * 3.141592653589793;
    double dt = 1e-3;
    double T = 1.0;
    Dealias dealias = Dealias::TwoThirds;
    bool nonlinearity = true;
    int record_every = 1;
    int checkpoint_every = 0;
    InitialCondition ic;
    std::vector<std::pair<int, int>> probes;
    std::vector<int> moment_etas;
    double norm_s = 1.0;
    double weight_r1 = 1.0;
    double weight_r2 = 1.0;
    std::string output_dir = ".";

    EquationSpec equation() const { return {model, transverse_sign}; }
    StepperConfig stepper() const {
        return {dt, dealias, record_every, checkpoint_every, nonlinearity};
    }
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical key = value rendering; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace bo2d
