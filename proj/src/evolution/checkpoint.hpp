#pragma once

#include <string>

#include "evolution/stepper.hpp"

namespace bo2d {

// Checkpoint file layout (all little-endian):
//   magic "BO2DCKPT" | u32 version | u32 nx | u32 ny | f64 Lx | f64 Ly |
//   f64 time | u8 model (0=BO2D,1=Shrira) | u8 sign (0=minus,1=plus) |
//   u64 step_count | nx*ny f64 row-major physical field.
inline constexpr char kCheckpointMagic[8] = {'B', 'O', '2', 'D', 'C', 'K', 'P', 'T'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

void write_checkpoint(const std::string& path, const SimState& state, const RealField& phys);

/// Reads a checkpoint and reconstructs the spectral state by one forward
/// transform of the stored samples (the canonical representation on disk).
SimState read_checkpoint(const std::string& path);

}  // namespace bo2d
