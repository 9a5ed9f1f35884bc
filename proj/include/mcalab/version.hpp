#pragma once

namespace mcalab {

// Bumped whenever the arithmetic contract (noise slot layout, kernel
// accumulation order, file formats) changes; recorded in run manifests.
inline constexpr const char* kEngineVersion = "mcalab-0.1.0";

}  // namespace mcalab
