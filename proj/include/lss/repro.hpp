#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lss {

// Named end-to-end pipelines over synthetic scenes (boundary table, noise
// sweep, window sweep, downsampling, masked clustering). Artifacts land in
// outdir. Returns false when a pipeline's structural expectation fails.
bool run_repro(const std::string& pipeline, const std::string& outdir,
               std::uint64_t seed, int threads);

const std::vector<std::string>& repro_names();

}  // namespace lss
