#pragma once

namespace lss {

// Entry point shared by the lss binary and the CLI tests.
// Returns 0 on success, 1 on usage errors, 2 on data errors.
int run_cli(int argc, const char* const* argv);

}  // namespace lss
