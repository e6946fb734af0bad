#pragma once

namespace zetafree {

// Entry point behind the zetafree binary; separated so tests can drive the
// subcommands in-process.
int cli_main(int argc, const char* const* argv);

}  // namespace zetafree
