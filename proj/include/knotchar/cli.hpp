#pragma once

#include <iosfwd>

namespace knotchar {

/// Entry point of the `knotchar` tool. Returns 0 on success, 1 when a
/// verification fails and 2 on usage or input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotchar
