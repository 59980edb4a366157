#pragma once

namespace capgeo::cli {

/// Dispatches analyze / cheeger / reach / erode / convex / gallery.
/// Prints exactly one JSON object on standard output; diagnostics go to
/// standard error. Exit codes: 0 exists/ok, 10 nonexistence, 20 unresolved,
/// 1 input or usage error.
int run(int argc, const char* const* argv);

}  // namespace capgeo::cli
