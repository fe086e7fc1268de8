#pragma once

namespace rackhopf {

// Selects between the OpenMP kernel and its serial reference. Both produce identical results;
// the serial path exists for testing and benchmarking.
enum class Exec { Serial, Parallel };

// Worker count the OpenMP runtime would use (1 when built without OpenMP).
int max_threads();

}  // namespace rackhopf
