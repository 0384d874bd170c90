#pragma once

namespace morsekit {

// Worker count for parallel kernels: OpenMP's limit, capped by the
// MORSEKIT_THREADS environment variable when set (values >= 1).
int worker_count();

}  // namespace morsekit
