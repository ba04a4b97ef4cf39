#pragma once

#include "slicecert/casework.hpp"

namespace slicecert {

// Re-checks every leaf of a certificate from its arithmetic witness, using
// only the homology / signature / genus primitives (never the case rules),
// and recomputes the final verdict.  Returns true iff every witness checks
// out and the recomputed verdict matches the certificate.
bool replay_certificate(const Certificate& cert, const KnotRecord& K);

}  // namespace slicecert
