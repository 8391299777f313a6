#pragma once

#include "addcomb/ambient.hpp"

namespace addcomb::fixtures {

/// Symmetric group on three points; labels e, (12), (13), (23), (123), (132).
AmbientPtr s3();
/// Dihedral group of order 8; labels r0..r3 (rotations) and s, sr, sr2, sr3.
AmbientPtr d4();
/// Quaternion group; labels 1, i, j, k, -1, -i, -j, -k.
AmbientPtr q8();

}  // namespace addcomb::fixtures
