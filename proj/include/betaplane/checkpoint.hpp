#pragma once

#include <cstdint>
#include <filesystem>

#include "betaplane/field.hpp"

namespace betaplane {

// BPF1 field checkpoint, little-endian throughout:
//   bytes 0..3   magic "BPF1"
//   bytes 4..7   version, uint32 = 1
//   bytes 8..15  n, uint64
//   bytes 16..39 box_length, t, beta as IEEE-754 binary64
//   then n*n field values, binary64, row-major.
// write -> read round trip is bitwise identity.
struct CheckpointMeta {
    std::uint64_t n = 0;
    double box_length = 0.0;
    double t = 0.0;
    double beta = 0.0;
};

void checkpoint_write(const std::filesystem::path& path, const RealField& f,
                      double t, double beta);

std::pair<RealField, CheckpointMeta> checkpoint_read(const std::filesystem::path& path);

} // namespace betaplane
