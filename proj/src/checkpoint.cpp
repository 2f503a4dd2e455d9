#include "betaplane/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace betaplane {

static_assert(std::endian::native == std::endian::little,
              "BPF1 writer assumes a little-endian host");

namespace {
constexpr char magic[4] = {'B', 'P', 'F', '1'};
constexpr std::uint32_t version = 1;
constexpr std::size_t header_bytes = 4 + 4 + 8 + 8 + 8 + 8;
} // namespace

void checkpoint_write(const std::filesystem::path& path, const RealField& f,
                      double t, double beta) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("checkpoint_write: cannot open " + path.string());
    const std::uint64_t n = f.grid.n();
    const double box = f.grid.box_length();
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&n), 8);
    out.write(reinterpret_cast<const char*>(&box), 8);
    out.write(reinterpret_cast<const char*>(&t), 8);
    out.write(reinterpret_cast<const char*>(&beta), 8);
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!out) throw FormatError("checkpoint_write: short write to " + path.string());
}

std::pair<RealField, CheckpointMeta> checkpoint_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("checkpoint_read: cannot open " + path.string());

    char got_magic[4] = {};
    in.read(got_magic, 4);
    if (!in || std::memcmp(got_magic, magic, 4) != 0)
        throw FormatError("checkpoint_read: bad magic at byte offset 0 in " + path.string());

    std::uint32_t got_version = 0;
    in.read(reinterpret_cast<char*>(&got_version), 4);
    if (!in || got_version != version)
        throw FormatError("checkpoint_read: unsupported version " +
                          std::to_string(got_version) + " at byte offset 4");

    CheckpointMeta meta;
    in.read(reinterpret_cast<char*>(&meta.n), 8);
    in.read(reinterpret_cast<char*>(&meta.box_length), 8);
    in.read(reinterpret_cast<char*>(&meta.t), 8);
    in.read(reinterpret_cast<char*>(&meta.beta), 8);
    if (!in) throw FormatError("checkpoint_read: truncated header (need " +
                               std::to_string(header_bytes) + " bytes)");

    GridSpec grid(static_cast<std::size_t>(meta.n), meta.box_length);
    RealField f(grid);
    const std::size_t payload = f.values.size() * sizeof(double);
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(payload));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != payload)
        throw FormatError("checkpoint_read: payload length mismatch, expected " +
                          std::to_string(payload) + " bytes after the header, got " +
                          std::to_string(got));
    char extra;
    if (in.read(&extra, 1))
        throw FormatError("checkpoint_read: trailing bytes after byte offset " +
                          std::to_string(header_bytes + payload));
    return {std::move(f), meta};
}

} // namespace betaplane
