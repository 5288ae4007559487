#include "evolution/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

namespace bo2d {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms unsupported");

template <typename T>
void put(std::string& buf, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    char raw[sizeof(T)];
    std::memcpy(raw, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw, raw + sizeof(T));
    buf.append(raw, sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    char raw[sizeof(T)];
    in.read(raw, sizeof(T));
    if (!in) fail(ErrorCode::IoError, "checkpoint truncated");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(raw, raw + sizeof(T));
    T v;
    std::memcpy(&v, raw, sizeof(T));
    return v;
}

}  // namespace

void write_checkpoint(const std::string& path, const SimState& state, const RealField& phys) {
    const auto& g = *state.grid;
    std::string buf;
    buf.reserve(64 + g.size() * sizeof(double));
    buf.append(kCheckpointMagic, sizeof(kCheckpointMagic));
    put<std::uint32_t>(buf, kCheckpointVersion);
    put<std::uint32_t>(buf, static_cast<std::uint32_t>(g.nx()));
    put<std::uint32_t>(buf, static_cast<std::uint32_t>(g.ny()));
    put<double>(buf, g.Lx());
    put<double>(buf, g.Ly());
    put<double>(buf, state.time);
    buf.push_back(state.spec.model == Model::BO2D ? '\x00' : '\x01');
    buf.push_back(state.spec.transverse_sign == TransverseSign::Minus ? '\x00' : '\x01');
    put<std::uint64_t>(buf, state.step_count);
    for (double v : phys.values) put<double>(buf, v);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot open checkpoint " + path + " for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) fail(ErrorCode::IoError, "checkpoint write failed: " + path);
}

SimState read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open checkpoint " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kCheckpointMagic, 8) != 0)
        fail(ErrorCode::ParseError, "not a checkpoint file: " + path);
    const auto version = get<std::uint32_t>(in);
    if (version != kCheckpointVersion)
        fail(ErrorCode::ParseError, "unsupported checkpoint version " + std::to_string(version));
    const auto nx = get<std::uint32_t>(in);
    const auto ny = get<std::uint32_t>(in);
    const double Lx = get<double>(in);
    const double Ly = get<double>(in);
    const double time = get<double>(in);
    char model_byte, sign_byte;
    in.read(&model_byte, 1);
    in.read(&sign_byte, 1);
    if (!in) fail(ErrorCode::IoError, "checkpoint truncated");
    const auto step_count = get<std::uint64_t>(in);

    SimState state;
    state.spec.model = model_byte == 0 ? Model::BO2D : Model::Shrira;
    state.spec.transverse_sign = sign_byte == 0 ? TransverseSign::Minus : TransverseSign::Plus;
    state.grid = make_grid(static_cast<int>(nx), static_cast<int>(ny), Lx, Ly);
    state.time = time;
    state.step_count = step_count;

    RealField phys(state.grid);
    for (auto& v : phys.values) v = get<double>(in);
    state.field = forward_transform(phys);
    return state;
}

}  // namespace bo2d
