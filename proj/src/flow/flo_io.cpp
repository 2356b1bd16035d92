#include "maskflow/flow/flo_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "maskflow/core/image_io.hpp"

namespace fs = std::filesystem;

namespace maskflow::flow {

namespace {

constexpr float kFloMagic = 202021.25f;
constexpr std::int32_t kMaxDim = 1 << 15;

// Serialized fields are little-endian; this code assumes a little-endian
// host, which is checked once at runtime.
void require_little_endian() {
    const std::uint32_t probe = 1;
    std::uint8_t byte;
    std::memcpy(&byte, &probe, 1);
    if (byte != 1) throw IoError(".flo I/O requires a little-endian host");
}

template <typename T>
void put(std::ofstream& os, T value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
bool get(std::ifstream& is, T& value) {
    is.read(reinterpret_cast<char*>(&value), sizeof(T));
    return is.gcount() == sizeof(T);
}

std::string flo_name(const char* prefix, int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_%06d.flo", prefix, index);
    return buf;
}

} // namespace

FlowField read_flo(const fs::path& path) {
    require_little_endian();
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open flow file: " + path.string());

    float magic = 0.0f;
    if (!get(is, magic)) throw IoError("truncated .flo header: " + path.string());
    if (magic != kFloMagic) throw IoError("bad .flo magic in: " + path.string());

    std::int32_t w = 0, h = 0;
    if (!get(is, w) || !get(is, h)) throw IoError("truncated .flo header: " + path.string());
    if (w < 1 || h < 1 || w > kMaxDim || h > kMaxDim)
        throw IoError("implausible .flo dimensions in: " + path.string());

    const std::size_t n = static_cast<std::size_t>(w) * h;
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        float fu = 0.0f, fv = 0.0f;
        if (!get(is, fu) || !get(is, fv))
            throw IoError("truncated .flo payload: " + path.string());
        if (!std::isfinite(fu) || !std::isfinite(fv))
            throw IoError("non-finite flow value in: " + path.string());
        u[i] = fu;
        v[i] = fv;
    }
    return FlowField(w, h, std::move(u), std::move(v));
}

void write_flo(const FlowField& field, const fs::path& path) {
    require_little_endian();
    field.check_finite();
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write flow file: " + path.string());

    put(os, kFloMagic);
    put(os, static_cast<std::int32_t>(field.width));
    put(os, static_cast<std::int32_t>(field.height));
    const std::size_t n = field.u.size();
    for (std::size_t i = 0; i < n; ++i) {
        put(os, static_cast<float>(field.u[i]));
        put(os, static_cast<float>(field.v[i]));
    }
    if (!os) throw IoError("write failed: " + path.string());
}

FlowSequence load_flow_sequence(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<FlowField> fwd, bwd;
    for (int i = 1;; ++i) {
        const fs::path f = dir / flo_name("forward", i);
        const fs::path b = dir / flo_name("backward", i);
        if (!fs::exists(f) && !fs::exists(b)) break;
        if (!fs::exists(f) || !fs::exists(b))
            throw IoError("unpaired forward/backward flow at index " + std::to_string(i) + " in " +
                          dir.string());
        fwd.push_back(read_flo(f));
        bwd.push_back(read_flo(b));
    }
    if (fwd.empty()) throw IoError("no flow files in: " + dir.string());
    return FlowSequence(std::move(fwd), std::move(bwd));
}

void save_flow_sequence(const FlowSequence& flows, const fs::path& dir) {
    fs::create_directories(dir);
    for (std::size_t i = 0; i < flows.size(); ++i) {
        write_flo(flows.forward[i], dir / flo_name("forward", static_cast<int>(i) + 1));
        write_flo(flows.backward[i], dir / flo_name("backward", static_cast<int>(i) + 1));
    }
}

} // namespace maskflow::flow
