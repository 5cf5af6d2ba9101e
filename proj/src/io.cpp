#include "llfw/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace llfw {

static_assert(std::endian::native == std::endian::little,
              "LLFW serialization assumes a little-endian host");

namespace {

constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 16 + 16 + 8;

template <typename T>
void put(std::string& buf, T v) {
    char raw[sizeof(T)];
    std::memcpy(raw, &v, sizeof(T));
    buf.append(raw, sizeof(T));
}

template <typename T>
T take(const std::string& buf, std::size_t offset) {
    T v;
    std::memcpy(&v, buf.data() + offset, sizeof(T));
    return v;
}

}  // namespace

void atomic_write_text(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void write_field(const Field& f, const std::string& path) {
    if (f.grid.dim != 2) throw std::invalid_argument("write_field: 2d fields only");
    std::string buf;
    buf.reserve(kHeaderBytes + 24 * f.grid.size());
    buf.append("LLFW", 4);
    put<std::uint32_t>(buf, 1);
    put<std::uint32_t>(buf, 2);
    put<std::uint64_t>(buf, f.grid.n[0]);
    put<std::uint64_t>(buf, f.grid.n[1]);
    put<double>(buf, f.grid.length[0]);
    put<double>(buf, f.grid.length[1]);
    put<double>(buf, f.c);
    for (const ScalarSamples* comp : {&f.u1, &f.u2, &f.u3})
        for (double v : comp->values) put<double>(buf, v);
    atomic_write_text(path, buf);
}

Field read_field(const std::string& path, bool* renorm_warning) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (buf.size() < kHeaderBytes)
        throw std::runtime_error(path + ": truncated header (" + std::to_string(buf.size()) +
                                 " bytes)");
    if (buf.compare(0, 4, "LLFW") != 0)
        throw std::runtime_error(path + ": bad magic at offset 0");
    if (take<std::uint32_t>(buf, 4) != 1)
        throw std::runtime_error(path + ": unsupported version at offset 4");
    if (take<std::uint32_t>(buf, 8) != 2)
        throw std::runtime_error(path + ": unsupported dim at offset 8");
    const auto nx = take<std::uint64_t>(buf, 12);
    const auto ny = take<std::uint64_t>(buf, 20);
    const double lx = take<double>(buf, 28);
    const double ly = take<double>(buf, 36);
    const double c = take<double>(buf, 44);
    const std::size_t count = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    const std::size_t expected = kHeaderBytes + 24 * count;
    if (buf.size() != expected)
        throw std::runtime_error(path + ": truncated payload (" + std::to_string(buf.size()) +
                                 " of " + std::to_string(expected) + " bytes)");

    Field f;
    f.grid = make_grid(nx, ny, lx, ly);
    f.c = c;
    f.u1 = zeros(f.grid);
    f.u2 = zeros(f.grid);
    f.u3 = zeros(f.grid);
    std::size_t off = kHeaderBytes;
    for (ScalarSamples* comp : {&f.u1, &f.u2, &f.u3})
        for (std::size_t i = 0; i < count; ++i, off += 8)
            comp->values[i] = take<double>(buf, off);

    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double n = std::sqrt(f.u1.values[i] * f.u1.values[i] +
                                   f.u2.values[i] * f.u2.values[i] +
                                   f.u3.values[i] * f.u3.values[i]);
        worst = std::max(worst, std::fabs(n - 1.0));
    }
    if (worst > 1e-3)
        throw std::runtime_error(path + ": unit-norm violation " + std::to_string(worst));
    if (renorm_warning) *renorm_warning = worst > 1e-8;
    if (worst > 0.0) renormalize(f);
    return f;
}

std::string fmt17(double v) {
    char raw[64];
    std::snprintf(raw, sizeof raw, "%.17g", v);
    return raw;
}

namespace {

nlohmann::json gap_json(const InequalityGap& g) {
    return {{"lhs", g.lhs}, {"rhs", g.rhs}, {"gap", g.gap()}, {"applicable", g.applicable}};
}

nlohmann::json sides_json(const IdentitySides& s) {
    return {{"lhs", s.lhs}, {"rhs", s.rhs}, {"residual", s.residual()}};
}

double json_safe(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

std::string report_to_json(const DiagnosticsReport& rep, const Grid& grid, double wall_seconds) {
    nlohmann::json j;
    j["metadata"] = {{"c", rep.c},
                     {"grid", {{"nx", grid.n[0]},
                               {"ny", grid.n[1]},
                               {"lx", grid.length[0]},
                               {"ly", grid.length[1]}}},
                     {"tool_version", kToolVersion},
                     {"wall_seconds", wall_seconds}};
    j["energy"] = rep.energy;
    j["momentum_lifted"] = json_safe(rep.momentum_lifted);
    j["momentum_density"] = json_safe(rep.momentum_density);
    j["u3_linf"] = rep.u3_linf;
    j["u3_l2"] = rep.u3_l2;
    j["u3_l4"] = rep.u3_l4;
    j["pohozaev"] = {{"poh2", rep.pohozaev.poh2}, {"poh3", json_safe(rep.pohozaev.poh3)}};
    j["identities"] = {{"i1", sides_json(rep.identities.i1)},
                       {"i2", sides_json(rep.identities.i2)},
                       {"i2b", sides_json(rep.identities.i2b)},
                       {"i3", sides_json(rep.identities.i3)}};
    j["inequalities"] = {{"delta", rep.inequalities.delta},
                         {"chiron54", gap_json(rep.inequalities.chiron54)},
                         {"energy_l4", gap_json(rep.inequalities.energy_l4)},
                         {"phi94", gap_json(rep.inequalities.phi94)},
                         {"rho6", gap_json(rep.inequalities.rho6)},
                         {"l2_bound", gap_json(rep.inequalities.l2_bound)},
                         {"polar_pointwise_max", rep.inequalities.polar_pointwise_max}};
    j["residual_pde"] = rep.residual_pde;
    j["tolerance"] = rep.tolerance;
    j["lifted"] = rep.lifted;
    return j.dump(2) + "\n";
}

void write_report(const DiagnosticsReport& rep, const Grid& grid, double wall_seconds,
                  const std::string& path) {
    atomic_write_text(path, report_to_json(rep, grid, wall_seconds));
}

}  // namespace llfw
