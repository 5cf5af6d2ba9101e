#pragma once

#include <string>

#include "llfw/diagnostics.hpp"
#include "llfw/field.hpp"

namespace llfw {

inline constexpr const char* kToolVersion = "0.1.0";

/// LLFW field container, version 1, little-endian:
///   "LLFW" | u32 version | u32 dim | u64 nx, ny | f64 Lx, Ly | f64 c |
///   u1, u2, u3 arrays of nx*ny f64, index = iy*nx + ix.
/// Reading renormalizes unit-norm drift up to 1e-3 (warning beyond 1e-8)
/// and rejects anything larger.
Field read_field(const std::string& path, bool* renorm_warning = nullptr);

/// Atomic write: temp file in place, then rename.
void write_field(const Field& f, const std::string& path);

/// Shortest-round-trip decimal for CSV cells (17 significant digits).
std::string fmt17(double v);

void atomic_write_text(const std::string& path, const std::string& content);

/// JSON-shaped diagnostics report with {c, grid, tool version, wall time}
/// metadata.
std::string report_to_json(const DiagnosticsReport& rep, const Grid& grid, double wall_seconds);

void write_report(const DiagnosticsReport& rep, const Grid& grid, double wall_seconds,
                  const std::string& path);

}  // namespace llfw
