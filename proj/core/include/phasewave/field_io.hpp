#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "phasewave/evolution.hpp"
#include "phasewave/oscillator.hpp"

namespace phasewave {

enum class FileFormat { csv, json };

FileFormat parse_format(std::string_view name);
std::string_view format_name(FileFormat format);

// Parameter block written alongside every exported field. A stationary field
// is described with amplitude 0.
struct FieldMetadata {
  int n = 0;
  int ell = 0;
  double amplitude = 0.0;
  double c = 1.0;
  OscillatorParams params;
  double t = 0.0;
};

// Evaluates w at every node (rho_i, phi_j), mapped back to (x, p) with
// from_polar. Throws DataError naming the node if a value is not finite.
Field2D sample_field(const PhaseField& w, const OscillatorParams& params,
                     const GridSpec& grid, double t);

// Shortest text that is guaranteed to round-trip: 17 significant digits.
std::string format_double(double v);

// CSV: '#'-prefixed key=value parameter lines, then the header
// `rho,phi,x,p,W` and one row per node, rho-major. JSON: an object with
// "parameters", "grid", "rho", "phi" and "values" (one array per ring).
void write_field(std::ostream& out, const Field2D& field, const FieldMetadata& meta,
                 FileFormat format);

// Writes to path, throwing IoError naming the path on failure.
void export_field(const Field2D& field, const FieldMetadata& meta, FileFormat format,
                  const std::filesystem::path& path);

struct ImportedField {
  Field2D field;
  FieldMetadata meta;
};

ImportedField read_field(std::istream& in, FileFormat format);
// Format chosen from the extension (.json, anything else is CSV).
ImportedField import_field(const std::filesystem::path& path);

}  // namespace phasewave
