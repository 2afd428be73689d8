#include "phasewave/field_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {

using nlohmann::json;

constexpr std::string_view kCsvHeader = "rho,phi,x,p,W";

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError("malformed number '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::pair<std::string, std::string>> metadata_entries(
    const Field2D& field, const FieldMetadata& meta) {
  const GridSpec& g = field.grid();
  return {
      {"n", std::to_string(meta.n)},
      {"ell", std::to_string(meta.ell)},
      {"A", format_double(meta.amplitude)},
      {"C", format_double(meta.c)},
      {"m", format_double(meta.params.m())},
      {"omega", format_double(meta.params.omega())},
      {"hbar", format_double(meta.params.hbar())},
      {"alpha", format_double(meta.params.alpha())},
      {"t", format_double(meta.t)},
      {"rho_max", format_double(g.rho_max)},
      {"n_rho", std::to_string(g.n_rho)},
      {"n_phi", std::to_string(g.n_phi)},
      {"dt", format_double(g.dt)},
  };
}

void write_csv(std::ostream& out, const Field2D& field, const FieldMetadata& meta) {
  out << "# phasewave field\n";
  for (const auto& [key, value] : metadata_entries(field, meta)) {
    out << "# " << key << '=' << value << '\n';
  }
  out << kCsvHeader << '\n';
  const GridSpec& g = field.grid();
  for (int i = 0; i < g.n_rho; ++i) {
    for (int j = 0; j < g.n_phi; ++j) {
      const PhasePoint pt = from_polar(meta.params, {g.rho(i), g.phi(j)});
      out << format_double(g.rho(i)) << ',' << format_double(g.phi(j)) << ','
          << format_double(pt.x) << ',' << format_double(pt.p) << ','
          << format_double(field.at(i, j)) << '\n';
    }
  }
}

void write_json(std::ostream& out, const Field2D& field, const FieldMetadata& meta) {
  const GridSpec& g = field.grid();
  json doc;
  doc["format"] = "phasewave-field";
  doc["version"] = 1;
  doc["parameters"] = {{"n", meta.n},
                       {"ell", meta.ell},
                       {"A", meta.amplitude},
                       {"C", meta.c},
                       {"m", meta.params.m()},
                       {"omega", meta.params.omega()},
                       {"hbar", meta.params.hbar()},
                       {"alpha", meta.params.alpha()},
                       {"t", meta.t}};
  doc["grid"] = {{"rho_max", g.rho_max}, {"n_rho", g.n_rho}, {"n_phi", g.n_phi}, {"dt", g.dt}};
  json rho = json::array();
  for (int i = 0; i < g.n_rho; ++i) rho.push_back(g.rho(i));
  json phi = json::array();
  for (int j = 0; j < g.n_phi; ++j) phi.push_back(g.phi(j));
  json values = json::array();
  for (int i = 0; i < g.n_rho; ++i) {
    const auto ring = field.ring(i);
    values.push_back(json(std::vector<double>(ring.begin(), ring.end())));
  }
  doc["rho"] = std::move(rho);
  doc["phi"] = std::move(phi);
  doc["values"] = std::move(values);
  out << doc.dump(1) << '\n';
}

FieldMetadata metadata_from(const std::map<std::string, std::string>& kv, GridSpec& grid) {
  const auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw DataError("field file is missing parameter '" + key + "'");
    return it->second;
  };
  FieldMetadata meta;
  meta.n = parse_int(get("n"));
  meta.ell = parse_int(get("ell"));
  meta.amplitude = parse_double(get("A"));
  meta.c = parse_double(get("C"));
  meta.params = OscillatorParams(parse_double(get("m")), parse_double(get("omega")),
                                 parse_double(get("hbar")), parse_double(get("alpha")));
  meta.t = parse_double(get("t"));
  grid.rho_max = parse_double(get("rho_max"));
  grid.n_rho = parse_int(get("n_rho"));
  grid.n_phi = parse_int(get("n_phi"));
  grid.dt = parse_double(get("dt"));
  grid.validate();
  return meta;
}

ImportedField read_csv(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  bool header_seen = false;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.starts_with('#')) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) {
          const auto key_start = line.find_first_not_of("# ");
          kv[line.substr(key_start, eq - key_start)] = line.substr(eq + 1);
        }
        continue;
      }
      if (line != kCsvHeader) throw DataError("unexpected CSV header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto last = line.rfind(',');
    if (last == std::string::npos) throw DataError("malformed CSV row '" + line + "'");
    values.push_back(parse_double(std::string_view(line).substr(last + 1)));
  }
  if (!header_seen) throw DataError("CSV field has no header");
  GridSpec grid;
  FieldMetadata meta = metadata_from(kv, grid);
  return {Field2D(grid, std::move(values), meta.t), meta};
}

ImportedField read_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
    std::map<std::string, std::string> kv;
    for (const auto& [key, value] : doc.at("parameters").items()) {
      kv[key] = value.is_number_integer() ? std::to_string(value.get<long long>())
                                          : format_double(value.get<double>());
    }
    for (const auto& [key, value] : doc.at("grid").items()) {
      kv[key] = value.is_number_integer() ? std::to_string(value.get<long long>())
                                          : format_double(value.get<double>());
    }
    GridSpec grid;
    FieldMetadata meta = metadata_from(kv, grid);
    std::vector<double> values;
    values.reserve(grid.size());
    for (const auto& ring : doc.at("values")) {
      for (const auto& v : ring) values.push_back(v.get<double>());
    }
    return {Field2D(grid, std::move(values), meta.t), meta};
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed JSON field: ") + e.what());
  }
}

}  // namespace

FileFormat parse_format(std::string_view name) {
  if (name == "csv") return FileFormat::csv;
  if (name == "json") return FileFormat::json;
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(FileFormat format) {
  return format == FileFormat::csv ? "csv" : "json";
}

Field2D sample_field(const PhaseField& w, const OscillatorParams& params,
                     const GridSpec& grid, double t) {
  Field2D field(grid, t);
  for (int i = 0; i < grid.n_rho; ++i) {
    auto ring = field.ring(i);
    for (int j = 0; j < grid.n_phi; ++j) {
      const double value = w(from_polar(params, {grid.rho(i), grid.phi(j)}), t);
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite field value at node (" << i << ", " << j
            << "), rho=" << format_double(grid.rho(i))
            << " phi=" << format_double(grid.phi(j));
        throw DataError(msg.str());
      }
      ring[j] = value;
    }
  }
  return field;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(std::begin(buf), std::end(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw DataError("cannot format number");
  return std::string(buf, ptr);
}

void write_field(std::ostream& out, const Field2D& field, const FieldMetadata& meta,
                 FileFormat format) {
  if (format == FileFormat::csv) {
    write_csv(out, field, meta);
  } else {
    write_json(out, field, meta);
  }
}

void export_field(const Field2D& field, const FieldMetadata& meta, FileFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  write_field(out, field, meta, format);
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

ImportedField read_field(std::istream& in, FileFormat format) {
  return format == FileFormat::csv ? read_csv(in) : read_json(in);
}

ImportedField import_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  const FileFormat format =
      path.extension() == ".json" ? FileFormat::json : FileFormat::csv;
  return read_field(in, format);
}

}  // namespace phasewave
