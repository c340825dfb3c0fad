#include "ringmap/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringmap/defaults.hpp"
#include "ringmap/error.hpp"

namespace ringmap {

using nlohmann::json;

namespace {

json parse(std::string_view text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    fail(ErrorCode::bad_config, std::string("malformed JSON in ") + what);
  return doc;
}

double number_at(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc[key].is_number())
    fail(ErrorCode::bad_config, std::string(what) + ": missing numeric field '" + key + "'");
  return doc[key].get<double>();
}

Complex complex_at(const json& value, const char* what) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
    fail(ErrorCode::bad_config, std::string(what) + ": expected [re, im]");
  return Complex(value[0].get<double>(), value[1].get<double>());
}

json complex_to(const Complex& c) { return json::array({c.real(), c.imag()}); }

json band_to(std::span<const Complex> band, int modes, bool skip_zero) {
  json arr = json::array();
  for (int k = -modes; k <= modes; ++k) {
    if (skip_zero && k == 0) continue;
    const Complex c = band[static_cast<size_t>(k + modes)];
    arr.push_back(json::array({k, c.real(), c.imag()}));
  }
  return arr;
}

int band_width(const json& arr, const char* what) {
  if (!arr.is_array()) fail(ErrorCode::bad_config, std::string(what) + ": expected an array");
  int max_mode = 0;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number() || !item[2].is_number())
      fail(ErrorCode::bad_config, std::string(what) + ": entries must be [k, re, im]");
    max_mode = std::max(max_mode, std::abs(item[0].get<int>()));
  }
  return max_mode;
}

std::vector<Complex> band_from(const json& arr, int modes) {
  std::vector<Complex> band(static_cast<size_t>(2 * modes + 1), Complex(0.0, 0.0));
  for (const auto& item : arr) {
    const int k = item[0].get<int>();
    band[static_cast<size_t>(k + modes)] = Complex(item[1].get<double>(), item[2].get<double>());
  }
  return band;
}

} // namespace

std::string curve_to_json(const JordanCurve& curve, int indent) {
  json doc;
  doc["modes"] = band_to(curve.coeffs(), curve.max_mode(), false);
  return doc.dump(indent) + "\n";
}

JordanCurve curve_from_json(std::string_view text) {
  const json doc = parse(text, "curve descriptor");
  if (!doc.contains("modes"))
    fail(ErrorCode::bad_config, "curve descriptor: missing 'modes'");
  const int modes = std::max(1, band_width(doc["modes"], "curve descriptor"));
  return JordanCurve::from_modes(band_from(doc["modes"], modes));
}

std::string map_to_json(const HarmonicMap& map, int indent) {
  json doc;
  doc["rho"] = map.rho();
  doc["a0"] = complex_to(map.a0());
  doc["b0"] = complex_to(map.b0());
  doc["a"] = band_to(map.a_band(), map.modes(), true);
  doc["b"] = band_to(map.b_band(), map.modes(), true);
  return doc.dump(indent) + "\n";
}

HarmonicMap map_from_json(std::string_view text) {
  json doc = parse(text, "harmonic map");
  // Accept a minimize-result envelope as well as a bare map document.
  if (doc.contains("result") && doc["result"].contains("map")) doc = doc["result"]["map"];
  else if (doc.contains("map")) doc = doc["map"];

  const double rho = number_at(doc, "rho", "harmonic map");
  if (!(rho > 0.0) || !(rho < 1.0))
    fail(ErrorCode::bad_config, "harmonic map: rho must lie in (0, 1)");
  if (!doc.contains("a0") || !doc.contains("b0") || !doc.contains("a") || !doc.contains("b"))
    fail(ErrorCode::bad_config, "harmonic map: missing one of a0/b0/a/b");
  const Complex a0 = complex_at(doc["a0"], "harmonic map a0");
  const Complex b0 = complex_at(doc["b0"], "harmonic map b0");
  const int modes = std::max({1, band_width(doc["a"], "harmonic map a"),
                              band_width(doc["b"], "harmonic map b")});
  std::vector<Complex> a = band_from(doc["a"], modes);
  std::vector<Complex> b = band_from(doc["b"], modes);
  return HarmonicMap(AnnulusSource(rho), a0, b0, std::move(a), std::move(b));
}

std::string reparam_to_json(const BoundaryReparam& reparam, int indent) {
  json doc;
  doc["psi"] = reparam.psi;
  doc["offset"] = reparam.offset;
  return doc.dump(indent) + "\n";
}

BoundaryReparam reparam_from_json(std::string_view text) {
  const json doc = parse(text, "reparam");
  BoundaryReparam rep;
  if (!doc.contains("psi") || !doc["psi"].is_array())
    fail(ErrorCode::bad_config, "reparam: missing 'psi' array");
  for (const auto& v : doc["psi"]) {
    if (!v.is_number()) fail(ErrorCode::bad_config, "reparam: psi entries must be numbers");
    rep.psi.push_back(v.get<double>());
  }
  if (rep.psi.empty() || rep.psi.size() % 2 == 0)
    fail(ErrorCode::bad_config, "reparam: psi must have odd size 2M+1");
  rep.offset = doc.contains("offset") ? number_at(doc, "offset", "reparam") : 0.0;
  return rep;
}

std::string problem_to_json(const ProblemConfig& config, int indent) {
  const MinimizationProblem& p = config.problem;
  json doc;
  doc["rho"] = p.source.rho;
  doc["outer"] = json::parse(curve_to_json(p.outer_curve, 0));
  doc["inner"] = json::parse(curve_to_json(p.inner_curve, 0));
  doc["num_modes"] = p.num_modes;
  doc["reparam_degree"] = p.reparam_degree;
  doc["tol"] = p.settings.tol;
  doc["max_iter"] = p.settings.max_iter;
  doc["fd_step"] = p.settings.fd_step;
  doc["outer_offset"] = p.settings.outer_offset;
  doc["multistart"] = p.settings.multistart;
  doc["seed"] = p.settings.seed;
  if (!config.label.empty()) doc["label"] = config.label;
  if (config.swap_boundaries) doc["swap_boundaries"] = true;
  return doc.dump(indent) + "\n";
}

ProblemConfig problem_from_json(std::string_view text) {
  const json doc = parse(text, "problem config");

  static const char* known_keys[] = {"rho",     "outer",          "inner",      "num_modes",
                                     "reparam_degree", "tol",     "max_iter",   "fd_step",
                                     "outer_offset",   "multistart", "seed",    "label",
                                     "swap_boundaries"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const char* key : known_keys) known = known || it.key() == key;
    if (!known) fail(ErrorCode::bad_config, "problem config: unknown key '" + it.key() + "'");
  }

  const double rho = number_at(doc, "rho", "problem config");
  if (!(rho > 0.0) || !(rho < 1.0))
    fail(ErrorCode::bad_config, "problem config: rho must lie in (0, 1)");
  if (!doc.contains("outer") || !doc.contains("inner"))
    fail(ErrorCode::bad_config, "problem config: missing 'outer' or 'inner' curve");

  ProblemConfig config{
      .problem = MinimizationProblem{.source = AnnulusSource(rho),
                                     .outer_curve = curve_from_json(doc["outer"].dump()),
                                     .inner_curve = curve_from_json(doc["inner"].dump())}};

  MinimizationProblem& p = config.problem;
  auto int_or = [&](const char* key, int fallback, int lo, int hi) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number_integer())
      fail(ErrorCode::bad_config, std::string("problem config: '") + key + "' must be an integer");
    const int v = doc[key].get<int>();
    if (v < lo || v > hi)
      fail(ErrorCode::bad_config, std::string("problem config: '") + key + "' out of range");
    return v;
  };
  auto num_or = [&](const char* key, double fallback, double lo, double hi) {
    if (!doc.contains(key)) return fallback;
    const double v = number_at(doc, key, "problem config");
    if (!(v >= lo) || !(v <= hi))
      fail(ErrorCode::bad_config, std::string("problem config: '") + key + "' out of range");
    return v;
  };

  p.num_modes = int_or("num_modes", defaults::num_modes, 1, 4096);
  p.reparam_degree = int_or("reparam_degree", defaults::reparam_degree, 0, 256);
  p.settings.tol = num_or("tol", defaults::minimize_tol, 0.0, 1.0);
  p.settings.max_iter = int_or("max_iter", defaults::minimize_max_iter, 1, 1000000);
  p.settings.fd_step = num_or("fd_step", defaults::fd_step, 1e-12, 1e-1);
  p.settings.outer_offset = num_or("outer_offset", 0.0, -1e9, 1e9);
  p.settings.multistart = int_or("multistart", 0, 0, 1024);
  p.settings.seed = static_cast<unsigned>(int_or("seed", 12345, 0, 2147483647));
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      fail(ErrorCode::bad_config, "problem config: 'label' must be a string");
    config.label = doc["label"].get<std::string>();
  }
  if (doc.contains("swap_boundaries")) {
    if (!doc["swap_boundaries"].is_boolean())
      fail(ErrorCode::bad_config, "problem config: 'swap_boundaries' must be a boolean");
    config.swap_boundaries = doc["swap_boundaries"].get<bool>();
  }
  return config;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_failure, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof())
    fail(ErrorCode::io_failure, "failed reading '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io_failure, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) fail(ErrorCode::io_failure, "failed writing '" + path.string() + "'");
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char ch : bytes) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

} // namespace ringmap
