#include "scw/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace scw {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + v + "'");
  }
  if (used != v.size()) fail(line, "trailing characters in number '" + v + "'");
  return x;
}

std::uint64_t parse_u64(const std::string& v, int line) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    fail(line, "expected a non-negative integer, got '" + v + "'");
  }
  if (used != v.size()) fail(line, "trailing characters in integer '" + v + "'");
  return x;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool near(double a, double b) {
  if (a == b) return true;
  return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

void SweepSpec::validate() const {
  if (!(start < stop)) throw std::invalid_argument("sweep: start must be < stop");
  if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(start >= 0.0)) throw std::invalid_argument("sweep: start must be >= 0");
}

Protocol single_protocol(ProtocolSelection sel) {
  return sel == ProtocolSelection::B92 ? Protocol::B92 : Protocol::BB84_OSD;
}

void RunConfig::validate() const {
  system.validate();
  detector.validate(system.T);
  sweep.validate();
  if (!(ec.f_EC >= 1.0)) throw std::invalid_argument("ec: f_EC must be >= 1");
  if (n_windows < 1) throw std::invalid_argument("run: n_windows must be >= 1");
  if (sweep.variable == SweepVariable::LossDb && !(system.xi > 0.0))
    throw std::invalid_argument("sweep over loss_dB needs xi > 0");
}

RunConfig default_config() { return RunConfig{}; }

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  bool custom_detector = false;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header");
      section = lower(trim(s.substr(1, s.size() - 2)));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty()) fail(line, "expected 'key = value'");

    if (section == "system") {
      if (key == "mu0") cfg.system.mu0 = parse_double(val, line);
      else if (key == "m") cfg.system.m = parse_double(val, line);
      else if (key == "s") {
        const auto sv = parse_u64(val, line);
        if (sv < 1 || sv > 1'000'000) fail(line, "S out of range");
        cfg.system.S = wigner::SidebandCount{static_cast<int>(sv)};
      } else if (key == "t") cfg.system.T = parse_double(val, line);
      else if (key == "nu_s") cfg.system.nu_S = parse_double(val, line);
      else if (key == "delta_phi_deg")
        cfg.system.delta_phi = parse_double(val, line) / kDegPerRad;
      else if (key == "eta_b_db")
        cfg.system.eta_B = std::pow(10.0, -parse_double(val, line) / 10.0);
      else if (key == "vartheta") cfg.system.vartheta = parse_double(val, line);
      else if (key == "xi") cfg.system.xi = parse_double(val, line);
      else if (key == "theta1") cfg.system.theta1 = parse_double(val, line);
      else if (key == "theta3") cfg.system.theta3 = parse_double(val, line);
      else if (key == "phi0") cfg.system.phi0 = parse_double(val, line);
      else fail(line, "unknown key '" + key + "' in [system]");
    } else if (section == "detector") {
      if (key == "preset") {
        const std::string name = lower(val);
        if (name == "custom") {
          custom_detector = true;
          cfg.detector_name = "custom";
        } else if (auto d = detector_by_name(name)) {
          cfg.detector = *d;
          cfg.detector_name = name;
          custom_detector = false;
        } else {
          fail(line, "unknown detector preset '" + val + "'");
        }
      } else if (key == "eta_d") {
        cfg.detector.eta_D = parse_double(val, line);
        custom_detector = true;
      } else if (key == "gamma_dark") {
        cfg.detector.gamma_dark = parse_double(val, line);
        custom_detector = true;
      } else if (key == "gate") {
        const std::string g = lower(val);
        if (g == "continuous") cfg.detector.gate_dt.reset();
        else if (g != "gated") fail(line, "gate must be 'continuous' or 'gated'");
        custom_detector = true;
      } else if (key == "gate_dt") {
        cfg.detector.gate_dt = parse_double(val, line);
        custom_detector = true;
      } else {
        fail(line, "unknown key '" + key + "' in [detector]");
      }
      if (custom_detector) cfg.detector_name = "custom";
    } else if (section == "protocol") {
      if (key != "name") fail(line, "unknown key '" + key + "' in [protocol]");
      const std::string v = lower(val);
      if (v == "b92") cfg.protocol = ProtocolSelection::B92;
      else if (v == "bb84-osd") cfg.protocol = ProtocolSelection::BB84_OSD;
      else if (v == "both") cfg.protocol = ProtocolSelection::Both;
      else fail(line, "protocol must be b92, bb84-osd or both");
    } else if (section == "ec") {
      if (key != "f_ec") fail(line, "unknown key '" + key + "' in [ec]");
      cfg.ec.f_EC = parse_double(val, line);
    } else if (section == "sweep") {
      if (key == "variable") {
        const std::string v = lower(val);
        if (v == "loss_db") cfg.sweep.variable = SweepVariable::LossDb;
        else if (v == "l_km") cfg.sweep.variable = SweepVariable::LengthKm;
        else fail(line, "sweep variable must be loss_dB or L_km");
      } else if (key == "start") cfg.sweep.start = parse_double(val, line);
      else if (key == "stop") cfg.sweep.stop = parse_double(val, line);
      else if (key == "steps") {
        const auto n = parse_u64(val, line);
        if (n < 2 || n > 10'000'000) fail(line, "steps out of range");
        cfg.sweep.steps = static_cast<int>(n);
      } else fail(line, "unknown key '" + key + "' in [sweep]");
    } else if (section == "run") {
      if (key == "mode") {
        const std::string v = lower(val);
        if (v == "exact") cfg.system.mode = EvalMode::Exact;
        else if (v == "asymptotic") cfg.system.mode = EvalMode::Asymptotic;
        else fail(line, "mode must be exact or asymptotic");
      } else if (key == "seed") cfg.seed = parse_u64(val, line);
      else if (key == "n_windows") cfg.n_windows = parse_u64(val, line);
      else if (key == "out") cfg.output = val;
      else fail(line, "unknown key '" + key + "' in [run]");
    } else if (section.empty()) {
      fail(line, "key outside of any [section]");
    } else {
      fail(line, "unknown section [" + section + "]");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  const SystemParams& s = cfg.system;
  out << "[system]\n";
  out << "mu0 = " << fmt(s.mu0) << "\n";
  out << "m = " << fmt(s.m) << "\n";
  out << "S = " << s.S.value << "\n";
  out << "T = " << fmt(s.T) << "\n";
  out << "nu_S = " << fmt(s.nu_S) << "\n";
  out << "delta_phi_deg = " << fmt(s.delta_phi * kDegPerRad) << "\n";
  out << "eta_B_dB = " << fmt(-10.0 * std::log10(s.eta_B)) << "\n";
  out << "vartheta = " << fmt(s.vartheta) << "\n";
  out << "xi = " << fmt(s.xi) << "\n";
  out << "theta1 = " << fmt(s.theta1) << "\n";
  out << "theta3 = " << fmt(s.theta3) << "\n";
  out << "phi0 = " << fmt(s.phi0) << "\n";
  out << "\n[detector]\n";
  if (cfg.detector_name == "custom") {
    out << "preset = custom\n";
    out << "eta_D = " << fmt(cfg.detector.eta_D) << "\n";
    out << "gamma_dark = " << fmt(cfg.detector.gamma_dark) << "\n";
    if (cfg.detector.gate_dt) {
      out << "gate = gated\n";
      out << "gate_dt = " << fmt(*cfg.detector.gate_dt) << "\n";
    } else {
      out << "gate = continuous\n";
    }
  } else {
    out << "preset = " << cfg.detector_name << "\n";
  }
  out << "\n[protocol]\n";
  out << "name = "
      << (cfg.protocol == ProtocolSelection::B92
              ? "b92"
              : cfg.protocol == ProtocolSelection::BB84_OSD ? "bb84-osd" : "both")
      << "\n";
  out << "\n[ec]\n";
  out << "f_EC = " << fmt(cfg.ec.f_EC) << "\n";
  out << "\n[sweep]\n";
  out << "variable = "
      << (cfg.sweep.variable == SweepVariable::LossDb ? "loss_dB" : "L_km") << "\n";
  out << "start = " << fmt(cfg.sweep.start) << "\n";
  out << "stop = " << fmt(cfg.sweep.stop) << "\n";
  out << "steps = " << cfg.sweep.steps << "\n";
  out << "\n[run]\n";
  out << "mode = " << (s.mode == EvalMode::Exact ? "exact" : "asymptotic") << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "n_windows = " << cfg.n_windows << "\n";
  if (!cfg.output.empty()) out << "out = " << cfg.output << "\n";
  return out.str();
}

bool equivalent(const RunConfig& a, const RunConfig& b) {
  const SystemParams &x = a.system, &y = b.system;
  const bool det_eq =
      near(a.detector.eta_D, b.detector.eta_D) &&
      near(a.detector.gamma_dark, b.detector.gamma_dark) &&
      a.detector.gate_dt.has_value() == b.detector.gate_dt.has_value() &&
      (!a.detector.gate_dt || near(*a.detector.gate_dt, *b.detector.gate_dt));
  return near(x.mu0, y.mu0) && near(x.m, y.m) && x.S == y.S && near(x.T, y.T) &&
         near(x.nu_S, y.nu_S) && near(x.delta_phi, y.delta_phi) &&
         near(x.eta_B, y.eta_B) && near(x.vartheta, y.vartheta) && near(x.xi, y.xi) &&
         near(x.theta1, y.theta1) && near(x.theta3, y.theta3) && near(x.phi0, y.phi0) &&
         x.mode == y.mode && a.detector_name == b.detector_name && det_eq &&
         a.protocol == b.protocol && near(a.ec.f_EC, b.ec.f_EC) &&
         a.sweep.variable == b.sweep.variable && near(a.sweep.start, b.sweep.start) &&
         near(a.sweep.stop, b.sweep.stop) && a.sweep.steps == b.sweep.steps &&
         a.seed == b.seed && a.n_windows == b.n_windows && a.output == b.output;
}

}  // namespace scw
