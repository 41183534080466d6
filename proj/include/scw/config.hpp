#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "scw/detection.hpp"
#include "scw/keyrate.hpp"
#include "scw/states.hpp"

namespace scw {

enum class SweepVariable { LossDb, LengthKm };

struct SweepSpec {
  SweepVariable variable = SweepVariable::LossDb;
  double start = 0.0;
  double stop = 40.0;
  int steps = 81;

  void validate() const;
  bool operator==(const SweepSpec&) const = default;
};

// `Both` makes the key-rate sweep emit one K column per protocol; commands
// that need a single protocol fall back to BB84-OSD.
enum class ProtocolSelection { B92, BB84_OSD, Both };

Protocol single_protocol(ProtocolSelection sel);

// Everything a CLI run needs. Plain-text config: sections of key = value
// pairs (see serialize_config for the canonical layout). Angles are entered
// in degrees and Bob losses in dB; the in-memory form is radians and
// transmittance.
struct RunConfig {
  SystemParams system;
  std::string detector_name = "snspd";  // "snspd", "apd" or "custom"
  DetectorModel detector = snspd_detector();
  ProtocolSelection protocol = ProtocolSelection::Both;
  ECModel ec;
  SweepSpec sweep;
  std::uint64_t seed = 1;
  std::uint64_t n_windows = 1'000'000;
  std::string output;  // empty = stdout

  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

RunConfig default_config();

RunConfig parse_config(std::istream& in);
RunConfig parse_config_string(const std::string& text);
RunConfig load_config_file(const std::string& path);

std::string serialize_config(const RunConfig& cfg);

// Semantic equality: exact on enums/integers/strings, relative 1e-12 on
// floating-point fields (unit conversions in the text form round).
bool equivalent(const RunConfig& a, const RunConfig& b);

}  // namespace scw
