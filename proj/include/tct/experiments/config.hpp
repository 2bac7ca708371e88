#pragma once

#include "tct/channel.hpp"
#include "tct/operators.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tct {

// Flat key=value configuration ('#' comments, blank lines ignored). Values
// may be plain numbers, fractions ("4/9"), comma lists, or small complex
// matrices ("1,0;0,1" with entries like "0.5+0.5i"). Unknown keys for a verb
// are a config error.
class ExperimentConfig {
public:
  static ExperimentConfig parse(const std::string& verb, const std::string& text);
  // Per-verb defaults as key=value text with one comment per key.
  static std::string defaults_text(const std::string& verb);
  static const std::vector<std::string>& known_verbs();

  const std::string& verb() const { return verb_; }
  // Canonical sorted key=value rendering of the effective configuration.
  std::string canonical_text() const;
  // FNV-1a 64 of the canonical text, hex encoded.
  std::string hash() const;

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  long long get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<long long> get_int_list(const std::string& key) const;

  // Assembled domain objects (estimate/fig verbs).
  KrausChannel channel() const;
  DensityState state() const;

  std::uint64_t seed() const { return static_cast<std::uint64_t>(get_int("seed")); }
  int threads() const;

private:
  std::string verb_;
  std::map<std::string, std::string> values_;
};

double parse_number(const std::string& text); // handles "a/b" fractions
Matrix parse_complex_matrix(const std::string& text);

} // namespace tct
