#include "tct/experiments/config.hpp"

#include "tct/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace tct {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct KeySpec {
  const char* key;
  const char* default_value;
  const char* doc;
};

// clang-format off
const std::vector<KeySpec> kCommonKeys = {
  {"channel", "phase-damping", "channel name: phase-damping | amplitude-damping | depolarizing | identity"},
  {"channel.p", "0.5", "damping/depolarizing strength"},
  {"channel.gamma", "0.5", "amplitude damping rate"},
  {"state", "maximally-mixed", "input state: maximally-mixed | thermal | matrix"},
  {"state.beta", "1.0", "inverse temperature for thermal states"},
  {"state.hamiltonian", "sigma_z", "thermal Hamiltonian: sigma_z | sigma_x | matrix spec"},
  {"state.matrix", "", "explicit density matrix, rows ';'-separated"},
  {"mode", "two-pointer", "estimation mode: two-pointer | single-pointer | exact"},
  {"epsilon2", "4/9", "squared coupling strength"},
  {"trials", "2500", "weak-measurement trials per correlation"},
  {"mean_trials", "0", "projective trials per mean (0 = same as trials)"},
  {"correct_systematic", "false", "subtract the known eps^4 systematic bias"},
  {"seed", "1", "master seed"},
  {"threads", "0", "worker threads (0 = hardware)"},
};

const std::map<std::string, std::vector<KeySpec>> kVerbKeys = {
  {"estimate", {}},
  {"fig1", {
    {"checkpoints", "25,50,100,200,400,800,1600,3200,6400,10000", "running-estimate checkpoints (trials per correlation)"},
  }},
  {"fig2", {
    {"trials_list", "400,3000", "trials-per-correlation panels"},
    {"repetitions", "1000", "independent simulations per panel"},
    {"epsilon2", "0.59", "squared coupling strength (calibrated default for the histogram panels)"},
  }},
  {"fig3", {
    {"couplings", "2/9,4/9,6/9", "squared couplings to sweep"},
    {"checkpoints", "25,50,100,200,400,800,1600,3200,6400,12800,25600,51200,100000", "trials checkpoints"},
    {"repetitions", "20", "seeds averaged per checkpoint"},
  }},
  {"compare-standard", {
    {"delta", "0.1", "target per-entry error"},
    {"delta_list", "0.1,0.0707106781,0.05", "sweep for the scaling regression"},
    {"f_abs", "1/12", "systematic-bias bound used by the budget formulas (Pauli: (1/3)||B||^4)"},
    {"epsilon2", "6/9", "coupling for the empirical temporal validation run"},
    {"repetitions", "200", "seeds per empirical point"},
    {"validation_seeds", "31", "seeds for the temporal validation column"},
  }},
  {"gaussian-demo", {
    {"modes", "1", "number of modes"},
    {"gchannel", "random", "gaussian channel: random | rotation | squeeze | lossy"},
    {"gchannel.theta", "0.785398163397448", "rotation angle"},
    {"gchannel.r", "0.5", "squeeze parameter"},
    {"gchannel.eta", "0.7", "loss transmissivity"},
    {"gchannel.nbar", "0.5", "loss environment occupation"},
    {"gchannel.noise", "0.1", "added-noise scale for random channels"},
    {"gstate", "thermal", "input state: vacuum | thermal | squeezed"},
    {"gstate.nbar", "1.0", "thermal occupation"},
    {"gstate.r", "0.5", "state squeeze parameter"},
    {"trials_list", "1000,10000,100000,1000000", "moment-noise sweep (N per moment)"},
    {"repetitions", "30", "noise realizations per N"},
  }},
};
// clang-format on

const std::vector<KeySpec>& verb_keys(const std::string& verb) {
  const auto it = kVerbKeys.find(verb);
  if (it == kVerbKeys.end()) throw_error(ErrorCode::Config, "unknown verb '" + verb + "'");
  return it->second;
}

std::map<std::string, std::string> default_map(const std::string& verb) {
  std::map<std::string, std::string> out;
  for (const auto& k : kCommonKeys) out[k.key] = k.default_value;
  for (const auto& k : verb_keys(verb)) out[k.key] = k.default_value; // verb overrides common
  return out;
}

} // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(t.substr(0, slash));
      const double den = std::stod(t.substr(slash + 1));
      if (den == 0) throw_error(ErrorCode::Config, "division by zero in '" + t + "'");
      return num / den;
    }
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw_error(ErrorCode::Config, "trailing characters in number '" + t + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw_error(ErrorCode::Config, "cannot parse number '" + t + "'");
  }
}

Matrix parse_complex_matrix(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::stringstream rowstream(text);
  std::string rowtext;
  while (std::getline(rowstream, rowtext, ';')) {
    std::vector<Complex> row;
    std::stringstream cell(rowtext);
    std::string entry;
    while (std::getline(cell, entry, ',')) {
      std::string t = trim(entry);
      if (t.empty()) throw_error(ErrorCode::Config, "empty matrix entry");
      double re = 0, im = 0;
      if (t.back() == 'i' || t.back() == 'j') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        std::size_t split = std::string::npos;
        for (std::size_t p = t.size(); p-- > 1;) {
          if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
            split = p;
            break;
          }
        }
        if (split == std::string::npos) {
          im = (t.empty() || t == "+") ? 1.0 : (t == "-") ? -1.0 : parse_number(t);
        } else {
          re = parse_number(t.substr(0, split));
          const std::string imtext = t.substr(split);
          im = (imtext == "+") ? 1.0 : (imtext == "-") ? -1.0 : parse_number(imtext);
        }
      } else {
        re = parse_number(t);
      }
      row.emplace_back(re, im);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw_error(ErrorCode::Config, "empty matrix");
  const std::size_t d = rows.size();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw_error(ErrorCode::Config, "matrix is not square");
    for (std::size_t j = 0; j < d; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

ExperimentConfig ExperimentConfig::parse(const std::string& verb, const std::string& text) {
  ExperimentConfig cfg;
  cfg.verb_ = verb;
  cfg.values_ = default_map(verb);
  std::stringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw_error(ErrorCode::Config, "line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (cfg.values_.find(key) == cfg.values_.end())
      throw_error(ErrorCode::Config, "unknown key '" + key + "' for verb '" + verb + "'");
    cfg.values_[key] = value;
  }
  // eager validation of the numeric fields every verb shares
  const double eps2 = cfg.get_double("epsilon2");
  if (!(eps2 > 0) || !(eps2 < 1))
    throw_error(ErrorCode::Config, "epsilon2 must be in (0, 1)");
  if (cfg.get_int("trials") < 1) throw_error(ErrorCode::Config, "trials must be >= 1");
  if (cfg.get_int("mean_trials") < 0) throw_error(ErrorCode::Config, "mean_trials must be >= 0");
  const std::string mode = cfg.get_string("mode");
  if (mode != "two-pointer" && mode != "single-pointer" && mode != "exact")
    throw_error(ErrorCode::Config, "mode must be two-pointer, single-pointer or exact");
  return cfg;
}

std::string ExperimentConfig::defaults_text(const std::string& verb) {
  std::string out;
  auto emit = [&](const KeySpec& k) {
    out += "# ";
    out += k.doc;
    out += "\n";
    out += k.key;
    out += "=";
    out += k.default_value;
    out += "\n";
  };
  const auto& specific = verb_keys(verb);
  for (const auto& k : kCommonKeys) {
    const bool overridden = std::any_of(specific.begin(), specific.end(), [&](const KeySpec& v) {
      return std::string(v.key) == k.key;
    });
    if (!overridden) emit(k);
  }
  for (const auto& k : specific) emit(k);
  return out;
}

const std::vector<std::string>& ExperimentConfig::known_verbs() {
  static const std::vector<std::string> verbs = {"estimate",         "fig1", "fig2", "fig3",
                                                 "compare-standard", "gaussian-demo"};
  return verbs;
}

std::string ExperimentConfig::canonical_text() const {
  std::string out = "verb=" + verb_ + "\n";
  for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
  return out;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : canonical_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool ExperimentConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string ExperimentConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw_error(ErrorCode::Config, "missing key '" + key + "'");
  return it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  return parse_number(get_string(key));
}

long long ExperimentConfig::get_int(const std::string& key) const {
  const double v = get_double(key);
  const long long i = static_cast<long long>(std::llround(v));
  if (std::abs(v - static_cast<double>(i)) > 1e-9)
    throw_error(ErrorCode::Config, "key '" + key + "' must be an integer");
  return i;
}

bool ExperimentConfig::get_bool(const std::string& key) const {
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw_error(ErrorCode::Config, "key '" + key + "' must be a boolean");
}

std::vector<double> ExperimentConfig::get_double_list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(get_string(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw_error(ErrorCode::Config, "key '" + key + "' must be a nonempty list");
  return out;
}

std::vector<long long> ExperimentConfig::get_int_list(const std::string& key) const {
  std::vector<long long> out;
  for (const double v : get_double_list(key)) {
    const long long i = static_cast<long long>(std::llround(v));
    if (std::abs(v - static_cast<double>(i)) > 1e-9)
      throw_error(ErrorCode::Config, "key '" + key + "' must be an integer list");
    out.push_back(i);
  }
  return out;
}

KrausChannel ExperimentConfig::channel() const {
  const std::string name = get_string("channel");
  try {
    if (name == "phase-damping") return KrausChannel::phase_damping(get_double("channel.p"));
    if (name == "amplitude-damping") return KrausChannel::amplitude_damping(get_double("channel.gamma"));
    if (name == "depolarizing") return KrausChannel::depolarizing(get_double("channel.p"));
    if (name == "identity") return KrausChannel::identity(2);
  } catch (const Error& e) {
    throw_error(ErrorCode::Config, std::string("invalid channel parameters: ") + e.what());
  }
  throw_error(ErrorCode::Config, "unknown channel '" + name + "'");
}

DensityState ExperimentConfig::state() const {
  const std::string name = get_string("state");
  try {
    if (name == "maximally-mixed") return DensityState::maximally_mixed(2);
    if (name == "thermal") {
      const std::string h = get_string("state.hamiltonian");
      Matrix hm;
      if (h == "sigma_z") {
        hm = Matrix::Identity(2, 2);
        hm(1, 1) = -1;
      } else if (h == "sigma_x") {
        hm = Matrix::Zero(2, 2);
        hm(0, 1) = hm(1, 0) = 1;
      } else {
        hm = parse_complex_matrix(h);
      }
      return DensityState::thermal(Operator::hermitian(std::move(hm)), get_double("state.beta"));
    }
    if (name == "matrix") {
      Matrix rho = parse_complex_matrix(get_string("state.matrix"));
      return DensityState(std::move(rho));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    throw_error(ErrorCode::Config, std::string("invalid state: ") + e.what());
  }
  throw_error(ErrorCode::Config, "unknown state '" + name + "'");
}

int ExperimentConfig::threads() const {
  const long long t = get_int("threads");
  if (t < 0) throw_error(ErrorCode::Config, "threads must be >= 0");
  if (t > 0) return static_cast<int>(t);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace tct
