#include "telemelody/config_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "telemelody/errors.hpp"

namespace telemelody {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::array<double, 12> parse_profile(const std::string& value,
                                     const std::string& key) {
  const auto parts = split_commas(value);
  if (parts.size() != 12)
    throw Error(key + " needs exactly 12 comma-separated weights");
  std::array<double, 12> out;
  for (std::size_t i = 0; i < 12; ++i) out[i] = std::stod(parts[i]);
  return out;
}

}  // namespace

ExtractConfig load_extract_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config: " + path);

  ExtractConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) +
                  " is not key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "major_profile")
      cfg.key_profiles.major_profile = parse_profile(value, key);
    else if (key == "minor_profile")
      cfg.key_profiles.minor_profile = parse_profile(value, key);
    else if (key == "candidate_chords") {
      if (value == "all84") {
        cfg.chord_hmm.candidate_chords = chord_vocabulary();
      } else {
        cfg.chord_hmm.candidate_chords.clear();
        for (const std::string& name : split_commas(value))
          cfg.chord_hmm.candidate_chords.push_back(parse_chord_name(name));
      }
    } else if (key == "segment_len")
      cfg.chord_hmm.segment_len = std::stoi(value);
    else if (key == "chord_tone_weight")
      cfg.chord_hmm.chord_tone_weight = std::stod(value);
    else if (key == "non_chord_penalty")
      cfg.chord_hmm.non_chord_penalty = std::stod(value);
    else if (key == "switch_penalty")
      cfg.chord_hmm.switch_penalty = std::stod(value);
    else if (key == "p_auth")
      cfg.cadence.p_auth = std::stod(value);
    else if (key == "short_dur")
      cfg.cadence.short_dur = std::stoi(value);
    else if (key == "small_interval")
      cfg.cadence.small_interval = std::stoi(value);
    else if (key == "large_interval")
      cfg.cadence.large_interval = std::stoi(value);
    else
      throw Error("unknown config key: " + key);
  }
  return cfg;
}

std::string extract_config_text(const ExtractConfig& cfg) {
  std::ostringstream out;
  auto join_profile = [](const std::array<double, 12>& p) {
    std::ostringstream s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s << ",";
      s << p[i];
    }
    return s.str();
  };
  out << "major_profile = " << join_profile(cfg.key_profiles.major_profile)
      << "\n";
  out << "minor_profile = " << join_profile(cfg.key_profiles.minor_profile)
      << "\n";
  out << "candidate_chords = ";
  for (std::size_t i = 0; i < cfg.chord_hmm.candidate_chords.size(); ++i) {
    if (i) out << ",";
    out << chord_token(cfg.chord_hmm.candidate_chords[i]);
  }
  out << "\n";
  out << "segment_len = " << cfg.chord_hmm.segment_len << "\n";
  out << "chord_tone_weight = " << cfg.chord_hmm.chord_tone_weight << "\n";
  out << "non_chord_penalty = " << cfg.chord_hmm.non_chord_penalty << "\n";
  out << "switch_penalty = " << cfg.chord_hmm.switch_penalty << "\n";
  out << "p_auth = " << cfg.cadence.p_auth << "\n";
  out << "short_dur = " << cfg.cadence.short_dur << "\n";
  out << "small_interval = " << cfg.cadence.small_interval << "\n";
  out << "large_interval = " << cfg.cadence.large_interval << "\n";
  return out.str();
}

}  // namespace telemelody
