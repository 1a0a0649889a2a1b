#include "telemelody/chords.hpp"

#include <algorithm>
#include <map>

#include "telemelody/errors.hpp"

namespace telemelody {

const std::array<std::string, 12> kPitchClassNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

const std::string& quality_name(ChordQuality q) {
  static const std::array<std::string, kNumChordQualities> names = {
      "maj", "min", "dim", "aug", "maj7", "min7", "half_dim"};
  return names[static_cast<int>(q)];
}

const std::vector<int>& quality_intervals(ChordQuality q) {
  static const std::array<std::vector<int>, kNumChordQualities> intervals = {{
      {0, 4, 7},      // maj
      {0, 3, 7},      // min
      {0, 3, 6},      // dim
      {0, 4, 8},      // aug
      {0, 4, 7, 11},  // maj7
      {0, 3, 7, 10},  // min7
      {0, 3, 6, 10},  // half_dim
  }};
  return intervals[static_cast<int>(q)];
}

std::vector<int> chord_tones(const Chord& c) {
  std::vector<int> tones;
  for (int iv : quality_intervals(c.quality))
    tones.push_back((c.root + iv) % kNumPitchClasses);
  return tones;
}

bool is_chord_tone(const Chord& c, int pitch_class) {
  const int pc = ((pitch_class % 12) + 12) % 12;
  for (int iv : quality_intervals(c.quality))
    if ((c.root + iv) % 12 == pc) return true;
  return false;
}

std::string chord_token(const Chord& c) {
  return "Chord_" + kPitchClassNames[c.root] + "_" + quality_name(c.quality);
}

Chord parse_chord_token(const std::string& token) {
  for (const Chord& c : chord_vocabulary())
    if (chord_token(c) == token) return c;
  throw OutOfVocab("unknown chord token: " + token);
}

namespace {

int parse_root(const std::string& name, std::size_t& pos) {
  static const std::map<char, int> base = {{'C', 0}, {'D', 2}, {'E', 4},
                                           {'F', 5}, {'G', 7}, {'A', 9},
                                           {'B', 11}};
  if (name.empty()) throw OutOfVocab("empty chord name");
  auto it = base.find(name[0]);
  if (it == base.end()) throw OutOfVocab("bad chord root in: " + name);
  int root = it->second;
  pos = 1;
  if (pos < name.size() && (name[pos] == '#' || name[pos] == 'b')) {
    root += (name[pos] == '#') ? 1 : -1;
    ++pos;
  }
  return ((root % 12) + 12) % 12;
}

}  // namespace

Chord parse_chord_name(const std::string& name) {
  if (name.rfind("Chord_", 0) == 0) return parse_chord_token(name);
  std::size_t pos = 0;
  Chord c;
  c.root = parse_root(name, pos);
  const std::string suffix = name.substr(pos);
  static const std::map<std::string, ChordQuality> suffixes = {
      {"", ChordQuality::Maj},         {"maj", ChordQuality::Maj},
      {"m", ChordQuality::Min},        {"min", ChordQuality::Min},
      {"dim", ChordQuality::Dim},      {"aug", ChordQuality::Aug},
      {"maj7", ChordQuality::Maj7},    {"m7", ChordQuality::Min7},
      {"min7", ChordQuality::Min7},    {"m7b5", ChordQuality::HalfDim},
      {"half_dim", ChordQuality::HalfDim}};
  auto it = suffixes.find(suffix);
  if (it == suffixes.end())
    throw OutOfVocab("bad chord quality in: " + name);
  c.quality = it->second;
  return c;
}

const std::vector<Chord>& chord_vocabulary() {
  static const std::vector<Chord> vocab = [] {
    std::vector<Chord> v;
    for (int root = 0; root < kNumPitchClasses; ++root)
      for (int q = 0; q < kNumChordQualities; ++q)
        v.push_back({root, static_cast<ChordQuality>(q)});
    return v;
  }();
  return vocab;
}

const std::vector<Chord>& triad_candidates() {
  static const std::vector<Chord> triads = [] {
    std::vector<Chord> v;
    for (int root = 0; root < 12; ++root) v.push_back({root, ChordQuality::Maj});
    for (int root = 0; root < 12; ++root) v.push_back({root, ChordQuality::Min});
    return v;
  }();
  return triads;
}

}  // namespace telemelody
