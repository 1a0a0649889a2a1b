#include "telemelody/tonality.hpp"

#include <cmath>

#include "telemelody/errors.hpp"

namespace telemelody {

std::array<double, 12> pitch_class_histogram(const Melody& m) {
  std::array<double, 12> hist{};
  for (const Note& n : m.notes) hist[n.pitch % 12] += n.dur;
  return hist;
}

namespace {

double pearson(const std::array<double, 12>& x,
               const std::array<double, 12>& y) {
  double mx = 0, my = 0;
  for (int i = 0; i < 12; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= 12;
  my /= 12;
  double num = 0, dx = 0, dy = 0;
  for (int i = 0; i < 12; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    dx += (x[i] - mx) * (x[i] - mx);
    dy += (y[i] - my) * (y[i] - my);
  }
  if (dx == 0 || dy == 0) return 0.0;
  return num / std::sqrt(dx * dy);
}

}  // namespace

double key_candidate_score(const std::array<double, 12>& histogram,
                           const Key& candidate, const KeyProfileConfig& cfg) {
  const auto& profile = candidate.mode == Mode::Major ? cfg.major_profile
                                                      : cfg.minor_profile;
  std::array<double, 12> rotated;
  for (int pc = 0; pc < 12; ++pc)
    rotated[pc] = profile[((pc - candidate.root) % 12 + 12) % 12];
  return pearson(rotated, histogram);
}

Key infer_tonality(const Melody& m, const KeyProfileConfig& cfg) {
  if (m.empty()) throw EmptyMelody("cannot infer tonality of empty melody");
  const auto hist = pitch_class_histogram(m);

  Key best = kCMajor;
  double best_score = -2.0;
  // Major candidates before minor, low roots first: a strict comparison
  // keeps the first maximum, which encodes the tie preference.
  for (Mode mode : {Mode::Major, Mode::Minor}) {
    for (int root = 0; root < 12; ++root) {
      const Key key{root, mode};
      const double score = key_candidate_score(hist, key, cfg);
      if (score > best_score) {
        best_score = score;
        best = key;
      }
    }
  }
  return best;
}

}  // namespace telemelody
