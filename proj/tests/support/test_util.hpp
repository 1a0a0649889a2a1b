// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately re-derive results by brute force (path enumeration,
// direct correlation sums, finite differences) so they do not share code
// with the implementation they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "telemelody/align.hpp"
#include "telemelody/chord_infer.hpp"
#include "telemelody/note.hpp"
#include "telemelody/tonality.hpp"

namespace test_util {

using telemelody::AlignmentMatrix;
using telemelody::Chord;
using telemelody::ChordHmmConfig;
using telemelody::Key;
using telemelody::KeyProfileConfig;
using telemelody::Mat;
using telemelody::Melody;
using telemelody::Mode;
using telemelody::Note;

// ---------------------------------------------------------------------------
// melody builders

inline Melody melody_from(
    const std::vector<std::array<int, 4>>& rows) {
  Melody m;
  for (const auto& r : rows) m.notes.push_back({r[0], r[1], r[2], r[3]});
  return m;
}

/// Ascending one-octave scale plus the upper tonic, equal short durations.
inline Melody scale_melody(int root_pc, Mode mode, int base_octave = 5) {
  static const int maj_steps[] = {0, 2, 4, 5, 7, 9, 11, 12};
  static const int min_steps[] = {0, 2, 3, 5, 7, 8, 10, 12};
  const int* steps = mode == Mode::Major ? maj_steps : min_steps;
  Melody m;
  const int base = 12 * base_octave + root_pc;  // C5-based register
  for (int i = 0; i < 8; ++i) {
    Note n;
    const int onset = i * 2;
    n.bar = onset / 16;
    n.pos = onset % 16;
    n.pitch = base + steps[i];
    n.dur = 2;
    m.notes.push_back(n);
  }
  return m;
}

/// Random dense melody drawn from the C-major scale with a tonic-heavy
/// distribution: valid, no empty bars, n notes. Deterministic per seed.
inline Melody random_scale_melody(std::mt19937_64& rng, int n_notes = 60) {
  static const int scale[] = {0, 2, 4, 5, 7, 9, 11};
  Melody m;
  int onset = 0;
  for (int i = 0; i < n_notes; ++i) {
    const int gap = 2 + static_cast<int>(rng() % 3);  // 2..4 sixteenths
    const int dur = 1 + static_cast<int>(rng() % gap);
    int pc;
    const int roll = static_cast<int>(rng() % 10);
    if (roll < 3)
      pc = 0;  // tonic emphasis keeps the key inference on C
    else if (roll < 5)
      pc = 7;
    else
      pc = scale[rng() % 7];
    Note note;
    note.bar = onset / 16;
    note.pos = onset % 16;
    note.pitch = 60 + pc + (rng() % 2 ? 12 : 0);
    note.dur = std::min(dur, 16);
    m.notes.push_back(note);
    onset += gap;
  }
  return m;
}

// ---------------------------------------------------------------------------
// key-finding oracle: direct correlation over all 24 candidates

inline double pearson_oracle(const std::vector<double>& x,
                             const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double num = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    dx += (x[i] - mx) * (x[i] - mx);
    dy += (y[i] - my) * (y[i] - my);
  }
  if (dx == 0 || dy == 0) return 0;
  return num / std::sqrt(dx * dy);
}

inline Key brute_force_key(const Melody& m, const KeyProfileConfig& cfg) {
  std::vector<double> hist(12, 0.0);
  for (const Note& n : m.notes) hist[n.pitch % 12] += n.dur;

  Key best{0, Mode::Major};
  double best_score = -2;
  for (Mode mode : {Mode::Major, Mode::Minor}) {
    for (int root = 0; root < 12; ++root) {
      const auto& profile =
          mode == Mode::Major ? cfg.major_profile : cfg.minor_profile;
      std::vector<double> rotated(12);
      for (int pc = 0; pc < 12; ++pc)
        rotated[pc] = profile[((pc - root) % 12 + 12) % 12];
      const double s = pearson_oracle(rotated, hist);
      if (s > best_score) {
        best_score = s;
        best = {root, mode};
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// chord-path oracle: full enumeration in lexicographic candidate order,
// replacing only on strict improvement (first maximum wins)

inline std::vector<Chord> brute_force_chords(const Melody& m,
                                             const ChordHmmConfig& cfg) {
  const int S = telemelody::segment_count(m, cfg);
  const int C = static_cast<int>(cfg.candidate_chords.size());

  std::vector<std::vector<double>> emis(S, std::vector<double>(C));
  for (int s = 0; s < S; ++s)
    for (int c = 0; c < C; ++c)
      emis[s][c] = telemelody::segment_emission(m, s, cfg.candidate_chords[c], cfg);

  std::vector<int> path(S, 0), best_path;
  double best_score = -std::numeric_limits<double>::infinity();
  while (true) {
    double score = 0;
    for (int s = 0; s < S; ++s) {
      score += emis[s][path[s]];
      if (s > 0 && path[s] != path[s - 1]) score -= cfg.switch_penalty;
    }
    if (score > best_score) {
      best_score = score;
      best_path = path;
    }
    // advance odometer, least-significant digit last so enumeration order
    // is lexicographic over (path[0], path[1], ...)
    int s = S - 1;
    while (s >= 0 && ++path[s] == C) path[s--] = 0;
    if (s < 0) break;
  }

  std::vector<Chord> chords;
  for (int c : best_path) chords.push_back(cfg.candidate_chords[c]);
  return chords;
}

// ---------------------------------------------------------------------------
// DTW oracle: recursive enumeration of every monotone warping path

inline void dtw_enumerate(const std::vector<double>& a,
                          const std::vector<double>& b, std::size_t i,
                          std::size_t j, double cost, int length,
                          double& best_cost, int& best_len) {
  cost += std::abs(a[i] - b[j]);
  ++length;
  if (i + 1 == a.size() && j + 1 == b.size()) {
    if (cost < best_cost || (cost == best_cost && length < best_len)) {
      best_cost = cost;
      best_len = length;
    }
    return;
  }
  if (i + 1 < a.size() && j + 1 < b.size())
    dtw_enumerate(a, b, i + 1, j + 1, cost, length, best_cost, best_len);
  if (i + 1 < a.size())
    dtw_enumerate(a, b, i + 1, j, cost, length, best_cost, best_len);
  if (j + 1 < b.size())
    dtw_enumerate(a, b, i, j + 1, cost, length, best_cost, best_len);
}

inline std::pair<double, int> brute_force_dtw(const std::vector<double>& a,
                                              const std::vector<double>& b) {
  double best_cost = std::numeric_limits<double>::infinity();
  int best_len = 0;
  dtw_enumerate(a, b, 0, 0, 0.0, 0, best_cost, best_len);
  return {best_cost, best_len};
}

// ---------------------------------------------------------------------------
// finite-difference gradient of the attention loss

inline Mat finite_difference_grad(const AlignmentMatrix& align, Mat logits,
                                  double h = 1e-5) {
  Mat grad(logits.rows, logits.cols);
  for (int r = 0; r < logits.rows; ++r) {
    for (int c = 0; c < logits.cols; ++c) {
      const double orig = logits.at(r, c);
      logits.at(r, c) = orig + h;
      const double up =
          telemelody::attn_loss(align, telemelody::row_softmax(logits));
      logits.at(r, c) = orig - h;
      const double down =
          telemelody::attn_loss(align, telemelody::row_softmax(logits));
      logits.at(r, c) = orig;
      grad.at(r, c) = (up - down) / (2 * h);
    }
  }
  return grad;
}

}  // namespace test_util
