#include "telemelody/chord_infer.hpp"

#include <algorithm>

#include "telemelody/errors.hpp"

namespace telemelody {

double segment_emission(const Melody& m, int segment, const Chord& chord,
                        const ChordHmmConfig& cfg) {
  const int seg_start = segment * cfg.segment_len;
  const int seg_end = seg_start + cfg.segment_len;
  double score = 0;
  for (const Note& n : m.notes) {
    const int overlap =
        std::min(n.offset(), seg_end) - std::max(n.onset(), seg_start);
    if (overlap <= 0) continue;
    if (is_chord_tone(chord, n.pitch))
      score += overlap * cfg.chord_tone_weight;
    else
      score -= overlap * cfg.non_chord_penalty;
  }
  return score;
}

int segment_count(const Melody& m, const ChordHmmConfig& cfg) {
  int end = 0;
  for (const Note& n : m.notes) end = std::max(end, n.offset());
  return std::max(1, (end + cfg.segment_len - 1) / cfg.segment_len);
}

std::vector<Chord> infer_segment_chords(const Melody& m,
                                        const ChordHmmConfig& cfg) {
  if (m.empty()) throw EmptyMelody("cannot infer chords of empty melody");
  if (cfg.candidate_chords.empty())
    throw Error("candidate chord set must be nonempty");

  const int S = segment_count(m, cfg);
  const int C = static_cast<int>(cfg.candidate_chords.size());

  std::vector<std::vector<double>> emis(S, std::vector<double>(C));
  for (int s = 0; s < S; ++s)
    for (int c = 0; c < C; ++c)
      emis[s][c] = segment_emission(m, s, cfg.candidate_chords[c], cfg);

  // suffix[s][c] = best achievable score of segments s..S-1 given chord c at
  // segment s (including emis[s][c]). Selecting greedily forward over suffix
  // values yields the lexicographically earliest optimal path, matching an
  // exhaustive search that only replaces on strict improvement.
  std::vector<std::vector<double>> suffix(S, std::vector<double>(C));
  for (int c = 0; c < C; ++c) suffix[S - 1][c] = emis[S - 1][c];
  for (int s = S - 2; s >= 0; --s) {
    for (int c = 0; c < C; ++c) {
      double best = -1e300;
      for (int nc = 0; nc < C; ++nc) {
        const double v = suffix[s + 1][nc] - (nc != c ? cfg.switch_penalty : 0);
        if (v > best) best = v;
      }
      suffix[s][c] = emis[s][c] + best;
    }
  }

  std::vector<Chord> path;
  path.reserve(S);
  int prev = -1;
  for (int s = 0; s < S; ++s) {
    int best_c = 0;
    double best = -1e300;
    for (int c = 0; c < C; ++c) {
      const double v =
          suffix[s][c] - (prev >= 0 && c != prev ? cfg.switch_penalty : 0);
      if (v > best) {  // strict comparison keeps the earliest candidate
        best = v;
        best_c = c;
      }
    }
    path.push_back(cfg.candidate_chords[best_c]);
    prev = best_c;
  }
  return path;
}

std::vector<Chord> infer_chords(const Melody& m, const ChordHmmConfig& cfg) {
  const std::vector<Chord> segments = infer_segment_chords(m, cfg);
  std::vector<Chord> per_note;
  per_note.reserve(m.notes.size());
  for (const Note& n : m.notes) {
    const int seg =
        std::min(n.onset() / cfg.segment_len,
                 static_cast<int>(segments.size()) - 1);
    per_note.push_back(segments[seg]);
  }
  return per_note;
}

}  // namespace telemelody
