#include "telemelody/generator.hpp"

#include <algorithm>
#include <cmath>

#include "telemelody/chords.hpp"
#include "telemelody/errors.hpp"
#include "telemelody/template_extract.hpp"

namespace telemelody {

int cadence_min_gap(Cadence c) {
  switch (c) {
    case Cadence::None:
      return 1;
    case Cadence::Half:
      return 6;
    case Cadence::Authentic:
      return 8;
  }
  return 1;
}

namespace {

// Smallest beat-aligned grid point above `after` within beat `rhythm`
// that is at least `min_gap` past `prev`.
int next_beat_slot(int prev, int rhythm, int min_gap) {
  int o = (prev / kStepsPerBar) * kStepsPerBar + rhythm * kStepsPerBeat;
  while (o <= prev || o - prev < min_gap) o += kStepsPerBar;
  return o;
}

constexpr int kShortGapLimit = 6;  // keep no-cadence gaps extraction-compliant

}  // namespace

std::vector<int> schedule_onsets(const Template& t) {
  if (t.triples.empty()) throw EmptyMelody("template has no triples");

  std::vector<int> onsets;
  onsets.reserve(t.triples.size());
  onsets.push_back(t.triples[0].rhythm * kStepsPerBeat);

  for (std::size_t i = 1; i < t.triples.size(); ++i) {
    const int prev = onsets.back();
    const Cadence prev_cad = t.triples[i - 1].cadence;
    const int rhythm = t.triples[i].rhythm;
    int o = next_beat_slot(prev, rhythm, cadence_min_gap(prev_cad));

    if (prev_cad == Cadence::None && o - prev >= kShortGapLimit) {
      // Try an eighth-grid slot inside the target beat with a gap under 6.
      const int beat_base =
          (prev / kStepsPerBar) * kStepsPerBar + rhythm * kStepsPerBeat;
      for (int base : {beat_base, beat_base + kStepsPerBar}) {
        bool found = false;
        for (int off = 0; off < kStepsPerBeat; off += 2) {
          const int cand = base + off;
          const int gap = cand - prev;
          if (gap >= 1 && gap < kShortGapLimit) {
            o = cand;
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    onsets.push_back(o);
  }
  return onsets;
}

std::vector<int> assign_durations(const std::vector<int>& onsets,
                                  const std::vector<Cadence>& cadences) {
  if (onsets.size() != cadences.size())
    throw LengthMismatch("onsets and cadences must align");

  std::vector<int> durs;
  durs.reserve(onsets.size());
  for (std::size_t i = 0; i < onsets.size(); ++i) {
    const int interval = i + 1 < onsets.size()
                             ? onsets[i + 1] - onsets[i]
                             : kStepsPerBar;
    int d;
    switch (cadences[i]) {
      case Cadence::None:
        d = std::min(interval, 3);
        break;
      case Cadence::Half:
        d = std::max(std::min(interval - 1, 8), 4);
        break;
      default:
        d = std::max(std::min(interval - 1, 12), 4);
    }
    durs.push_back(std::max(1, d));
  }
  return durs;
}

namespace {

bool in_scale(Mode mode, int pc) {
  // C major and A natural minor share the unaltered pitch-class set.
  (void)mode;
  static const bool natural[12] = {true,  false, true, false, true,  true,
                                   false, true,  false, true, false, true};
  return natural[pc];
}

int tonic_pitch_class(Mode mode) { return mode == Mode::Major ? 0 : 9; }

}  // namespace

std::vector<int> sample_pitches(const Template& t,
                                const std::vector<int>& onsets,
                                const SamplerConfig& cfg) {
  if (onsets.size() != t.triples.size())
    throw LengthMismatch("onsets and triples must align");
  if (cfg.pitch_low >= cfg.pitch_high)
    throw Error("pitch range must satisfy low < high");

  RandomSource rng(cfg.seed);
  std::vector<int> pitches;
  pitches.reserve(t.triples.size());
  int prev = -1;

  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    const NoteElements& e = t.triples[i];
    const bool final_auth =
        i + 1 == t.triples.size() && e.cadence == Cadence::Authentic;

    std::vector<int> candidates;
    std::vector<double> weights;
    for (int p = cfg.pitch_low; p <= cfg.pitch_high; ++p) {
      const int pc = p % 12;
      if (!in_scale(t.tonality, pc)) continue;
      if (final_auth && pc != tonic_pitch_class(t.tonality)) continue;
      double w = is_chord_tone(e.chord, pc) ? cfg.chord_tone_weight
                                            : cfg.scale_tone_weight;
      if (prev >= 0 && std::abs(p - prev) > cfg.max_leap) w = 0;
      candidates.push_back(p);
      weights.push_back(w);
    }

    if (candidates.empty() ||
        std::none_of(weights.begin(), weights.end(),
                     [](double w) { return w > 0; }))
      throw EmptyCandidateSet("no pitch candidate under the configured range");

    const int idx = sample_categorical(weights, cfg, rng);
    prev = candidates[idx];
    pitches.push_back(prev);
  }
  return pitches;
}

Melody generate(const Template& t, const SamplerConfig& cfg) {
  const std::vector<int> onsets = schedule_onsets(t);

  std::vector<Cadence> cadences;
  cadences.reserve(t.triples.size());
  for (const NoteElements& e : t.triples) cadences.push_back(e.cadence);

  const std::vector<int> durs = assign_durations(onsets, cadences);
  const std::vector<int> pitches = sample_pitches(t, onsets, cfg);

  Melody m;
  m.notes.reserve(t.triples.size());
  for (std::size_t i = 0; i < t.triples.size(); ++i) {
    Note n;
    n.bar = onsets[i] / kStepsPerBar;
    n.pos = onsets[i] % kStepsPerBar;
    n.pitch = pitches[i];
    n.dur = durs[i];
    m.notes.push_back(n);
  }
  if (!m.notes.empty() && m.notes.back().bar > kMaxBar)
    throw BarOverflow("generated melody exceeds 256 bars");
  return m;
}

}  // namespace telemelody
