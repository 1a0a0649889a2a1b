#include "telemelody/template_extract.hpp"

#include <limits>

#include "telemelody/errors.hpp"

namespace telemelody {

std::vector<int> extract_rhythm(const Melody& m) {
  std::vector<int> rhythm;
  rhythm.reserve(m.notes.size());
  for (const Note& n : m.notes) rhythm.push_back(n.pos / kStepsPerBeat);
  return rhythm;
}

std::vector<int> tonic_triad(const Key& key) {
  const int third = key.mode == Mode::Major ? 4 : 3;
  return {key.root, (key.root + third) % 12, (key.root + 7) % 12};
}

Chord tonic_chord(const Key& key) {
  return {key.root,
          key.mode == Mode::Major ? ChordQuality::Maj : ChordQuality::Min};
}

std::vector<Cadence> extract_cadence(const Melody& m, const Key& tonality,
                                     const std::vector<Chord>& chords,
                                     const CadenceConfig& cfg,
                                     RandomSource& rng) {
  if (chords.size() != m.notes.size())
    throw LengthMismatch("chords and notes must align 1:1");

  const std::vector<int> triad = tonic_triad(tonality);
  const Chord tonic = tonic_chord(tonality);

  std::vector<Cadence> out;
  out.reserve(m.notes.size());
  for (std::size_t i = 0; i < m.notes.size(); ++i) {
    const Note& n = m.notes[i];
    const double interval =
        i + 1 < m.notes.size()
            ? static_cast<double>(m.notes[i + 1].onset() - n.onset())
            : std::numeric_limits<double>::infinity();
    const int pc = n.pitch % 12;

    if (n.dur < cfg.short_dur && interval < cfg.small_interval) {
      out.push_back(Cadence::None);
      continue;
    }
    if (pc == tonality.root || chords[i] == tonic) {
      out.push_back(Cadence::Authentic);
      continue;
    }
    const bool in_triad = pc == triad[1] || pc == triad[2];
    if (in_triad && interval > cfg.large_interval &&
        rng.next_double() < cfg.p_auth) {
      out.push_back(Cadence::Authentic);
      continue;
    }
    out.push_back(Cadence::Half);
  }
  return out;
}

Template extract_template(const Melody& m, const ExtractConfig& cfg,
                          RandomSource& rng) {
  if (m.empty()) throw EmptyMelody("cannot extract a template from nothing");

  const Key key = infer_tonality(m, cfg.key_profiles);
  const std::vector<Chord> chords = infer_chords(m, cfg.chord_hmm);
  const std::vector<int> rhythm = extract_rhythm(m);
  const std::vector<Cadence> cadence =
      extract_cadence(m, key, chords, cfg.cadence, rng);

  Template t;
  t.tonality = key.mode;
  t.triples.reserve(m.notes.size());
  for (std::size_t i = 0; i < m.notes.size(); ++i)
    t.triples.push_back({chords[i], rhythm[i], cadence[i]});
  return t;
}

}  // namespace telemelody
