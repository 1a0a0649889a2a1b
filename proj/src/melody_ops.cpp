#include "telemelody/melody_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "telemelody/errors.hpp"

namespace telemelody {

namespace {
constexpr int kDrumChannel = 9;  // MIDI channel 10
}

RawTrack select_melody_track(const MidiSong& song) {
  int best_index = -1;
  double best_mean = -1.0;
  std::vector<RawTrack> filtered(song.tracks.size());

  for (std::size_t i = 0; i < song.tracks.size(); ++i) {
    for (const RawNoteEvent& e : song.tracks[i])
      if (e.channel != kDrumChannel) filtered[i].push_back(e);
    if (filtered[i].size() < static_cast<std::size_t>(kMinTrackNotes))
      continue;
    double sum = 0;
    for (const RawNoteEvent& e : filtered[i]) sum += e.pitch;
    const double mean = sum / static_cast<double>(filtered[i].size());
    if (mean > best_mean) {  // strict: equal means keep the lower index
      best_mean = mean;
      best_index = static_cast<int>(i);
    }
  }

  if (best_index < 0)
    throw NoEligibleTrack("no track has at least " +
                          std::to_string(kMinTrackNotes) + " notes");
  return filtered[best_index];
}

RawTrack monophonize(const RawTrack& events) {
  // Highest pitch wins at each distinct onset; pitch ties keep the longest.
  std::map<std::int64_t, RawNoteEvent> by_onset;
  for (const RawNoteEvent& e : events) {
    auto [it, inserted] = by_onset.try_emplace(e.onset_tick, e);
    if (!inserted) {
      const RawNoteEvent& cur = it->second;
      if (e.pitch > cur.pitch ||
          (e.pitch == cur.pitch && e.offset_tick > cur.offset_tick))
        it->second = e;
    }
  }

  RawTrack out;
  out.reserve(by_onset.size());
  for (const auto& [onset, e] : by_onset) out.push_back(e);
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    out[i].offset_tick = std::min(out[i].offset_tick, out[i + 1].onset_tick);
  return out;
}

Melody quantize(const RawTrack& events, int ticks_per_quarter) {
  const double step = static_cast<double>(ticks_per_quarter) / kStepsPerBeat;
  Melody m;
  m.notes.reserve(events.size());
  for (const RawNoteEvent& e : events) {
    // floor(x + 0.5) rounds to nearest with ties up
    const long grid_onset =
        static_cast<long>(std::floor(e.onset_tick / step + 0.5));
    const double ticks = static_cast<double>(e.offset_tick - e.onset_tick);
    long dur = static_cast<long>(std::floor(ticks / step + 0.5));
    dur = std::clamp(dur, 1L, static_cast<long>(kMaxDur));
    Note n;
    n.bar = static_cast<int>(grid_onset / kStepsPerBar);
    n.pos = static_cast<int>(grid_onset % kStepsPerBar);
    n.pitch = e.pitch;
    n.dur = static_cast<int>(dur);
    m.notes.push_back(n);
  }
  // Quantization can merge onsets; keep the melody strictly monophonic.
  std::stable_sort(m.notes.begin(), m.notes.end(),
                   [](const Note& a, const Note& b) {
                     return a.onset() < b.onset();
                   });
  std::vector<Note> dedup;
  for (const Note& n : m.notes) {
    if (!dedup.empty() && dedup.back().onset() == n.onset()) {
      if (n.pitch > dedup.back().pitch) dedup.back() = n;
      continue;
    }
    dedup.push_back(n);
  }
  for (std::size_t i = 0; i + 1 < dedup.size(); ++i)
    dedup[i].dur =
        std::min(dedup[i].dur, dedup[i + 1].onset() - dedup[i].onset());
  m.notes = std::move(dedup);
  return m;
}

Melody normalize_and_filter(const Melody& m, const Key& key) {
  if (m.empty()) throw EmptyMelody("cannot normalize an empty melody");

  // Shift toward C major / A minor, taking the direction with the smaller
  // absolute shift; a six-semitone tie resolves downward.
  const int target = key.mode == Mode::Major ? 0 : 9;
  const int up = ((target - key.root) % 12 + 12) % 12;
  const int key_shift = up <= 5 ? up : up - 12;

  Melody out = m;
  for (Note& n : out.notes) n.pitch += key_shift;

  double mean = 0;
  for (const Note& n : out.notes) mean += n.pitch;
  mean /= static_cast<double>(out.notes.size());
  const int octave_shift =
      -static_cast<int>(std::floor((mean - 60.0) / 12.0)) * 12;
  for (Note& n : out.notes) n.pitch += octave_shift;

  // Compact away bars that contain no onset.
  std::set<int> occupied;
  for (const Note& n : out.notes) occupied.insert(n.bar);
  std::map<int, int> remap;
  int next = 0;
  for (int bar : occupied) remap[bar] = next++;
  for (Note& n : out.notes) n.bar = remap[n.bar];
  if (!out.notes.empty() && out.notes.back().bar > kMaxBar)
    throw BarOverflow("melody spans more than 256 occupied bars");

  // Compaction can shorten gaps across removed bars; re-truncate durations
  // so monophony still holds.
  for (std::size_t i = 0; i + 1 < out.notes.size(); ++i)
    out.notes[i].dur = std::min(
        out.notes[i].dur, out.notes[i + 1].onset() - out.notes[i].onset());

  out.meta.source_key_shift = m.meta.source_key_shift + key_shift;
  out.meta.octave_shift = m.meta.octave_shift + octave_shift;
  return out;
}

}  // namespace telemelody
