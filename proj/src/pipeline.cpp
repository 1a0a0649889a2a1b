#include "telemelody/pipeline.hpp"

#include "telemelody/errors.hpp"

namespace telemelody {

Melody preprocess(const MidiSong& song, const KeyProfileConfig& profiles,
                  bool strict_track_selection) {
  if (song.time_signature != std::pair<int, int>{4, 4})
    throw NotFourFour("only 4/4 songs are supported");

  RawTrack events;
  if (!strict_track_selection && song.tracks.size() == 1)
    events = song.tracks[0];
  else
    events = select_melody_track(song);
  if (events.empty()) throw EmptyMelody("selected track has no notes");

  const RawTrack mono = monophonize(events);
  const Melody quantized = quantize(mono, song.ticks_per_quarter);
  const Key key = infer_tonality(quantized, profiles);
  return normalize_and_filter(quantized, key);
}

Melody preprocess_midi_bytes(const std::vector<std::uint8_t>& bytes,
                             const KeyProfileConfig& profiles,
                             bool strict_track_selection) {
  return preprocess(parse_midi(bytes), profiles, strict_track_selection);
}

}  // namespace telemelody
