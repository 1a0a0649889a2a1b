#include <doctest.h>

#include <random>

#include "../support/test_util.hpp"
#include "telemelody/errors.hpp"
#include "telemelody/melody_ops.hpp"

using namespace telemelody;

namespace {

RawTrack make_track(int count, int base_pitch, int channel = 0) {
  RawTrack t;
  for (int i = 0; i < count; ++i)
    t.push_back({i * 480L, i * 480L + 240, base_pitch, channel});
  return t;
}

}  // namespace

TEST_CASE("track selection needs 50 notes and picks the highest mean pitch") {
  MidiSong song;
  song.tracks = {make_track(60, 70), make_track(80, 50), make_track(30, 90)};
  const RawTrack chosen = select_melody_track(song);
  CHECK(chosen.size() == 60);
  CHECK(chosen[0].pitch == 70);  // the 30-note track loses despite mean 90
}

TEST_CASE("single eligible track is chosen") {
  MidiSong song;
  song.tracks = {make_track(50, 55)};
  CHECK(select_melody_track(song).size() == 50);
}

TEST_CASE("equal mean pitch resolves to the lower track index") {
  MidiSong song;
  song.tracks = {make_track(60, 64), make_track(60, 64)};
  // distinguish the tracks by duration of the first event
  song.tracks[1][0].offset_tick = 100;
  const RawTrack chosen = select_melody_track(song);
  CHECK(chosen[0].offset_tick == 240);
}

TEST_CASE("drum-channel notes do not count toward selection") {
  MidiSong song;
  song.tracks = {make_track(60, 80, 9), make_track(50, 60, 0)};
  const RawTrack chosen = select_melody_track(song);
  CHECK(chosen[0].pitch == 60);

  MidiSong drums_only;
  drums_only.tracks = {make_track(60, 80, 9)};
  CHECK_THROWS_AS(select_melody_track(drums_only), NoEligibleTrack);
}

TEST_CASE("no track with 50 notes raises NoEligibleTrack") {
  MidiSong song;
  song.tracks = {make_track(49, 70)};
  CHECK_THROWS_AS(select_melody_track(song), NoEligibleTrack);
}

TEST_CASE("monophonize keeps the top of a chord") {
  RawTrack chord = {{0, 480, 60, 0}, {0, 480, 64, 0}, {0, 480, 67, 0}};
  const RawTrack out = monophonize(chord);
  REQUIRE(out.size() == 1);
  CHECK(out[0].pitch == 67);
}

TEST_CASE("monophonize truncates overlaps") {
  RawTrack events = {{0, 960, 60, 0}, {480, 960, 62, 0}};
  const RawTrack out = monophonize(events);
  REQUIRE(out.size() == 2);
  CHECK(out[0].offset_tick == 480);
  CHECK(out[1].offset_tick == 960);
}

TEST_CASE("monophonize leaves a clean line unchanged") {
  RawTrack events = {{0, 480, 60, 0}, {480, 960, 62, 0}, {960, 1200, 64, 0}};
  CHECK(monophonize(events) == events);
}

TEST_CASE("quantize maps exact grid points directly") {
  RawTrack events = {{480, 960, 60, 0}};  // one quarter in, at 480 tpq
  const Melody m = quantize(events, 480);
  REQUIRE(m.notes.size() == 1);
  CHECK(m.notes[0].bar == 0);
  CHECK(m.notes[0].pos == 4);
  CHECK(m.notes[0].dur == 4);
}

TEST_CASE("quantize rounds to nearest with ties up and clamps durations") {
  // duration 1.3 quarters = 5.2 sixteenths -> 5
  CHECK(quantize({{0, 624, 60, 0}}, 480).notes[0].dur == 5);
  // 2.5 sixteenths is a tie -> rounds up to 3
  CHECK(quantize({{0, 300, 60, 0}}, 480).notes[0].dur == 3);
  // 2.5 bars clamps to a whole note
  CHECK(quantize({{0, 4800, 60, 0}}, 480).notes[0].dur == 16);
  // zero-length events keep the minimum duration
  CHECK(quantize({{0, 10, 60, 0}}, 480).notes[0].dur == 1);
}

TEST_CASE("quantize works at other resolutions") {
  const Melody m = quantize({{96, 192, 65, 0}}, 96);  // 24 ticks per sixteenth
  CHECK(m.notes[0].pos == 4);
  CHECK(m.notes[0].dur == 4);
}

TEST_CASE("normalize: identity on a C-major melody in register") {
  const Melody m = test_util::melody_from(
      {{0, 0, 60, 2}, {0, 4, 64, 2}, {0, 8, 67, 2}, {0, 12, 72, 2}});
  const Melody out = normalize_and_filter(m, kCMajor);
  CHECK(out.notes == m.notes);
  CHECK(out.meta.source_key_shift == 0);
  CHECK(out.meta.octave_shift == 0);
}

TEST_CASE("normalize: D major shifts down two semitones") {
  Melody m = test_util::scale_melody(2, Mode::Major);
  const Melody out = normalize_and_filter(m, {2, Mode::Major});
  CHECK(out.meta.source_key_shift == -2);
  // re-running key inference on the output lands on C major
  CHECK(infer_tonality(out) == kCMajor);
}

TEST_CASE("normalize: key shift picks the smaller direction, tie down") {
  Melody m = test_util::scale_melody(0, Mode::Major);
  // G (7 semitones above C): up 5 beats down 7
  CHECK(normalize_and_filter(m, {7, Mode::Major}).meta.source_key_shift == 5);
  // F# is six either way; ties go down
  CHECK(normalize_and_filter(m, {6, Mode::Major}).meta.source_key_shift == -6);
  // B minor: down 2 to A minor
  CHECK(normalize_and_filter(m, {11, Mode::Minor}).meta.source_key_shift ==
        -2);
}

TEST_CASE("normalize: mean pitch lands in [60, 72)") {
  Melody low = test_util::melody_from({{0, 0, 40, 4}, {0, 8, 45, 4}});
  const Melody out = normalize_and_filter(low, kCMajor);
  double mean = 0;
  for (const Note& n : out.notes) mean += n.pitch;
  mean /= static_cast<double>(out.notes.size());
  CHECK(mean >= 60.0);
  CHECK(mean < 72.0);
  CHECK(out.meta.octave_shift % 12 == 0);
}

TEST_CASE("normalize: empty bars are compacted") {
  Melody m = test_util::melody_from(
      {{0, 0, 60, 4}, {1, 0, 62, 4}, {3, 0, 64, 4}});  // bar 2 empty
  const Melody out = normalize_and_filter(m, kCMajor);
  REQUIRE(out.notes.size() == 3);
  CHECK(out.notes[2].bar == 2);
  CHECK(has_no_empty_bars(out));
}

TEST_CASE("normalize: durations crossing a removed bar are truncated") {
  Melody m = test_util::melody_from({{0, 12, 60, 12}, {2, 0, 64, 4}});
  const Melody out = normalize_and_filter(m, kCMajor);
  REQUIRE(out.notes[1].onset() == 16);  // bar 2 slid to bar 1
  CHECK(out.notes[0].dur == 4);         // truncated to the shortened gap
  CHECK_NOTHROW(validate_melody(out));
}

TEST_CASE("normalize twice equals once") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Melody m = test_util::random_scale_melody(rng);
    const Melody once = normalize_and_filter(m, infer_tonality(m));
    const Melody twice = normalize_and_filter(once, infer_tonality(once));
    CHECK(twice.notes == once.notes);
    CHECK(twice.meta == once.meta);
  }
}

TEST_CASE("normalize output is monophonic and bar-dense") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Melody m = test_util::random_scale_melody(rng);
    const Melody out = normalize_and_filter(m, infer_tonality(m));
    CHECK_NOTHROW(validate_melody(out));
    CHECK(has_no_empty_bars(out));
  }
}

TEST_CASE("normalize rejects an empty melody") {
  CHECK_THROWS_AS(normalize_and_filter(Melody{}, kCMajor), EmptyMelody);
}
