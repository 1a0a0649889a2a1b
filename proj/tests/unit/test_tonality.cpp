#include <doctest.h>

#include <random>

#include "../support/test_util.hpp"
#include "telemelody/errors.hpp"
#include "telemelody/tonality.hpp"

using namespace telemelody;

TEST_CASE("ascending C major scale scores highest as C major") {
  const Melody m = test_util::scale_melody(0, Mode::Major);
  CHECK(infer_tonality(m) == kCMajor);
  CHECK(test_util::brute_force_key(m, {}) == kCMajor);
}

TEST_CASE("transposing the scale by two lands on D major") {
  Melody m = test_util::scale_melody(0, Mode::Major);
  for (Note& n : m.notes) n.pitch += 2;
  const Key got = infer_tonality(m);
  CHECK(got == Key{2, Mode::Major});
  CHECK(got == test_util::brute_force_key(m, {}));
}

TEST_CASE("repeated A-C-E arpeggio ending on A reads as A minor") {
  Melody m;
  const int pitches[] = {69, 72, 76, 69, 72, 76, 69};
  for (int i = 0; i < 7; ++i) m.notes.push_back({0, 0, pitches[i], 2});
  // fix onsets so the melody is valid
  for (int i = 0; i < 7; ++i) {
    m.notes[i].bar = (i * 2) / 16;
    m.notes[i].pos = (i * 2) % 16;
  }
  CHECK(infer_tonality(m) == kAMinor);
  CHECK(test_util::brute_force_key(m, {}) == kAMinor);
}

TEST_CASE("inference matches the brute-force argmax on random melodies") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Melody m = test_util::random_scale_melody(rng, 30);
    CHECK(infer_tonality(m) == test_util::brute_force_key(m, {}));
  }
}

TEST_CASE("transposition equivariance over all shifts") {
  const Melody base = test_util::scale_melody(0, Mode::Minor);
  const Key base_key = infer_tonality(base);
  REQUIRE(base_key == Key{0, Mode::Minor});
  for (int s = 1; s < 12; ++s) {
    Melody shifted = base;
    for (Note& n : shifted.notes) n.pitch += s;
    const Key k = infer_tonality(shifted);
    CHECK(k.root == (base_key.root + s) % 12);
    CHECK(k.mode == base_key.mode);
  }
}

TEST_CASE("duration weighting matters") {
  // same pitches, the long G vs long C tilt the histogram
  Melody hold_c = test_util::melody_from(
      {{0, 0, 60, 12}, {0, 12, 67, 2}, {0, 14, 64, 2}});
  Melody hold_g = test_util::melody_from(
      {{0, 0, 60, 2}, {0, 2, 67, 12}, {0, 14, 64, 2}});
  const auto hist_c = pitch_class_histogram(hold_c);
  const auto hist_g = pitch_class_histogram(hold_g);
  CHECK(hist_c[0] == 12.0);
  CHECK(hist_g[7] == 12.0);
}

TEST_CASE("uniform chromatic histogram falls back to C major") {
  Melody m;
  for (int i = 0; i < 12; ++i) m.notes.push_back({i / 8, (i % 8) * 2, 60 + i, 2});
  CHECK(infer_tonality(m) == kCMajor);
}

TEST_CASE("empty melody raises") {
  CHECK_THROWS_AS(infer_tonality(Melody{}), EmptyMelody);
}
