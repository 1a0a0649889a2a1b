#pragma once

#include <stdexcept>
#include <string>

namespace telemelody {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TELEMELODY_DEFINE_ERROR(NAME)                          \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& msg) : Error(msg) {}      \
  }

// MIDI parsing / preprocessing
TELEMELODY_DEFINE_ERROR(MalformedMidi);
TELEMELODY_DEFINE_ERROR(UnsupportedFormat);
TELEMELODY_DEFINE_ERROR(MissingTiming);
TELEMELODY_DEFINE_ERROR(NotFourFour);
TELEMELODY_DEFINE_ERROR(NoEligibleTrack);
TELEMELODY_DEFINE_ERROR(BarOverflow);
TELEMELODY_DEFINE_ERROR(EmptyMelody);

// Token codecs
TELEMELODY_DEFINE_ERROR(OutOfVocab);
TELEMELODY_DEFINE_ERROR(MalformedSequence);

// Template extraction / metrics
TELEMELODY_DEFINE_ERROR(LengthMismatch);

// Lyrics
TELEMELODY_DEFINE_ERROR(EmptyLyrics);
TELEMELODY_DEFINE_ERROR(UnsupportedScript);
TELEMELODY_DEFINE_ERROR(EmptyProgression);

// Alignment regularization
TELEMELODY_DEFINE_ERROR(InvalidSize);
TELEMELODY_DEFINE_ERROR(ShapeMismatch);
TELEMELODY_DEFINE_ERROR(NonPositiveAttention);

// Sampling / generation
TELEMELODY_DEFINE_ERROR(AllZeroWeights);
TELEMELODY_DEFINE_ERROR(EmptyCandidateSet);

// Corpus evaluation
TELEMELODY_DEFINE_ERROR(NoPairs);

#undef TELEMELODY_DEFINE_ERROR

}  // namespace telemelody
