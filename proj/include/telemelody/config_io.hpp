#pragma once

#include <string>

#include "telemelody/template_extract.hpp"

namespace telemelody {

/// Loads extraction settings from a flat key = value file.
///
/// Recognized keys (all optional, missing keys keep their defaults):
///   major_profile, minor_profile   12 comma-separated weights
///   candidate_chords               comma-separated names ("C,Am,...") or
///                                  "all84" for the full chord vocabulary
///   segment_len                    sixteenths per chord slot
///   chord_tone_weight, non_chord_penalty, switch_penalty
///   p_auth, short_dur, small_interval, large_interval
/// Lines starting with '#' are comments.
ExtractConfig load_extract_config(const std::string& path);

/// Writes a config back in the same format (useful as a starting template).
std::string extract_config_text(const ExtractConfig& cfg);

}  // namespace telemelody
