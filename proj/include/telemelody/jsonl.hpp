#pragma once

#include <string>
#include <vector>

#include "telemelody/note.hpp"
#include "telemelody/tokens.hpp"

namespace telemelody {

/// {"id": ..., "notes": [[bar,pos,pitch,dur], ...]}
std::string melody_jsonl_line(const std::string& id, const Melody& m);
std::pair<std::string, Melody> parse_melody_jsonl_line(const std::string& line);

/// {"id": ..., "template": [tokens], "melody": [tokens]} - the paired
/// template-melody training format.
std::string pair_jsonl_line(const std::string& id, const Template& t,
                            const Melody& m);
struct PairRecord {
  std::string id;
  Template tmpl;
  Melody melody;
};
PairRecord parse_pair_jsonl_line(const std::string& line);

/// {"id": ..., "template": [tokens]} - template-only lines; parse accepts
/// pair lines too and ignores the melody field.
std::string template_jsonl_line(const std::string& id, const Template& t);
std::pair<std::string, Template> parse_template_jsonl_line(
    const std::string& line);

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);

}  // namespace telemelody
