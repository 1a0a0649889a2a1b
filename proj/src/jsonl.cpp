#include "telemelody/jsonl.hpp"

#include <fstream>

#include <json.hpp>

#include "telemelody/errors.hpp"

namespace telemelody {

using json = nlohmann::ordered_json;

std::string melody_jsonl_line(const std::string& id, const Melody& m) {
  json j;
  j["id"] = id;
  json notes = json::array();
  for (const Note& n : m.notes)
    notes.push_back(json::array({n.bar, n.pos, n.pitch, n.dur}));
  j["notes"] = std::move(notes);
  return j.dump();
}

std::pair<std::string, Melody> parse_melody_jsonl_line(
    const std::string& line) {
  const json j = json::parse(line);
  Melody m;
  for (const auto& row : j.at("notes")) {
    if (!row.is_array() || row.size() != 4)
      throw MalformedSequence("note rows must be [bar,pos,pitch,dur]");
    m.notes.push_back({row[0].get<int>(), row[1].get<int>(),
                       row[2].get<int>(), row[3].get<int>()});
  }
  return {j.value("id", ""), std::move(m)};
}

std::string pair_jsonl_line(const std::string& id, const Template& t,
                            const Melody& m) {
  json j;
  j["id"] = id;
  j["template"] = template_token_strings(t);
  j["melody"] = melody_token_strings(m);
  return j.dump();
}

PairRecord parse_pair_jsonl_line(const std::string& line) {
  const json j = json::parse(line);
  PairRecord rec;
  rec.id = j.value("id", "");
  rec.tmpl = template_from_token_strings(
      j.at("template").get<std::vector<std::string>>());
  rec.melody = melody_from_token_strings(
      j.at("melody").get<std::vector<std::string>>());
  return rec;
}

std::string template_jsonl_line(const std::string& id, const Template& t) {
  json j;
  j["id"] = id;
  j["template"] = template_token_strings(t);
  return j.dump();
}

std::pair<std::string, Template> parse_template_jsonl_line(
    const std::string& line) {
  const json j = json::parse(line);
  return {j.value("id", ""),
          template_from_token_strings(
              j.at("template").get<std::vector<std::string>>())};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  for (const std::string& line : lines) out << line << '\n';
}

}  // namespace telemelody
