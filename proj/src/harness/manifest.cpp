#include <filesystem>
#include <fstream>
#include <sstream>

#include "agrp/harness.hpp"

namespace agrp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_criteria(const std::string& spec, int line) {
  if (spec == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    int k = 0;
    try {
      k = std::stoi(item);
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1 || k > 8) throw InvalidInput("manifest line " + std::to_string(line) + ": bad criterion '" + item + "'");
    out.push_back(k);
  }
  return out;
}

}  // namespace

Manifest parse_manifest(std::istream& in, const std::string& base_dir) {
  Manifest m;
  m.base_dir = base_dir;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const auto hash = raw.find('#');
    // '#' inside a quoted table path is kept
    if (hash != std::string::npos && raw.find('"') > hash) raw = raw.substr(0, hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s[0] == '!') {
      std::stringstream ss(s.substr(1));
      std::string word, rest;
      ss >> word;
      std::getline(ss, rest);
      if (word != "criteria") throw InvalidInput("manifest line " + std::to_string(line) + ": unknown directive");
      for (int k : parse_criteria(trim(rest), line)) m.criteria.push_back(k);
      continue;
    }
    ManifestEntry e;
    e.line = line;
    std::stringstream ss(s);
    std::string part;
    std::getline(ss, part, ';');
    e.expr = trim(part);
    while (std::getline(ss, part, ';')) {
      part = trim(part);
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw InvalidInput("manifest line " + std::to_string(line) + ": expected key=value");
      e.expect[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open manifest " + path);
  return parse_manifest(in, std::filesystem::path(path).parent_path().string());
}

bool AcceptanceReport::ok() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

}  // namespace agrp
