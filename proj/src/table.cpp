#include "strathom/table.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strathom {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<table_entry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("table: cannot open " + path);
  std::vector<table_entry> out;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("table: line " + std::to_string(lineno) +
                               ": expected 'name: pd-code'");
    }
    table_entry e;
    e.name = trim(line.substr(0, colon));
    if (e.name.empty()) {
      throw std::runtime_error("table: line " + std::to_string(lineno) +
                               ": empty knot name");
    }
    if (!seen.insert(e.name).second) {
      throw std::runtime_error("table: duplicate knot " + e.name);
    }
    e.diagram = parse_pd(line.substr(colon + 1));
    validate(e.diagram);
    out.push_back(std::move(e));
  }
  return out;
}

std::string default_table_path() {
  if (const char* env = std::getenv("STRATHOM_TABLE")) return env;
#ifdef STRATHOM_TABLE_PATH
  return STRATHOM_TABLE_PATH;
#else
  return "data/knot_table.txt";
#endif
}

}  // namespace strathom
