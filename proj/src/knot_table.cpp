#include "slicecert/knot_table.hpp"

#include <fstream>
#include <sstream>

namespace slicecert {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw InvalidInput("empty numeric field");
  size_t pos = 0;
  Int v = std::stoll(t, &pos);
  if (pos != t.size()) throw InvalidInput("malformed numeric field '" + t + "'");
  return v;
}

std::vector<std::pair<RootOfUnity, Int>> parse_sigmas(const std::string& field) {
  std::vector<std::pair<RootOfUnity, Int>> out;
  if (strip(field).empty()) return out;
  for (const auto& tok : split(field, ';')) {
    std::string t = strip(tok);
    if (t.empty()) continue;
    auto eq = t.find('=');
    auto slash = t.find('/');
    if (eq == std::string::npos || slash == std::string::npos || slash > eq)
      throw InvalidInput("malformed signature token '" + t + "' (want r/m=value)");
    Int r = parse_int(t.substr(0, slash));
    Int m = parse_int(t.substr(slash + 1, eq - slash - 1));
    Int v = parse_int(t.substr(eq + 1));
    out.emplace_back(RootOfUnity(r, m), v);
  }
  return out;
}

}  // namespace

SeifertMatrix parse_seifert(const std::string& text) {
  std::string norm = text;
  for (char& c : norm)
    if (c == '\n' || c == '\r') c = ';';
  std::vector<std::vector<Int>> rows;
  for (const auto& row : split(norm, ';')) {
    if (strip(row).empty()) continue;
    std::vector<Int> r;
    for (const auto& e : split(row, ',')) r.push_back(parse_int(e));
    rows.push_back(std::move(r));
  }
  return SeifertMatrix::make(std::move(rows));
}

IngestResult parse_knot_table(const std::string& text) {
  IngestResult res;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      if (t != "name,g4,arf,sigmas,seifert")
        throw InvalidInput("knot table: expected header 'name,g4,arf,sigmas,seifert'");
      header_seen = true;
      continue;
    }
    // split on the first four commas; the seifert field keeps its commas
    std::vector<std::string> fields;
    size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      size_t c = t.find(',', pos);
      if (c == std::string::npos) {
        fields.clear();
        break;
      }
      fields.push_back(t.substr(pos, c - pos));
      pos = c + 1;
    }
    if (fields.empty()) {
      res.diagnostics.push_back("line " + std::to_string(lineno) + ": expected 5 fields");
      continue;
    }
    fields.push_back(t.substr(pos));
    try {
      std::optional<SeifertMatrix> seifert;
      if (!strip(fields[4]).empty()) seifert = parse_seifert(fields[4]);
      res.records.push_back(KnotRecord::make(strip(fields[0]), parse_int(fields[1]),
                                             static_cast<int>(parse_int(fields[2])),
                                             parse_sigmas(fields[3]), std::move(seifert)));
    } catch (const Error& e) {
      res.diagnostics.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header_seen) throw InvalidInput("knot table: missing header");
  return res;
}

IngestResult ingest_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open knot table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knot_table(buf.str());
}

std::string knot_record_to_row(const KnotRecord& rec) {
  std::string sig;
  for (const auto& [key, v] : rec.samples) {
    if (!sig.empty()) sig += ";";
    sig += std::to_string(key.first) + "/" + std::to_string(key.second) + "=" + std::to_string(v);
  }
  std::string vtxt;
  if (rec.seifert) {
    for (size_t i = 0; i < rec.seifert->entries.size(); ++i) {
      if (i) vtxt += ";";
      for (size_t j = 0; j < rec.seifert->entries[i].size(); ++j) {
        if (j) vtxt += ",";
        vtxt += std::to_string(rec.seifert->entries[i][j]);
      }
    }
  }
  return rec.name + "," + std::to_string(rec.g4) + "," + std::to_string(rec.arf) + "," + sig +
         "," + vtxt;
}

}  // namespace slicecert
