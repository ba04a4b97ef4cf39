#pragma once

#include <string>
#include <vector>

#include "slicecert/knot_model.hpp"

namespace slicecert {

// CSV knot table: header "name,g4,arf,sigmas,seifert".  The sigmas field is
// ";"-separated "r/m=value" tokens; the seifert field (everything after the
// fourth comma, so it may itself contain commas) is ";"-separated matrix rows
// of ","-separated integers, empty when no matrix is stored.
struct IngestResult {
  std::vector<KnotRecord> records;
  std::vector<std::string> diagnostics;  // "line N: reason" for rejected rows
};

IngestResult ingest_knot_table(const std::string& path);
IngestResult parse_knot_table(const std::string& text);

// Single record serialisation back to a CSV row (round-trips through parse).
std::string knot_record_to_row(const KnotRecord& rec);

// Seifert matrix text: rows split on ';' or newlines, entries on ','.
SeifertMatrix parse_seifert(const std::string& text);

}  // namespace slicecert
