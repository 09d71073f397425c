#ifndef TESTLENS_RENAME_IO_H_
#define TESTLENS_RENAME_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "testlens/rename.h"

namespace testlens {

// Rename logs.
//
// CSV: header row naming the columns old_name, new_name and optionally file
// and commit, in any order. Empty file/commit cells mean "absent".
// JSON: array of objects with keys old_name, new_name and optional file,
// commit (string or null). A numeric "score" key, as written by rename
// detection, is accepted and ignored. Other keys are rejected.
std::vector<RenameEvent> parse_rename_csv(std::string_view text);
std::vector<RenameEvent> parse_rename_json(std::string_view text);

// Chooses the parser by extension (.csv / .json), falling back to sniffing
// for a leading '['.
std::vector<RenameEvent> load_rename_events(const std::string& path);

nlohmann::json event_to_json(const RenameEvent& event);

// Classified-record JSON: the event keys plus
//   "form", "semantics", "old_pattern", "new_pattern",
//   "added": [str], "removed": [str],
//   "pairs": [{"added": str, "removed": str, "relation": str}]
nlohmann::json classification_to_json(const RenameClassification& c);

// Inverse of classification_to_json. Tags are rebuilt from the pattern
// strings against a fresh split of each name. Throws InvalidInput.
RenameClassification classification_from_json(const nlohmann::json& j);
std::vector<RenameClassification> parse_classified_json(std::string_view text);

// "json", "csv" or "md". Throws UsageError for anything else.
std::string render_classifications(const std::vector<RenameClassification>& items,
                                   std::string_view format);

}  // namespace testlens

#endif  // TESTLENS_RENAME_IO_H_
