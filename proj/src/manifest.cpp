#include <json.hpp>

#include "parldoc/errors.hpp"
#include "parldoc/fsutil.hpp"
#include "parldoc/ingest.hpp"

namespace parldoc::ingest {

using ordered_json = nlohmann::ordered_json;

std::string chamber_name(Chamber chamber) {
  return chamber == Chamber::Camera ? "camera" : "senato";
}

std::optional<Chamber> parse_chamber(const std::string& name) {
  if (name == "camera") return Chamber::Camera;
  if (name == "senato") return Chamber::Senato;
  return std::nullopt;
}

std::string SessionMetadata::session_id() const {
  auto pos = session_uri.find_last_of('/');
  std::string id =
      pos == std::string::npos ? session_uri : session_uri.substr(pos + 1);
  if (id.empty()) id = "session";
  return id;
}

namespace {

std::string require_string(const ordered_json& record, const char* key,
                           size_t index) {
  if (!record.contains(key) || !record[key].is_string()) {
    throw ValidationError("manifest record " + std::to_string(index) +
                          ": missing or non-string field '" + key + "'");
  }
  auto value = record[key].get<std::string>();
  if (value.empty()) {
    throw ValidationError("manifest record " + std::to_string(index) +
                          ": field '" + key + "' is empty");
  }
  return value;
}

Chamber infer_chamber(const ordered_json& record, size_t index) {
  if (record.contains("chamber")) {
    if (!record["chamber"].is_string()) {
      throw ValidationError("manifest record " + std::to_string(index) +
                            ": field 'chamber' must be a string");
    }
    auto parsed = parse_chamber(record["chamber"].get<std::string>());
    if (!parsed) {
      throw ValidationError("manifest record " + std::to_string(index) +
                            ": field 'chamber' must be 'camera' or 'senato'");
    }
    return *parsed;
  }
  // Not all manifests carry the chamber; fall back to the URIs.
  auto uri = record.value("session_uri", std::string());
  if (uri.find("senato") != std::string::npos) return Chamber::Senato;
  return Chamber::Camera;
}

}  // namespace

std::vector<SessionMetadata> load_session_manifest(
    const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw EnvironmentError("manifest not found: " + path.string());
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(fsutil::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("manifest " + path.string() + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("manifest " + path.string() + ": expected a JSON array");
  }
  std::vector<SessionMetadata> sessions;
  sessions.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    const auto& record = doc[i];
    if (!record.is_object()) {
      throw ParseError("manifest record " + std::to_string(i) +
                       ": expected an object");
    }
    SessionMetadata meta;
    meta.legislature_uri = require_string(record, "legislature_uri", i);
    meta.session_uri = require_string(record, "session_uri", i);
    std::string date_text = require_string(record, "date", i);
    auto date = Date::parse(date_text);
    if (!date) {
      throw ValidationError("manifest record " + std::to_string(i) +
                            ": field 'date' is not a valid date: '" +
                            date_text + "'");
    }
    meta.date = *date;
    meta.document_url = require_string(record, "document_url", i);
    meta.chamber = infer_chamber(record, i);
    sessions.push_back(std::move(meta));
  }
  return sessions;
}

std::string serialize_manifest(const std::vector<SessionMetadata>& sessions) {
  ordered_json doc = ordered_json::array();
  for (const auto& s : sessions) {
    ordered_json record;
    record["legislature_uri"] = s.legislature_uri;
    record["session_uri"] = s.session_uri;
    record["date"] = s.date.to_string();
    record["document_url"] = s.document_url;
    record["chamber"] = chamber_name(s.chamber);
    doc.push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

}  // namespace parldoc::ingest
