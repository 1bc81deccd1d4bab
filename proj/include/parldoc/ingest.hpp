#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "parldoc/date.hpp"

namespace parldoc::ingest {

enum class Chamber { Camera, Senato };

std::string chamber_name(Chamber chamber);
std::optional<Chamber> parse_chamber(const std::string& name);

/// Identifies one parliamentary sitting.
struct SessionMetadata {
  std::string legislature_uri;
  std::string session_uri;
  Date date;
  std::string document_url;
  Chamber chamber = Chamber::Camera;

  /// Last path segment of the session URI; used as the output file stem.
  std::string session_id() const;
};

/// One rasterized page of a session document.
struct PageImage {
  int page_number = 0;  // 1-based
  std::string image_bytes;
  int dpi = 0;
};

struct Document {
  SessionMetadata metadata;
  std::vector<PageImage> pages;
};

/// Loads a manifest: a JSON array of flat session records with snake_case
/// keys. Unknown extra fields are ignored; order is preserved.
std::vector<SessionMetadata> load_session_manifest(
    const std::filesystem::path& path);

/// Serialises sessions back to the manifest format (round-trip stable).
std::string serialize_manifest(const std::vector<SessionMetadata>& sessions);

/// Renders a PDF to page images by invoking an external rasterizer.
/// `command_template` takes {input}, {output_dir} and {dpi} placeholders and
/// must leave one PNG per page named page-<n>.png in the output directory.
std::vector<PageImage> rasterize_document(const std::filesystem::path& pdf_path,
                                          int dpi,
                                          const std::string& command_template,
                                          const std::filesystem::path& work_dir);

/// Filename date patterns; names accepted in configuration.
enum class DatePattern { Ymd8, YmdDashed, YmdUnderscored };

std::optional<DatePattern> parse_date_pattern(const std::string& name);

extern const std::vector<DatePattern> kDefaultDatePatterns;

/// Returns the first date recognisable in the filename under the given
/// patterns, earliest match position first. Never returns an invalid date.
std::optional<Date> extract_date_from_filename(
    const std::string& filename,
    const std::vector<DatePattern>& patterns = kDefaultDatePatterns);

}  // namespace parldoc::ingest
