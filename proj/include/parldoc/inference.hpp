#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parldoc/http_transport.hpp"
#include "parldoc/ingest.hpp"

namespace parldoc::inference {

struct InferenceConfig {
  std::string endpoint_url;
  std::string model_name;
  double timeout_s = 120.0;
  int max_retries = 3;
  double temperature = 0.0;
  int backoff_initial_ms = 200;

  void validate() const;  // throws ConfigError on bad values
};

/// One chat-completions call: a page image plus a text prompt.
struct ChatRequest {
  std::string model;
  std::string image_png;  // raw bytes; shipped as a base64 data URL
  std::string prompt;
  double temperature = 0.0;
};

/// Canonical request body (sorted keys, compact dump) — the bytes that go
/// on the wire and the input to the fixture fingerprint.
std::string chat_request_body(const ChatRequest& request);

/// sha256 hex of the canonical body; names mock fixture files.
std::string request_fingerprint(const ChatRequest& request);

/// Extracts choices[0].message.content; throws ProtocolError otherwise.
std::string extract_completion_text(const std::string& response_body);

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  /// Returns the completion text for the request.
  virtual std::string complete(const ChatRequest& request) = 0;
};

/// Talks to an OpenAI-compatible chat-completions endpoint with retries and
/// exponential backoff.
class HttpChatBackend : public ChatBackend {
 public:
  HttpChatBackend(InferenceConfig config,
                  std::shared_ptr<http::Transport> transport = nullptr);

  std::string complete(const ChatRequest& request) override;

 private:
  InferenceConfig config_;
  std::shared_ptr<http::Transport> transport_;
};

/// Replays canned responses from `<dir>/<sha256-of-request>.json`, each file
/// holding the raw response body. Deterministic and offline.
class MockChatBackend : public ChatBackend {
 public:
  explicit MockChatBackend(std::filesystem::path fixtures_dir);

  std::string complete(const ChatRequest& request) override;

  int hits() const { return hits_.load(); }

  /// Writes a fixture for the request (test and capture tooling).
  static void write_fixture(const std::filesystem::path& fixtures_dir,
                            const ChatRequest& request,
                            const std::string& response_body);

 private:
  std::filesystem::path fixtures_dir_;
  std::atomic<int> hits_{0};
};

// ---------------------------------------------------------------------------
// OCR stage

struct OcrLayoutItem {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::string category;
  std::string text;
};

struct PageTranscription {
  int page_number = 0;
  std::string text;
};

std::vector<OcrLayoutItem> parse_ocr_layout(const std::string& payload);

/// Reading-order concatenation of item texts separated by blank lines;
/// layout categories are dropped here.
std::string flatten_layout(const std::vector<OcrLayoutItem>& items);

ChatRequest build_ocr_request(const ingest::PageImage& page,
                              const InferenceConfig& config,
                              const std::string& prompt_text);

PageTranscription ocr_page(const ingest::PageImage& page,
                           const InferenceConfig& config, ChatBackend& backend,
                           const std::string& prompt_text);

// ---------------------------------------------------------------------------
// Semantic labelling stage

enum class ElementType { PageHeader, SectionHeader, Text, Note, Footnote, Table };

std::string element_type_name(ElementType type);
std::optional<ElementType> parse_element_type(const std::string& name);

inline constexpr const char* kSpeakerNone = "none";
inline constexpr const char* kSpeakerUnknown = "unknown";

struct LabelledElement {
  ElementType type = ElementType::Text;
  std::string content;
  std::string speaker;  // uppercased name, or the none/unknown sentinels

  bool speaker_is_sentinel() const {
    return speaker == kSpeakerNone || speaker == kSpeakerUnknown;
  }
};

/// Substitutes the {ocr_text} slot of the labelling prompt template.
std::string assemble_labelling_prompt(const std::string& template_text,
                                      const std::string& ocr_text);

/// Parses and validates the model's element array. Throws ValidationError
/// on a type outside the six labels or empty content, naming the element.
std::vector<LabelledElement> parse_labelled_elements(const std::string& payload);

ChatRequest build_label_request(const ingest::PageImage& page,
                                const std::string& ocr_text,
                                const InferenceConfig& config,
                                const std::string& prompt_template);

/// Runs the labelling call with the documented recovery ladder: strip
/// non-JSON pre/postamble and re-parse, then one re-query at temperature 0.
/// Persistent failure raises LabellingError.
std::vector<LabelledElement> label_page(const ingest::PageImage& page,
                                        const std::string& ocr_text,
                                        const InferenceConfig& config,
                                        ChatBackend& backend,
                                        const std::string& prompt_template);

}  // namespace parldoc::inference
