#include <json.hpp>

#include "parldoc/errors.hpp"
#include "parldoc/inference.hpp"
#include "parldoc/log.hpp"

namespace parldoc::inference {

using json = nlohmann::json;

std::vector<OcrLayoutItem> parse_ocr_layout(const std::string& payload) {
  json doc;
  try {
    doc = json::parse(payload);
  } catch (const json::parse_error& e) {
    throw ProtocolError(std::string("OCR layout payload is not JSON: ") + e.what(),
                        payload);
  }
  if (!doc.is_array()) {
    throw ProtocolError("OCR layout payload is not a JSON array", payload);
  }
  std::vector<OcrLayoutItem> items;
  items.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    if (!entry.is_object() || !entry.contains("bbox") ||
        !entry["bbox"].is_array() || entry["bbox"].size() != 4) {
      throw ProtocolError("OCR layout item " + std::to_string(i) +
                              " has no 4-element bbox",
                          payload);
    }
    OcrLayoutItem item;
    try {
      item.x1 = static_cast<int>(entry["bbox"][0].get<double>());
      item.y1 = static_cast<int>(entry["bbox"][1].get<double>());
      item.x2 = static_cast<int>(entry["bbox"][2].get<double>());
      item.y2 = static_cast<int>(entry["bbox"][3].get<double>());
    } catch (const json::exception&) {
      throw ProtocolError("OCR layout item " + std::to_string(i) +
                              " has non-numeric bbox",
                          payload);
    }
    if (item.x1 > item.x2 || item.y1 > item.y2) {
      throw ProtocolError("OCR layout item " + std::to_string(i) +
                              " has an inverted bbox",
                          payload);
    }
    item.category = entry.value("category", std::string());
    item.text = entry.value("text", std::string());
    items.push_back(std::move(item));
  }
  return items;
}

std::string flatten_layout(const std::vector<OcrLayoutItem>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += items[i].text;
  }
  return out;
}

ChatRequest build_ocr_request(const ingest::PageImage& page,
                              const InferenceConfig& config,
                              const std::string& prompt_text) {
  ChatRequest request;
  request.model = config.model_name;
  request.image_png = page.image_bytes;
  request.prompt = prompt_text;
  request.temperature = config.temperature;
  return request;
}

PageTranscription ocr_page(const ingest::PageImage& page,
                           const InferenceConfig& config, ChatBackend& backend,
                           const std::string& prompt_text) {
  auto request = build_ocr_request(page, config, prompt_text);
  std::string content = backend.complete(request);
  auto items = parse_ocr_layout(content);
  if (items.empty()) {
    log::debug("inference",
               "page " + std::to_string(page.page_number) + ": empty layout");
  }
  PageTranscription out;
  out.page_number = page.page_number;
  out.text = flatten_layout(items);
  return out;
}

}  // namespace parldoc::inference
