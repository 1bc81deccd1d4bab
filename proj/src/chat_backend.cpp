#include <json.hpp>

#include <thread>

#include "parldoc/digest.hpp"
#include "parldoc/errors.hpp"
#include "parldoc/fsutil.hpp"
#include "parldoc/inference.hpp"
#include "parldoc/log.hpp"

namespace parldoc::inference {

using json = nlohmann::json;

void InferenceConfig::validate() const {
  if (endpoint_url.empty()) throw ConfigError("inference endpoint_url is empty");
  if (model_name.empty()) throw ConfigError("inference model_name is empty");
  if (timeout_s <= 0) throw ConfigError("inference timeout must be > 0");
  if (max_retries < 0) throw ConfigError("inference max_retries must be >= 0");
  if (temperature < 0.0 || temperature > 1.0) {
    throw ConfigError("inference temperature must be in [0, 1]");
  }
}

std::string chat_request_body(const ChatRequest& request) {
  json image_part;
  image_part["type"] = "image_url";
  image_part["image_url"]["url"] =
      "data:image/png;base64," + digest::base64_encode(request.image_png);
  json text_part;
  text_part["type"] = "text";
  text_part["text"] = request.prompt;

  json body;
  body["model"] = request.model;
  body["temperature"] = request.temperature;
  body["messages"] = json::array(
      {{{"role", "user"}, {"content", json::array({image_part, text_part})}}});
  return body.dump();
}

std::string request_fingerprint(const ChatRequest& request) {
  return digest::sha256_hex(chat_request_body(request));
}

std::string extract_completion_text(const std::string& response_body) {
  json payload;
  try {
    payload = json::parse(response_body);
  } catch (const json::parse_error& e) {
    throw ProtocolError(std::string("completion response is not JSON: ") + e.what(),
                        response_body);
  }
  if (!payload.contains("choices") || !payload["choices"].is_array() ||
      payload["choices"].empty()) {
    throw ProtocolError("completion response has no choices", response_body);
  }
  const auto& first = payload["choices"][0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    throw ProtocolError("completion response has no message content",
                        response_body);
  }
  return first["message"]["content"].get<std::string>();
}

HttpChatBackend::HttpChatBackend(InferenceConfig config,
                                 std::shared_ptr<http::Transport> transport)
    : config_(std::move(config)),
      transport_(transport ? std::move(transport)
                           : std::shared_ptr<http::Transport>(
                                 http::make_default_transport())) {
  config_.validate();
}

std::string HttpChatBackend::complete(const ChatRequest& request) {
  const std::string body = chat_request_body(request);
  std::string last_failure;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::milliseconds(config_.backoff_initial_ms)
                   * (1 << (attempt - 1));
      log::warn("inference", "retrying request in " +
                                 std::to_string(delay.count()) + "ms (" +
                                 last_failure + ")");
      std::this_thread::sleep_for(delay);
    }
    auto response = transport_->post(config_.endpoint_url, body,
                                     "application/json", "application/json",
                                     config_.timeout_s);
    if (!response.transport_ok()) {
      last_failure = response.error;
      continue;
    }
    bool retryable = response.status == 408 || response.status == 429 ||
                     response.status >= 500;
    if (retryable) {
      last_failure = "HTTP " + std::to_string(response.status);
      continue;
    }
    if (response.status != 200) {
      throw BackendError("inference endpoint returned HTTP " +
                         std::to_string(response.status) + ": " + response.body);
    }
    return extract_completion_text(response.body);
  }
  throw BackendError("inference endpoint unreachable after " +
                     std::to_string(config_.max_retries + 1) + " attempts: " +
                     last_failure);
}

MockChatBackend::MockChatBackend(std::filesystem::path fixtures_dir)
    : fixtures_dir_(std::move(fixtures_dir)) {}

std::string MockChatBackend::complete(const ChatRequest& request) {
  auto path = fixtures_dir_ / (request_fingerprint(request) + ".json");
  if (!std::filesystem::exists(path)) {
    throw BackendError("no mock fixture for request " +
                       request_fingerprint(request) + " under " +
                       fixtures_dir_.string());
  }
  hits_.fetch_add(1);
  return extract_completion_text(fsutil::read_file(path));
}

void MockChatBackend::write_fixture(const std::filesystem::path& fixtures_dir,
                                    const ChatRequest& request,
                                    const std::string& response_body) {
  fsutil::write_file_atomic(
      fixtures_dir / (request_fingerprint(request) + ".json"), response_body);
}

}  // namespace parldoc::inference
