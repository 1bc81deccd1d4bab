#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <cmath>

#include "parldoc/http_transport.hpp"

namespace parldoc::http {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /path?query
};

SplitUrl split_url(const std::string& url) {
  SplitUrl out;
  auto scheme_end = url.find("://");
  size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  auto path_start = url.find('/', host_start);
  if (path_start == std::string::npos) {
    out.origin = url;
    out.path = "/";
  } else {
    out.origin = url.substr(0, path_start);
    out.path = url.substr(path_start);
  }
  return out;
}

void apply_timeout(httplib::Client& client, double timeout_s) {
  auto usec = static_cast<time_t>(std::llround(timeout_s * 1e6));
  if (usec < 1) usec = 1;
  client.set_connection_timeout(0, usec);
  client.set_read_timeout(usec / 1000000, usec % 1000000);
  client.set_write_timeout(usec / 1000000, usec % 1000000);
}

class HttplibTransport : public Transport {
 public:
  Response post(const std::string& url, const std::string& body,
                const std::string& content_type, const std::string& accept,
                double timeout_s) override {
    auto split = split_url(url);
    httplib::Client client(split.origin);
    apply_timeout(client, timeout_s);
    httplib::Headers headers;
    if (!accept.empty()) headers.emplace("Accept", accept);
    auto result = client.Post(split.path, headers, body, content_type);
    return to_response(result);
  }

  Response get(const std::string& url, const std::string& accept,
               double timeout_s) override {
    auto split = split_url(url);
    httplib::Client client(split.origin);
    apply_timeout(client, timeout_s);
    httplib::Headers headers;
    if (!accept.empty()) headers.emplace("Accept", accept);
    auto result = client.Get(split.path, headers);
    return to_response(result);
  }

 private:
  static Response to_response(const httplib::Result& result) {
    Response response;
    if (!result) {
      response.error = httplib::to_string(result.error());
      return response;
    }
    response.status = result->status;
    response.body = result->body;
    return response;
  }
};

}  // namespace

std::unique_ptr<Transport> make_default_transport() {
  return std::make_unique<HttplibTransport>();
}

}  // namespace parldoc::http
