#pragma once

#include <map>
#include <memory>
#include <string>

namespace parldoc::http {

struct Response {
  int status = 0;
  std::string body;
  std::string error;  // transport-level failure, empty on success

  bool transport_ok() const { return error.empty(); }
};

/// Minimal HTTP client surface used by the inference and SPARQL clients.
class Transport {
 public:
  virtual ~Transport() = default;

  virtual Response post(const std::string& url, const std::string& body,
                        const std::string& content_type,
                        const std::string& accept, double timeout_s) = 0;

  virtual Response get(const std::string& url, const std::string& accept,
                       double timeout_s) = 0;
};

/// cpp-httplib backed transport. HTTPS endpoints require OpenSSL, which is
/// linked in.
std::unique_ptr<Transport> make_default_transport();

}  // namespace parldoc::http
