#include "parldoc/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace parldoc::log {

namespace {
std::atomic<Level> g_verbosity{Level::Warn};
std::mutex g_mutex;

const char* level_name(Level level) {
  switch (level) {
    case Level::Error: return "ERROR";
    case Level::Warn: return "WARN";
    case Level::Info: return "INFO";
    case Level::Debug: return "DEBUG";
  }
  return "?";
}
}  // namespace

void set_verbosity(Level level) { g_verbosity.store(level); }
Level verbosity() { return g_verbosity.load(); }

void emit(Level level, const std::string& component, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(g_verbosity.load())) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "[%s] %s: %s\n", level_name(level), component.c_str(),
               message.c_str());
}

}  // namespace parldoc::log
