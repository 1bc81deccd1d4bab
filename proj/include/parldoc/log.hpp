#pragma once

#include <string>

namespace parldoc::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

void set_verbosity(Level level);
Level verbosity();

/// Structured one-line log to stderr: "[LEVEL] component: message".
void emit(Level level, const std::string& component, const std::string& message);

inline void error(const std::string& c, const std::string& m) { emit(Level::Error, c, m); }
inline void warn(const std::string& c, const std::string& m) { emit(Level::Warn, c, m); }
inline void info(const std::string& c, const std::string& m) { emit(Level::Info, c, m); }
inline void debug(const std::string& c, const std::string& m) { emit(Level::Debug, c, m); }

}  // namespace parldoc::log
