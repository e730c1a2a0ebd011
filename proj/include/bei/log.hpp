#pragma once

// Minimal stderr logging, verbosity from the BEI_LOG environment variable
// (error, warn, info, debug; default warn).

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>

namespace bei {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

inline LogLevel parse_log_level(std::string_view s) {
  if (s == "error") return LogLevel::error;
  if (s == "info") return LogLevel::info;
  if (s == "debug") return LogLevel::debug;
  return LogLevel::warn;
}

inline LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("BEI_LOG");
    return env ? parse_log_level(env) : LogLevel::warn;
  }();
  return level;
}

inline void log_message(LogLevel level, const std::string& msg) {
  if (level > log_threshold()) return;
  static std::mutex m;
  static constexpr const char* names[] = {"error", "warn", "info", "debug"};
  std::lock_guard lock(m);
  std::cerr << "[bei " << names[static_cast<int>(level)] << "] " << msg << '\n';
}

}  // namespace bei
