#pragma once

#include <string>

namespace leginet::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

/// Current threshold; initialized once from the LEGINET_LOG environment
/// variable (debug|info|warn|error), default warn.
Level threshold();
void set_threshold(Level level);

void write(Level level, const std::string& msg);

inline void debug(const std::string& m) { write(Level::debug, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void error(const std::string& m) { write(Level::error, m); }

}  // namespace leginet::log
