#pragma once

#include <string>

namespace therm {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

void set_log_level(LogLevel level);
LogLevel log_level();
bool set_log_level(const std::string& name);  // "debug"|"info"|"warn"|"error"

// All diagnostics go to stderr; files are the only machine outputs.
void log_msg(LogLevel level, const std::string& msg);

inline void log_debug(const std::string& m) { log_msg(LogLevel::Debug, m); }
inline void log_info(const std::string& m) { log_msg(LogLevel::Info, m); }
inline void log_warn(const std::string& m) { log_msg(LogLevel::Warn, m); }
inline void log_error(const std::string& m) { log_msg(LogLevel::Error, m); }

}  // namespace therm
