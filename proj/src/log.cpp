#include "therm/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace therm {

namespace {
std::atomic<int> g_level{static_cast<int>(LogLevel::Info)};
std::mutex g_mu;
const char* name_of(LogLevel l) {
  switch (l) {
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Error: return "error";
  }
  return "?";
}
}  // namespace

void set_log_level(LogLevel level) { g_level.store(static_cast<int>(level)); }

LogLevel log_level() { return static_cast<LogLevel>(g_level.load()); }

bool set_log_level(const std::string& name) {
  if (name == "debug") set_log_level(LogLevel::Debug);
  else if (name == "info") set_log_level(LogLevel::Info);
  else if (name == "warn") set_log_level(LogLevel::Warn);
  else if (name == "error") set_log_level(LogLevel::Error);
  else return false;
  return true;
}

void log_msg(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) < g_level.load()) return;
  std::lock_guard<std::mutex> lock(g_mu);
  std::fprintf(stderr, "[%s] %s\n", name_of(level), msg.c_str());
}

}  // namespace therm
