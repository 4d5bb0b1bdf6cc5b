#include "leginet/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace leginet::log {

static Level g_threshold = [] {
    const char* env = std::getenv("LEGINET_LOG");
    if (!env) return Level::warn;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    if (std::strcmp(env, "info") == 0) return Level::info;
    if (std::strcmp(env, "error") == 0) return Level::error;
    return Level::warn;
}();

Level threshold() { return g_threshold; }
void set_threshold(Level level) { g_threshold = level; }

void write(Level level, const std::string& msg) {
    if (level < g_threshold) return;
    static const char* names[] = {"debug", "info", "warn", "error"};
    std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

}  // namespace leginet::log
