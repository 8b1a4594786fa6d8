#include "lopsa/config.hpp"

#include <thread>

namespace lopsa::config {

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        int parsed = std::stoi(v);
        return parsed > 0 ? parsed : fallback;
    } catch (const std::exception&) {
        return fallback;
    }
}

int g_enum_cap = env_int("LOPSA_ENUM_CAP", 10);
int g_exhaustion_cap = env_int("LOPSA_EXHAUSTION_CAP", 22);
int g_workers = env_int("LOPSA_WORKERS", 0);

} // namespace

const char* version() { return "1.0.0"; }

int enum_cap() { return g_enum_cap; }

void set_enum_cap(int cap) {
    if (cap < 1) throw InvalidInputError("enumeration cap must be positive");
    g_enum_cap = cap;
}

int exhaustion_cap() { return g_exhaustion_cap; }

void set_exhaustion_cap(int cap) {
    if (cap < 1) throw InvalidInputError("exhaustion cap must be positive");
    g_exhaustion_cap = cap;
}

int workers() {
    if (g_workers > 0) return g_workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_workers(int w) {
    if (w < 1) throw InvalidInputError("worker count must be positive");
    g_workers = w;
}

} // namespace lopsa::config
