#include "dyckpaint/caps.hpp"

#include <cstdlib>
#include <string>

namespace dyckpaint {
namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    return static_cast<std::uint64_t>(v);
}

Caps resolve() {
    Caps c;
    c.enum_paths = env_u64("DYCKPAINT_ENUM_CAP", c.enum_paths);
    c.color_product = env_u64("DYCKPAINT_COLOR_CAP", c.color_product);
    c.solver_vertices = static_cast<int>(
        env_u64("DYCKPAINT_SOLVER_CAP", static_cast<std::uint64_t>(c.solver_vertices)));
    return c;
}

} // namespace

const Caps& caps() {
    static const Caps instance = resolve();
    return instance;
}

} // namespace dyckpaint
