#include "cremona/desk_guard.hpp"

#include <cstdlib>
#include <string>

namespace cremona {

int guard_cap(int default_cap) {
    const char* raw = std::getenv("CREMONA_DESK_GUARD");
    if (raw == nullptr || *raw == '\0') return default_cap;
    try {
        const int requested = std::stoi(raw);
        if (requested > default_cap) return requested;
    } catch (...) {
        // Unparsable values leave the default in place.
    }
    return default_cap;
}

}  // namespace cremona
