#pragma once

namespace cremona {

// Desk-scale guard caps. Every guarded operation has a built-in default;
// setting the environment variable CREMONA_DESK_GUARD to an integer raises
// (never lowers) all caps to that value. Exceeding a cap is an error carrying
// the guard's name, not a wrong answer.
int guard_cap(int default_cap);

}  // namespace cremona
