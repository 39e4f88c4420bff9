#pragma once

namespace ballkit {
namespace detail {

// Refinement ladder: doubled-tensor sizes at level L.
inline int radial_size(int level) { return 2 * ((1 << (4 + level)) + 1); }
inline int lambda_size(int level) { return 1 << (4 + level); }
inline int theta_size(int level) { return 1 << (5 + level); }

inline int radial_level_holding(int m, int cap) {
    int level = 0;
    while (level < cap && radial_size(level) < m) ++level;
    return level;
}

inline int lambda_level_holding(int n, int cap) {
    int level = 0;
    while (level < cap && lambda_size(level) < n) ++level;
    return level;
}

inline int theta_level_holding(int p, int cap) {
    int level = 0;
    while (level < cap && theta_size(level) < p) ++level;
    return level;
}

} // namespace detail
} // namespace ballkit
