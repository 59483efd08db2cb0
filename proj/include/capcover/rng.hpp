// Counter-based random streams. Every draw is a pure function of
// (seed, stream, counter), so experiments partitioned across threads by
// stream index reproduce bit-identically at any parallelism degree.
#pragma once

#include <cstdint>

#include "capcover/geometry.hpp"

namespace capcover {

namespace detail {
// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace detail

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64((seed + 0x1905725DB3A6FFC5ULL) ^
                             detail::mix64(stream * detail::kGolden + 1))) {}

    std::uint64_t next_u64() { return detail::mix64(key_ + ++counter_ * detail::kGolden); }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Exactly uniform point on S^2: z uniform on [-1, 1], azimuth uniform.
inline UnitVec sample_uniform(RngStream& rng) {
    const double z = 2.0 * rng.next_double() - 1.0;
    const double phi = 2.0 * kPi * rng.next_double();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    UnitVec p;
    p.x = s * std::cos(phi);
    p.y = s * std::sin(phi);
    p.z = z;
    return p;
}

inline PointQuad sample_quad(RngStream& rng) {
    PointQuad q;
    q.a = sample_uniform(rng);
    q.b = sample_uniform(rng);
    q.c = sample_uniform(rng);
    q.d = sample_uniform(rng);
    return q;
}

}  // namespace capcover
