#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace rinkball {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    constexpr double norm2() const { return x * x + y * y; }

    Vec2 normalized_or(Vec2 fallback) const {
        double n = norm();
        return n > 1e-12 ? Vec2{x / n, y / n} : fallback;
    }
    // 90 degrees counterclockwise.
    constexpr Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double radians) const {
        double c = std::cos(radians), s = std::sin(radians);
        return {c * x - s * y, s * x + c * y};
    }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Rotates `v` toward unit vector `target` by at most `max_radians`.
inline Vec2 rotate_toward(Vec2 v, Vec2 target, double max_radians) {
    double angle = std::atan2(v.cross(target), v.dot(target));
    double step = clamp(angle, -max_radians, max_radians);
    return v.rotated(step);
}

// Minimum distance between segments [a0,a1] and [b0,b1].
inline double segment_segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    const Vec2 d1 = a1 - a0;
    const Vec2 d2 = b1 - b0;
    const Vec2 r = a0 - b0;
    const double A = d1.norm2();
    const double E = d2.norm2();
    const double F = d2.dot(r);
    double s = 0.0, t = 0.0;
    if (A <= 1e-18 && E <= 1e-18) {
        return r.norm();
    } else if (A <= 1e-18) {
        t = clamp(F / E, 0.0, 1.0);
    } else {
        const double C = d1.dot(r);
        if (E <= 1e-18) {
            s = clamp(-C / A, 0.0, 1.0);
        } else {
            const double B = d1.dot(d2);
            const double denom = A * E - B * B;
            if (denom > 1e-18) s = clamp((B * F - C * E) / denom, 0.0, 1.0);
            t = (B * s + F) / E;
            if (t < 0.0) {
                t = 0.0;
                s = clamp(-C / A, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = clamp((B - C) / A, 0.0, 1.0);
            }
        }
    }
    const Vec2 cp1 = a0 + d1 * s;
    const Vec2 cp2 = b0 + d2 * t;
    return (cp1 - cp2).norm();
}

// Deterministic 64-bit generator (splitmix64). Cross-platform stable, unlike
// std distributions; every stochastic choice in the project draws from this.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;

    Rng() = default;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }
    // Uniform in [0, n). Lemire's multiply-shift; bias is negligible for our n.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<__uint128_t>(next_u64() >> 32) * n) >> 32);
    }
    bool operator==(const Rng&) const = default;
};

// Stable stream derivation: fold tags/indices into a fresh seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t salt = 0) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return mix_seed(mix_seed(seed, h), salt);
}

}  // namespace rinkball
