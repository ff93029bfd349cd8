#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rinkball/math.hpp"

namespace rinkball {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DodgeVariant { SharpTurn, SideStep };

struct MechanicsFlags {
    bool draft_enabled = true;
    DodgeVariant dodge_variant = DodgeVariant::SideStep;
    bool wall_skate_shaping = false;  // mirrors RewardConfig::wall_skate_shaping
    bool operator==(const MechanicsFlags&) const = default;
};

// The playable track is a stadium-shaped annulus: all points whose distance to
// the central spine segment lies in [outer radius - width, outer radius].
struct ArenaConfig {
    double straight_length = 30.0;    // meters, spine segment length
    double semicircle_radius = 12.0;  // meters, outer wall radius at the caps
    double track_width = 8.0;         // meters
    double wall_height = 4.0;         // meters, max skate height on walls
    double fixed_dt = 0.02;           // seconds per tick
    int checkpoint_count = 4;
    int max_episode_ticks = 3000;
    int team_size = 3;                // 1 is a reduced training mode
    MechanicsFlags mechanics;

    bool operator==(const ArenaConfig&) const = default;

    void validate() const {
        if (straight_length <= 0) throw ConfigError("arena.straight_length must be > 0");
        if (semicircle_radius <= 0) throw ConfigError("arena.semicircle_radius must be > 0");
        if (track_width <= 0) throw ConfigError("arena.track_width must be > 0");
        if (wall_height <= 0) throw ConfigError("arena.wall_height must be > 0");
        if (fixed_dt <= 0) throw ConfigError("arena.fixed_dt must be > 0");
        if (track_width >= semicircle_radius)
            throw ConfigError("arena.track_width must be < arena.semicircle_radius");
        if (checkpoint_count != 4)
            throw ConfigError("arena.checkpoint_count must be 4 in this version");
        if (max_episode_ticks <= 0) throw ConfigError("arena.max_episode_ticks must be > 0");
        if (team_size < 1 || team_size > 3)
            throw ConfigError("arena.team_size must be 1, 2 or 3");
    }
};

// Geometry of the track annulus. Progress coordinate s runs anticlockwise
// along the centerline, s = 0 at the goal line (bottom middle); checkpoints
// sit at quarter-perimeter positions, checkpoint 1 on the goal line.
class Track {
public:
    explicit Track(const ArenaConfig& cfg)
        : half_straight_(cfg.straight_length * 0.5),
          outer_(cfg.semicircle_radius),
          inner_(cfg.semicircle_radius - cfg.track_width),
          center_(cfg.semicircle_radius - cfg.track_width * 0.5),
          perimeter_(2.0 * cfg.straight_length + 2.0 * M_PI * center_) {}

    double inner_radius() const { return inner_; }
    double outer_radius() const { return outer_; }
    double centerline_radius() const { return center_; }
    double perimeter() const { return perimeter_; }
    // Normalization scale for observations.
    double half_length() const { return half_straight_ + outer_; }

    Vec2 spine_a() const { return {-half_straight_, 0.0}; }
    Vec2 spine_b() const { return {half_straight_, 0.0}; }

    // Nearest point on the spine segment.
    Vec2 spine_point(Vec2 p) const {
        double qx = clamp(p.x, -half_straight_, half_straight_);
        return {qx, 0.0};
    }

    double spine_distance(Vec2 p) const { return (p - spine_point(p)).norm(); }

    bool contains(Vec2 p, double margin = 0.0) const {
        double d = spine_distance(p);
        return d >= inner_ + margin - 1e-9 && d <= outer_ - margin + 1e-9;
    }

    // Outward radial unit vector at p. p must not lie on the spine.
    Vec2 outward(Vec2 p) const {
        return (p - spine_point(p)).normalized_or({0.0, -1.0});
    }

    // Anticlockwise centerline tangent at p (the direction of play).
    Vec2 tangent_acw(Vec2 p) const { return outward(p).perp(); }

    // Arc-length progress coordinate in [0, perimeter).
    double progress(Vec2 p) const {
        Vec2 q = spine_point(p);
        Vec2 u = p - q;
        double s;
        if (q.x > -half_straight_ + 1e-12 && q.x < half_straight_ - 1e-12) {
            s = u.y < 0.0 ? q.x                                      // bottom straight, +x
                          : half_straight_ + M_PI * center_ + (half_straight_ - q.x);  // top, -x
        } else if (q.x >= half_straight_ - 1e-12) {
            double phi = std::atan2(u.y, u.x);  // [-pi/2, pi/2] on the right cap
            s = half_straight_ + center_ * (phi + M_PI_2);
        } else {
            double phi = std::atan2(u.y, u.x);
            if (phi < M_PI_2) phi += 2.0 * M_PI;  // left cap: [pi/2, 3pi/2]
            s = 3.0 * half_straight_ + M_PI * center_ + center_ * (phi - M_PI_2);
        }
        s = std::fmod(s, perimeter_);
        if (s < 0.0) s += perimeter_;
        return s;
    }

    // Point at progress s, radially offset from the centerline (positive = outward).
    Vec2 point_at(double s, double radial_offset = 0.0) const {
        s = std::fmod(s, perimeter_);
        if (s < 0.0) s += perimeter_;
        const double r = center_ + radial_offset;
        const double cap = M_PI * center_;
        if (s <= half_straight_) return {s, -r};
        s -= half_straight_;
        if (s <= cap) {
            double phi = -M_PI_2 + s / center_;
            return Vec2{half_straight_, 0.0} + Vec2{std::cos(phi), std::sin(phi)} * r;
        }
        s -= cap;
        if (s <= 2.0 * half_straight_) return {half_straight_ - s, r};
        s -= 2.0 * half_straight_;
        if (s <= cap) {
            double phi = M_PI_2 + s / center_;
            return Vec2{-half_straight_, 0.0} + Vec2{std::cos(phi), std::sin(phi)} * r;
        }
        return {-half_straight_ + (s - cap), -r};
    }

    // Forward (anticlockwise) arc distance from s0 to s1.
    double forward_arc(double s0, double s1) const {
        double d = std::fmod(s1 - s0, perimeter_);
        if (d < 0.0) d += perimeter_;
        return d;
    }

    // Clamp to the annulus with a radial margin; returns true if clamped.
    bool clamp_to_track(Vec2& p, double margin) const {
        Vec2 q = spine_point(p);
        Vec2 u = p - q;
        double d = u.norm();
        if (d < 1e-9) {  // on the spine: push to the inner wall, downward
            p = q + Vec2{0.0, -(inner_ + margin)};
            return true;
        }
        double lo = inner_ + margin, hi = outer_ - margin;
        if (d < lo) {
            p = q + u * (lo / d);
            return true;
        }
        if (d > hi) {
            p = q + u * (hi / d);
            return true;
        }
        return false;
    }

    // True iff the open segment from->to stays clear of the inner-wall region.
    // The outer wall is convex and never occludes interior segments; players
    // do not occlude.
    bool line_of_sight(Vec2 from, Vec2 to) const {
        return segment_segment_distance(from, to, spine_a(), spine_b()) >= inner_ - 1e-9;
    }

    // Checkpoint k in 1..4 sits at (k-1)/4 of the perimeter.
    double checkpoint_s(int k) const { return (k - 1) * perimeter_ * 0.25; }

    Vec2 checkpoint_point(int k) const { return point_at(checkpoint_s(k)); }

    // The goal zone is centered on the goal line (checkpoint 1).
    Vec2 goal_center() const { return point_at(0.0); }

    double distance_to_inner_wall(Vec2 p) const { return spine_distance(p) - inner_; }
    double distance_to_outer_wall(Vec2 p) const { return outer_ - spine_distance(p); }

private:
    double half_straight_;
    double outer_;
    double inner_;
    double center_;
    double perimeter_;
};

}  // namespace rinkball
