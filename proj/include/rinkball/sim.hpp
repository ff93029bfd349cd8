#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rinkball/arena.hpp"
#include "rinkball/state.hpp"

namespace rinkball {

// Fixed tuning constants of the simulation. These are not config keys; the
// test oracles integrate against the same values.
namespace phys {
inline constexpr double player_radius = 0.4;
inline constexpr double accel_rate = 8.0;        // m/s^2, Accelerate
inline constexpr double pump_accel_wall = 12.0;  // m/s^2 while on a wall
inline constexpr double pump_accel_flat = 4.0;   // m/s^2 on the floor
inline constexpr double max_speed = 10.0;        // m/s
inline constexpr double max_speed_attack = 14.0; // m/s during attack impulses
inline constexpr double keep_along = 0.995;      // per-tick velocity keep, skating
inline constexpr double keep_lateral = 0.90;     // per-tick keep, sideways (carving)
inline constexpr double keep_brake = 0.85;       // per-tick keep while braking
inline constexpr double keep_hurt = 0.93;        // per-tick keep while tumbled
inline constexpr double turn_rate = 3.0;         // rad/s
inline constexpr double air_turn_factor = 0.5;
inline constexpr double dash_accel = 30.0;
inline constexpr double dive_accel = 40.0;
inline constexpr double draft_range = 3.0;           // m
inline constexpr double draft_half_angle = 15.0 * M_PI / 180.0;  // 30 degree cone
inline constexpr double draft_accel_bonus = 1.3;
inline constexpr double draft_min_speed = 3.0;
inline constexpr double wall_grab_distance = 0.8;  // m beyond the clamp margin
inline constexpr double wall_min_speed = 6.0;      // m/s to climb
inline constexpr double wall_climb_rate = 2.5;     // m/s at max_speed, scaled by speed
inline constexpr double wall_slide_rate = 3.0;     // m/s decay while slow on wall
inline constexpr double wall_air_decay = 2.0;      // m/s decay while airborne
inline constexpr double tackle_radius = 1.2;
inline constexpr double tackle_height_window = 1.5;  // max wall-height difference
inline constexpr double catch_radius = 1.0;
inline constexpr double catch_reach_ground = 1.8;  // max ball height, grounded
inline constexpr double catch_reach_air = 2.8;     // max ball height, airborne
inline constexpr double ball_carry_height = 1.0;
inline constexpr double throw_speed = 15.0;
inline constexpr double throw_distance = 12.0;  // fixed throw range
inline constexpr double pass_speed = 18.0;
inline constexpr double goal_radius = 2.0;
inline constexpr double gravity = 9.81;
inline constexpr double ball_bounce_keep = 0.6;   // radial restitution off walls
inline constexpr double ball_roll_keep = 0.97;    // per-tick rolling keep
inline constexpr double ball_land_keep = 0.8;
inline constexpr double dodge_side_step = 1.5;    // m
inline constexpr double dodge_sharp_turn = 120.0 * M_PI / 180.0;
inline constexpr int hurt_ticks_victim = 50;
inline constexpr int hurt_ticks_tumble = 25;  // combo finisher self-penalty
inline constexpr int dash_cooldown = 15;
inline constexpr int dodge_cooldown = 45;
inline constexpr int jump_cooldown = 30;
inline constexpr int throw_lock_ticks = 10;
inline constexpr int call_for_pass_ticks = 45;
inline constexpr int dash_impulse_ticks = 10;
inline constexpr int dive_impulse_ticks = 12;
inline constexpr int dodge_impulse_ticks = 10;
inline constexpr int jump_air_ticks = 20;
inline constexpr int uppercut_air_ticks = 18;
inline constexpr int ball_no_catch_ticks = 8;
inline constexpr double wall_mask_distance = 2.0;  // UpInner/UpOuter masked beyond this
}  // namespace phys

inline bool is_attack_impulse(ImpulseKind k) {
    return k == ImpulseKind::Dash || k == ImpulseKind::Dive || k == ImpulseKind::DodgeDive ||
           k == ImpulseKind::Uppercut;
}

// Points a goal is worth: 1 for the activating lap plus 1 per extra completed
// lap, capped at 3.
inline int goal_points(const TeamProgress& progress) {
    if (!progress.goal_active)
        throw std::logic_error("goal_points called with inactive goal");
    return std::min(progress.laps_completed, 3);
}

inline SimState new_match(const ArenaConfig& config, std::uint64_t seed) {
    config.validate();
    Track track(config);
    SimState st;
    st.config = config;
    st.rng_stream = Rng(mix_seed(seed, "sim"));

    const double spawn_s = track.perimeter() - 1.2;  // just behind the goal line
    const Vec2 face = track.tangent_acw(track.point_at(spawn_s));
    const double w = config.track_width;
    for (int team = 0; team < 2; ++team) {
        for (int slot = 0; slot < config.team_size; ++slot) {
            PlayerState p;
            p.player_id = team * config.team_size + slot;
            p.team = team == 0 ? Team::A : Team::B;
            double radial = w * (0.075 + 0.15 * slot);
            p.position = track.point_at(spawn_s, team == 0 ? -radial : radial);
            track.clamp_to_track(p.position, phys::player_radius);
            p.heading = face;
            st.players.push_back(p);
        }
    }
    st.ball.position = track.goal_center();
    st.ball.height = 0.0;
    st.ball.in_flight = false;
    return st;
}

namespace detail {

inline int event_sort_key(const GameEvent& e) {
    switch (e.kind) {
        case GameEvent::Kind::CheckpointProgressed:
        case GameEvent::Kind::LapCompleted:
        case GameEvent::Kind::Scored: return team_index(e.team);
        case GameEvent::Kind::PossessionChanged: return team_index(e.to_team);
        case GameEvent::Kind::Tackled: return e.attacker;
        case GameEvent::Kind::BallDropped: return e.player;
        case GameEvent::Kind::EpisodeEnd: return 0;
    }
    return 0;
}

inline void drop_ball(SimState& st, PlayerState& holder, std::vector<GameEvent>& events) {
    holder.has_ball = false;
    st.ball.holder.reset();
    st.ball.in_flight = false;
    st.ball.position = holder.position;
    st.ball.height = 0.0;
    st.ball.velocity = holder.velocity * 0.5;
    st.ball.vertical_vel = 0.0;
    st.ball.no_catch_timer = 0;
    st.ball.last_toucher = holder.player_id;
    events.push_back({.kind = GameEvent::Kind::BallDropped,
                      .tick = st.tick,
                      .player = holder.player_id});
}

inline void release_ball_flight(SimState& st, PlayerState& thrower, Vec2 dir, double speed,
                                double range) {
    thrower.has_ball = false;
    st.ball.holder.reset();
    st.ball.in_flight = true;
    st.ball.position = thrower.position;
    st.ball.height = phys::ball_carry_height;
    st.ball.velocity = dir * speed;
    // Lob so the ball comes back down to carry height after `range`.
    st.ball.vertical_vel = 0.5 * phys::gravity * (range / speed);
    st.ball.no_catch_timer = phys::ball_no_catch_ticks;
    st.ball.last_toucher = thrower.player_id;
}

inline bool throw_scores(const Track& track, const SimState& st, Vec2 from, Vec2 dir) {
    const Vec2 goal = track.goal_center();
    const Vec2 to = from + dir * phys::throw_distance;
    const double miss = segment_segment_distance(from, to, goal, goal);
    return miss <= phys::goal_radius && track.line_of_sight(from, goal);
}

// Pass target: allies with line of sight; active callers first, then nearest.
inline int pass_target(const Track& track, const SimState& st, const PlayerState& passer) {
    int best = -1;
    double best_dist = 0.0;
    bool best_calling = false;
    for (const auto& p : st.players) {
        if (p.team != passer.team || p.player_id == passer.player_id) continue;
        if (!track.line_of_sight(passer.position, p.position)) continue;
        const bool calling = p.call_for_pass_timer > 0;
        const double dist = (p.position - passer.position).norm();
        if (best < 0 || (calling && !best_calling) ||
            (calling == best_calling && dist < best_dist)) {
            best = p.player_id;
            best_dist = dist;
            best_calling = calling;
        }
    }
    return best;
}

}  // namespace detail

// One deterministic tick. `controls` holds one intent per player, indexed by
// player id. Impulses and ball ops fire this tick; callers running a decision
// interval must clear them after the first tick (see run_decision_interval).
inline std::vector<GameEvent> fixed_update(SimState& st,
                                           const std::vector<ControlIntent>& controls) {
    std::vector<GameEvent> events;
    if (st.done) return events;

    const Track track(st.config);
    const double dt = st.config.fixed_dt;
    const int n = st.player_count();

    // --- Phase 1: ball ops ---
    for (int id = 0; id < n && !st.done; ++id) {
        auto& p = st.player(id);
        const auto& intent = controls[static_cast<size_t>(id)];
        if (intent.ball_op == BallOpKind::None || p.hurt()) continue;
        switch (intent.ball_op) {
            case BallOpKind::Throw: {
                if (!p.has_ball || p.throw_lock > 0) break;
                p.last_action = {intent.action_id, st.tick};
                const Vec2 dir = intent.throw_dir.normalized_or(p.heading);
                auto& prog = st.team_progress(p.team);
                if (prog.goal_active && detail::throw_scores(track, st, p.position, dir)) {
                    const int pts = goal_points(prog);
                    p.has_ball = false;
                    st.ball.holder.reset();
                    st.ball.in_flight = false;
                    st.ball.position = track.goal_center();
                    st.ball.height = 0.0;
                    st.ball.velocity = {};
                    st.ball.vertical_vel = 0.0;
                    st.score[team_index(p.team)] += pts;
                    prog.reset();
                    events.push_back({.kind = GameEvent::Kind::Scored,
                                      .tick = st.tick,
                                      .team = p.team,
                                      .points = pts});
                    st.done = true;
                    st.end_reason = EndReason::Score;
                    events.push_back({.kind = GameEvent::Kind::EpisodeEnd,
                                      .tick = st.tick,
                                      .end_reason = EndReason::Score});
                } else {
                    detail::release_ball_flight(st, p, dir, phys::throw_speed,
                                                phys::throw_distance);
                }
                break;
            }
            case BallOpKind::Pass: {
                if (!p.has_ball || p.throw_lock > 0) break;
                const int target = detail::pass_target(track, st, p);
                if (target < 0) break;  // masked upstream; keep the ball
                p.last_action = {intent.action_id, st.tick};
                const Vec2 to = st.player(target).position - p.position;
                const double range = std::max(1.0, to.norm());
                detail::release_ball_flight(st, p, to.normalized_or(p.heading),
                                            phys::pass_speed, range);
                break;
            }
            case BallOpKind::CallForPass: {
                if (p.has_ball) break;
                p.last_action = {intent.action_id, st.tick};
                p.call_for_pass_timer = phys::call_for_pass_ticks;
                break;
            }
            default: break;
        }
    }
    if (st.done) {
        ++st.tick;
        return events;
    }

    // --- Phase 2: impulse starts ---
    for (int id = 0; id < n; ++id) {
        auto& p = st.player(id);
        const auto& intent = controls[static_cast<size_t>(id)];
        if (intent.impulse == ImpulseKind::None || p.hurt() || p.airborne()) continue;
        p.last_action = {intent.action_id, st.tick};
        p.attack_spent = false;
        switch (intent.impulse) {
            case ImpulseKind::Dash:
                p.active_impulse = ImpulseKind::Dash;
                p.impulse_timer = phys::dash_impulse_ticks;
                p.dash_cooldown = phys::dash_cooldown;
                break;
            case ImpulseKind::Dive:
                p.active_impulse = ImpulseKind::Dive;
                p.impulse_timer = phys::dive_impulse_ticks;
                p.dash_cooldown = phys::dash_cooldown;
                break;
            case ImpulseKind::DodgeDive:
                p.active_impulse = ImpulseKind::DodgeDive;
                p.impulse_timer = phys::dive_impulse_ticks;
                p.dash_cooldown = phys::dash_cooldown;
                break;
            case ImpulseKind::Uppercut:
                p.active_impulse = ImpulseKind::Uppercut;
                p.impulse_timer = phys::uppercut_air_ticks;
                p.air_timer = phys::uppercut_air_ticks;
                p.jump_cooldown = phys::jump_cooldown;
                break;
            case ImpulseKind::Jump: {
                p.active_impulse = ImpulseKind::Jump;
                const int air =
                    phys::jump_air_ticks + static_cast<int>(p.wall_height * 4.0);
                p.impulse_timer = air;
                p.air_timer = air;
                p.jump_cooldown = phys::jump_cooldown;
                break;
            }
            case ImpulseKind::Dodge: {
                p.active_impulse = ImpulseKind::Dodge;
                p.impulse_timer = phys::dodge_impulse_ticks;
                p.dodge_cooldown = phys::dodge_cooldown;
                const double side =
                    p.heading.cross(intent.desired_heading) >= 0.0 ? 1.0 : -1.0;
                if (st.config.mechanics.dodge_variant == DodgeVariant::SharpTurn) {
                    p.heading = p.heading.rotated(side * phys::dodge_sharp_turn);
                    p.velocity = p.heading * p.velocity.norm();
                } else {
                    p.position += p.heading.perp() * (side * phys::dodge_side_step);
                    track.clamp_to_track(p.position, phys::player_radius);
                }
                break;
            }
            default: break;
        }
    }

    // --- Phase 3: movement ---
    std::vector<double> s_before(static_cast<size_t>(n));
    for (int id = 0; id < n; ++id)
        s_before[static_cast<size_t>(id)] = track.progress(st.player(id).position);
    const std::optional<int> holder_through_move = st.ball.holder;

    for (int id = 0; id < n; ++id) {
        auto& p = st.player(id);
        const auto& intent = controls[static_cast<size_t>(id)];
        if (p.hurt()) {
            p.velocity *= phys::keep_hurt;
            p.position += p.velocity * dt;
        } else if (p.airborne()) {
            p.heading = rotate_toward(p.heading, intent.desired_heading,
                                      phys::turn_rate * phys::air_turn_factor * dt);
            p.position += p.velocity * dt;
        } else {
            p.heading = rotate_toward(p.heading, intent.desired_heading, phys::turn_rate * dt);
            const Vec2 along = p.heading * p.velocity.dot(p.heading);
            const Vec2 lateral = p.velocity - along;
            const double keep =
                intent.locomotion == Locomotion::Brake ? phys::keep_brake : phys::keep_along;
            p.velocity = along * keep + lateral * phys::keep_lateral;

            double accel = 0.0;
            if (is_attack_impulse(p.active_impulse) && p.impulse_timer > 0) {
                accel = p.active_impulse == ImpulseKind::Dash ? phys::dash_accel
                                                              : phys::dive_accel;
            } else if (intent.locomotion == Locomotion::Accelerate) {
                accel = phys::accel_rate;
            } else if (intent.locomotion == Locomotion::Pump) {
                accel = p.wall_height > 0.0 ? phys::pump_accel_wall : phys::pump_accel_flat;
            }
            if (accel > 0.0 && st.config.mechanics.draft_enabled) {
                for (int oid = 0; oid < n; ++oid) {
                    if (oid == id) continue;
                    const auto& q = st.player(oid);
                    const double qs = q.velocity.norm();
                    if (qs < phys::draft_min_speed) continue;
                    const Vec2 offset = p.position - q.position;
                    const double dist = offset.norm();
                    if (dist > phys::draft_range || dist < 1e-9) continue;
                    const Vec2 wake = (q.velocity / qs) * -1.0;
                    if (offset.dot(wake) / dist >= std::cos(phys::draft_half_angle)) {
                        accel *= phys::draft_accel_bonus;
                        break;
                    }
                }
            }
            p.velocity += p.heading * (accel * dt);
            const double vmax = is_attack_impulse(p.active_impulse) && p.impulse_timer > 0
                                    ? phys::max_speed_attack
                                    : phys::max_speed;
            const double speed = p.velocity.norm();
            if (speed > vmax) p.velocity *= vmax / speed;
            p.position += p.velocity * dt;
        }
        if (track.clamp_to_track(p.position, phys::player_radius)) {
            // Sliding contact: cancel the radial velocity component.
            const Vec2 u = track.outward(p.position);
            p.velocity -= u * p.velocity.dot(u);
        }
    }

    // --- Phase 4: wall height ---
    for (int id = 0; id < n; ++id) {
        auto& p = st.player(id);
        const double contact = phys::player_radius + phys::wall_grab_distance;
        const bool adjacent = track.distance_to_inner_wall(p.position) <= contact ||
                              track.distance_to_outer_wall(p.position) <= contact;
        if (p.airborne()) {
            p.wall_height = std::max(0.0, p.wall_height - phys::wall_air_decay * dt);
        } else if (adjacent) {
            const double speed = p.velocity.norm();
            if (speed >= phys::wall_min_speed) {
                p.wall_height = std::min(
                    st.config.wall_height,
                    p.wall_height + phys::wall_climb_rate * (speed / phys::max_speed) * dt);
            } else {
                p.wall_height = std::max(0.0, p.wall_height - phys::wall_slide_rate * dt);
            }
        } else {
            p.wall_height = 0.0;  // left the wall while grounded
        }
    }

    // --- Phase 5: tackles (attacker order = ascending id) ---
    for (int id = 0; id < n; ++id) {
        auto& a = st.player(id);
        if (!is_attack_impulse(a.active_impulse) || a.impulse_timer <= 0 || a.attack_spent ||
            a.hurt())
            continue;
        int victim = -1;
        double victim_dist = 0.0;
        for (int vid = 0; vid < n; ++vid) {
            const auto& v = st.player(vid);
            if (v.team == a.team || v.hurt()) continue;
            if (v.active_impulse == ImpulseKind::Dodge && v.impulse_timer > 0) continue;
            if (v.airborne() && a.active_impulse != ImpulseKind::Uppercut) continue;
            if (std::abs(a.wall_height - v.wall_height) > phys::tackle_height_window) continue;
            const double dist = (v.position - a.position).norm();
            if (dist > phys::tackle_radius) continue;
            if (victim < 0 || dist < victim_dist) {
                victim = vid;
                victim_dist = dist;
            }
        }
        if (victim < 0) continue;
        auto& v = st.player(victim);
        a.attack_spent = true;
        v.hurt_timer = phys::hurt_ticks_victim;
        v.air_timer = 0;
        v.active_impulse = ImpulseKind::None;
        v.impulse_timer = 0;
        events.push_back({.kind = GameEvent::Kind::Tackled,
                          .tick = st.tick,
                          .attacker = id,
                          .victim = victim});
        if (v.has_ball) detail::drop_ball(st, v, events);
    }

    // --- Phase 6: ball flight / roll / catches ---
    if (st.ball.holder) {
        auto& h = st.player(*st.ball.holder);
        st.ball.position = h.position;
        st.ball.height = phys::ball_carry_height;
        st.ball.velocity = h.velocity;
    } else {
        st.ball.position += st.ball.velocity * dt;
        if (st.ball.in_flight) {
            st.ball.height += st.ball.vertical_vel * dt;
            st.ball.vertical_vel -= phys::gravity * dt;
            if (st.ball.height <= 0.0) {
                st.ball.height = 0.0;
                st.ball.vertical_vel = 0.0;
                st.ball.in_flight = false;
                st.ball.velocity *= phys::ball_land_keep;
            }
        } else {
            st.ball.velocity *= phys::ball_roll_keep;
        }
        {
            Vec2 pos = st.ball.position;
            if (track.clamp_to_track(pos, 0.1)) {
                const Vec2 u = track.outward(pos);
                const double radial = st.ball.velocity.dot(u);
                st.ball.velocity -= u * radial * (1.0 + phys::ball_bounce_keep);
                st.ball.position = pos;
            }
        }
        // Catch: nearest eligible player, lowest id on ties.
        int catcher = -1;
        double catcher_dist = 0.0;
        for (int id = 0; id < n; ++id) {
            const auto& p = st.player(id);
            if (p.hurt()) continue;
            if (st.ball.no_catch_timer > 0 && id == st.ball.last_toucher) continue;
            const double reach =
                p.airborne() ? phys::catch_reach_air : phys::catch_reach_ground;
            if (st.ball.height > reach) continue;
            const double dist = (p.position - st.ball.position).norm();
            if (dist > phys::catch_radius) continue;
            if (catcher < 0 || dist < catcher_dist) {
                catcher = id;
                catcher_dist = dist;
            }
        }
        if (catcher >= 0) {
            auto& p = st.player(catcher);
            p.has_ball = true;
            p.throw_lock = phys::throw_lock_ticks;
            p.call_for_pass_timer = 0;
            st.ball.holder = catcher;
            st.ball.in_flight = false;
            st.ball.height = phys::ball_carry_height;
            st.ball.position = p.position;
            st.ball.velocity = p.velocity;
            st.ball.vertical_vel = 0.0;
            st.ball.no_catch_timer = 0;
            st.ball.last_toucher = catcher;
            if (st.possessing_team != std::optional<Team>(p.team)) {
                const auto from = st.possessing_team;
                if (from) st.team_progress(*from).reset();
                st.possessing_team = p.team;
                events.push_back({.kind = GameEvent::Kind::PossessionChanged,
                                  .tick = st.tick,
                                  .from_team = from,
                                  .to_team = p.team});
            }
        }
    }

    // --- Phase 7: checkpoint progress (holder held through the move) ---
    if (holder_through_move && st.ball.holder == holder_through_move) {
        const auto& h = st.player(*st.ball.holder);
        auto& prog = st.team_progress(h.team);
        const double s0 = s_before[static_cast<size_t>(h.player_id)];
        const double s1 = track.progress(h.position);
        const double fwd = track.forward_arc(s0, s1);
        if (fwd > 0.0 && fwd <= track.perimeter() * 0.5) {
            for (int guard = 0; guard < 4; ++guard) {
                const double off = track.forward_arc(s0, track.checkpoint_s(prog.next_checkpoint));
                if (off <= 0.0 || off > fwd) break;
                const int k = prog.next_checkpoint;
                events.push_back({.kind = GameEvent::Kind::CheckpointProgressed,
                                  .tick = st.tick,
                                  .team = h.team,
                                  .checkpoint_index = k});
                if (k == st.config.checkpoint_count) {
                    prog.next_checkpoint = 1;
                    prog.laps_completed += 1;
                    prog.goal_active = true;
                    events.push_back(
                        {.kind = GameEvent::Kind::LapCompleted, .tick = st.tick, .team = h.team});
                } else {
                    prog.next_checkpoint = k + 1;
                }
            }
        }
    }

    // --- Phase 8: timers, combo-finisher tumbles ---
    for (int id = 0; id < n; ++id) {
        auto& p = st.player(id);
        if (p.hurt_timer > 0) --p.hurt_timer;
        if (p.air_timer > 0) --p.air_timer;
        if (p.dash_cooldown > 0) --p.dash_cooldown;
        if (p.dodge_cooldown > 0) --p.dodge_cooldown;
        if (p.jump_cooldown > 0) --p.jump_cooldown;
        if (p.throw_lock > 0) --p.throw_lock;
        if (p.call_for_pass_timer > 0) --p.call_for_pass_timer;
        if (p.impulse_timer > 0) {
            --p.impulse_timer;
            if (p.impulse_timer == 0) {
                const ImpulseKind k = p.active_impulse;
                p.active_impulse = ImpulseKind::None;
                if (k == ImpulseKind::Dive || k == ImpulseKind::DodgeDive ||
                    k == ImpulseKind::Uppercut) {
                    p.hurt_timer = phys::hurt_ticks_tumble;
                    if (p.has_ball) detail::drop_ball(st, p, events);
                }
            }
        }
    }
    if (st.ball.no_catch_timer > 0) --st.ball.no_catch_timer;

    // --- Phase 9: episode timeout ---
    ++st.tick;
    if (st.tick >= st.config.max_episode_ticks) {
        st.done = true;
        st.end_reason = EndReason::Timeout;
        events.push_back({.kind = GameEvent::Kind::EpisodeEnd,
                          .tick = st.tick - 1,
                          .end_reason = EndReason::Timeout});
    }

    std::stable_sort(events.begin(), events.end(), [](const GameEvent& a, const GameEvent& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return detail::event_sort_key(a) < detail::event_sort_key(b);
    });
    return events;
}

// Runs a full decision interval: the same intents for kDecisionInterval ticks,
// with impulses and ball ops firing on the first tick only. Stops early when
// the episode ends. Events from all ticks are appended to `out_events`.
inline void run_decision_interval(SimState& st, std::vector<ControlIntent> intents,
                                  std::vector<GameEvent>& out_events) {
    for (int t = 0; t < kDecisionInterval && !st.done; ++t) {
        auto evs = fixed_update(st, intents);
        out_events.insert(out_events.end(), evs.begin(), evs.end());
        if (t == 0) {
            for (auto& intent : intents) {
                intent.impulse = ImpulseKind::None;
                intent.ball_op = BallOpKind::None;
            }
        }
    }
}

}  // namespace rinkball
