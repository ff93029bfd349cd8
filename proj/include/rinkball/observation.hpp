#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rinkball/sim.hpp"
#include "rinkball/state.hpp"

namespace rinkball {

// Fixed-layout observation vector: self(14) ++ ball(7) ++ goal(4) ++
// checkpoint(6) ++ laps(2) ++ one 9-float block per other player, allies by
// ascending id first, then enemies. 78 floats in 3v3, 60 in 2v2.
inline constexpr int kSelfBlock = 14;
inline constexpr int kBallBlock = 7;
inline constexpr int kGoalBlock = 4;
inline constexpr int kCheckpointBlock = 6;
inline constexpr int kLapsBlock = 2;
inline constexpr int kFixedBlocks =
    kSelfBlock + kBallBlock + kGoalBlock + kCheckpointBlock + kLapsBlock;
inline constexpr int kOtherPlayerBlock = 9;

inline int observation_length(int team_size) {
    return kFixedBlocks + kOtherPlayerBlock * (2 * team_size - 1);
}

using ObservationVector = std::vector<float>;

namespace detail {

// Rotate a world-frame offset into the agent's local frame (x = heading).
inline Vec2 to_local(Vec2 v, Vec2 heading) {
    return {v.x * heading.x + v.y * heading.y, -v.x * heading.y + v.y * heading.x};
}

}  // namespace detail

inline ObservationVector build_observation(const SimState& st, int agent_id) {
    if (agent_id < 0 || agent_id >= st.player_count())
        throw std::invalid_argument("build_observation: invalid agent_id");

    const Track track(st.config);
    const auto& self = st.player(agent_id);
    const double pos_scale = track.half_length();
    const double vel_scale = phys::max_speed;

    ObservationVector obs;
    obs.reserve(static_cast<size_t>(observation_length(st.config.team_size)));
    auto push = [&obs](double v) { obs.push_back(static_cast<float>(v)); };
    auto push_rel_pos = [&](Vec2 world) {
        const Vec2 local = detail::to_local(world - self.position, self.heading);
        push(local.x / pos_scale);
        push(local.y / pos_scale);
    };
    auto push_rel_vel = [&](Vec2 world_vel) {
        const Vec2 local = detail::to_local(world_vel - self.velocity, self.heading);
        push(local.x / vel_scale);
        push(local.y / vel_scale);
    };

    // Self block (14): arena-frame pose and own flags/cooldowns.
    push(self.position.x / pos_scale);
    push(self.position.y / pos_scale);
    push(self.wall_height / st.config.wall_height);
    push(self.velocity.x / vel_scale);
    push(self.velocity.y / vel_scale);
    push(self.heading.x);
    push(self.heading.y);
    push(self.hurt() ? 1.0 : 0.0);
    push(self.airborne() ? 1.0 : 0.0);
    push(self.has_ball ? 1.0 : 0.0);
    push(self.dash_cooldown / static_cast<double>(phys::dash_cooldown));
    push(self.dodge_cooldown / static_cast<double>(phys::dodge_cooldown));
    push(self.jump_cooldown / static_cast<double>(phys::jump_cooldown));
    push(self.throw_lock / static_cast<double>(phys::throw_lock_ticks));

    // Ball block (7).
    push_rel_pos(st.ball.position);
    push_rel_vel(st.ball.velocity);
    push(track.line_of_sight(self.position, st.ball.position) ? 1.0 : 0.0);
    const bool held_by_ally =
        st.ball.holder && st.player(*st.ball.holder).team == self.team;
    const bool held_by_enemy =
        st.ball.holder && st.player(*st.ball.holder).team != self.team;
    push(held_by_ally ? 1.0 : 0.0);
    push(held_by_enemy ? 1.0 : 0.0);

    // Goal block (4).
    const Vec2 goal = track.goal_center();
    push_rel_pos(goal);
    push(track.line_of_sight(self.position, goal) ? 1.0 : 0.0);
    push(st.team_progress(self.team).goal_active ? 1.0 : 0.0);

    // Checkpoint block (6): next own checkpoint, one-hot over the first 3 of 4.
    const auto& prog = st.team_progress(self.team);
    const Vec2 cp = track.checkpoint_point(prog.next_checkpoint);
    push_rel_pos(cp);
    push(track.line_of_sight(self.position, cp) ? 1.0 : 0.0);
    for (int k = 1; k <= 3; ++k) push(prog.next_checkpoint == k ? 1.0 : 0.0);

    // Laps block (2), normalized by the 3-lap point cap.
    push(st.team_progress(self.team).laps_completed / 3.0);
    push(st.team_progress(other_team(self.team)).laps_completed / 3.0);

    // Other players: allies ascending id, then enemies ascending id.
    auto push_player = [&](const PlayerState& p) {
        push_rel_pos(p.position);
        push_rel_vel(p.velocity);
        push(track.line_of_sight(self.position, p.position) ? 1.0 : 0.0);
        push(p.hurt() ? 1.0 : 0.0);
        push(p.airborne() ? 1.0 : 0.0);
        push(p.has_ball ? 1.0 : 0.0);
        const bool acting = st.tick - p.last_action.tick < kDecisionInterval;
        push(acting ? 1.0 : 0.0);
    };
    for (const auto& p : st.players)
        if (p.team == self.team && p.player_id != agent_id) push_player(p);
    for (const auto& p : st.players)
        if (p.team != self.team) push_player(p);
    return obs;
}

// Observation layout manifest: field name, float offset, and the scale the
// raw quantity was divided by (1 for flags and unit vectors).
struct ObsField {
    int offset;
    std::string name;
    std::string scale;
};

inline std::vector<ObsField> observation_layout(const ArenaConfig& config) {
    std::vector<ObsField> fields;
    int off = 0;
    auto add = [&](const std::string& name, const std::string& scale) {
        fields.push_back({off++, name, scale});
    };
    const std::string pos = "arena_half_length";
    const std::string vel = "max_speed";
    add("self.pos.x", pos);
    add("self.pos.y", pos);
    add("self.wall_height", "wall_height");
    add("self.vel.x", vel);
    add("self.vel.y", vel);
    add("self.heading.x", "1");
    add("self.heading.y", "1");
    add("self.hurt", "1");
    add("self.in_air", "1");
    add("self.has_ball", "1");
    add("self.dash_cd", "dash_cooldown");
    add("self.dodge_cd", "dodge_cooldown");
    add("self.jump_cd", "jump_cooldown");
    add("self.throw_cd", "throw_lock");
    add("ball.rel_pos.x", pos);
    add("ball.rel_pos.y", pos);
    add("ball.rel_vel.x", vel);
    add("ball.rel_vel.y", vel);
    add("ball.los", "1");
    add("ball.held_by_ally", "1");
    add("ball.held_by_enemy", "1");
    add("goal.rel_pos.x", pos);
    add("goal.rel_pos.y", pos);
    add("goal.los", "1");
    add("goal.own_goal_active", "1");
    add("checkpoint.rel_pos.x", pos);
    add("checkpoint.rel_pos.y", pos);
    add("checkpoint.los", "1");
    add("checkpoint.next_is_1", "1");
    add("checkpoint.next_is_2", "1");
    add("checkpoint.next_is_3", "1");
    add("laps.own", "3");
    add("laps.enemy", "3");
    const int allies = config.team_size - 1;
    const int enemies = config.team_size;
    for (int i = 0; i < allies + enemies; ++i) {
        const std::string who =
            i < allies ? "ally" + std::to_string(i + 1) : "enemy" + std::to_string(i - allies + 1);
        add(who + ".rel_pos.x", pos);
        add(who + ".rel_pos.y", pos);
        add(who + ".rel_vel.x", vel);
        add(who + ".rel_vel.y", vel);
        add(who + ".los", "1");
        add(who + ".hurt", "1");
        add(who + ".in_air", "1");
        add(who + ".has_ball", "1");
        add(who + ".acting", "1");
    }
    return fields;
}

}  // namespace rinkball
