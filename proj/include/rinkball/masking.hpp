#pragma once

#include <stdexcept>
#include <vector>

#include "rinkball/actions.hpp"
#include "rinkball/sim.hpp"
#include "rinkball/state.hpp"

namespace rinkball {

namespace detail {

// Direction-slot tables: Ally1/Ally2 are teammates by ascending id, Enemy1-3
// opponents by ascending id. -1 marks a void slot (small team sizes).
inline void direction_slots(const SimState& st, int agent_id, int allies[2], int enemies[3]) {
    allies[0] = allies[1] = enemies[0] = enemies[1] = enemies[2] = -1;
    const Team team = st.player(agent_id).team;
    int na = 0, ne = 0;
    for (const auto& p : st.players) {
        if (p.player_id == agent_id) continue;
        if (p.team == team) {
            if (na < 2) allies[na++] = p.player_id;
        } else {
            if (ne < 3) enemies[ne++] = p.player_id;
        }
    }
}

}  // namespace detail

inline ActionMask build_action_mask(const SimState& st, int agent_id) {
    if (agent_id < 0 || agent_id >= st.player_count())
        throw std::invalid_argument("build_action_mask: invalid agent_id");

    const Track track(st.config);
    const auto& self = st.player(agent_id);
    ActionMask mask;

    int allies[2], enemies[3];
    detail::direction_slots(st, agent_id, allies, enemies);
    bool ally_with_los = false;
    for (int id : allies)
        if (id >= 0 && track.line_of_sight(self.position, st.player(id).position))
            ally_with_los = true;

    auto& act = mask.action;
    act[static_cast<int>(ActionId::Accelerate)] = true;
    act[static_cast<int>(ActionId::Brake)] = true;
    if (!self.hurt()) {
        act[static_cast<int>(ActionId::Pump)] = true;
        const bool can_release = self.has_ball && self.throw_lock == 0;
        act[static_cast<int>(ActionId::Throw)] = can_release;
        act[static_cast<int>(ActionId::Pass)] = can_release && ally_with_los;
        act[static_cast<int>(ActionId::CallForPass)] =
            !self.has_ball && allies[0] >= 0 && self.call_for_pass_timer == 0;
        const bool grounded = !self.airborne();
        act[static_cast<int>(ActionId::Dash)] = grounded && self.dash_cooldown == 0;
        act[static_cast<int>(ActionId::Dodge)] = grounded && self.dodge_cooldown == 0;
        act[static_cast<int>(ActionId::Jump)] = grounded && self.jump_cooldown == 0;
    }

    auto& dir = mask.direction;
    dir[static_cast<int>(DirectionId::Clockwise)] = true;
    dir[static_cast<int>(DirectionId::AntiClockwise)] = true;
    dir[static_cast<int>(DirectionId::UpInnerWall)] =
        track.distance_to_inner_wall(self.position) <= phys::wall_mask_distance;
    dir[static_cast<int>(DirectionId::UpOuterWall)] =
        track.distance_to_outer_wall(self.position) <= phys::wall_mask_distance;
    auto entity_visible = [&](int id) {
        return id >= 0 && track.line_of_sight(self.position, st.player(id).position);
    };
    dir[static_cast<int>(DirectionId::Ally1)] = entity_visible(allies[0]);
    dir[static_cast<int>(DirectionId::Ally2)] = entity_visible(allies[1]);
    dir[static_cast<int>(DirectionId::Enemy1)] = entity_visible(enemies[0]);
    dir[static_cast<int>(DirectionId::Enemy2)] = entity_visible(enemies[1]);
    dir[static_cast<int>(DirectionId::Enemy3)] = entity_visible(enemies[2]);
    dir[static_cast<int>(DirectionId::Ball)] =
        track.line_of_sight(self.position, st.ball.position);
    dir[static_cast<int>(DirectionId::Goal)] =
        track.line_of_sight(self.position, track.goal_center());
    return mask;
}

// Resolves a sampled (action, direction) pair into a per-tick control. The
// pair must be unmasked; submitting a masked pair is a caller bug.
inline ControlIntent apply_action(const SimState& st, int agent_id, ActionPair pair) {
    if (pair.action >= kActionCount || pair.direction >= kDirectionCount)
        throw std::invalid_argument("apply_action: action/direction index out of range");
    const ActionMask mask = build_action_mask(st, agent_id);
    if (!mask.allows(pair))
        throw std::logic_error("apply_action: masked action pair submitted");

    const Track track(st.config);
    const auto& self = st.player(agent_id);

    int allies[2], enemies[3];
    detail::direction_slots(st, agent_id, allies, enemies);
    auto bearing_to = [&](Vec2 target) {
        return (target - self.position).normalized_or(self.heading);
    };

    Vec2 heading = self.heading;
    switch (static_cast<DirectionId>(pair.direction)) {
        case DirectionId::Clockwise: heading = track.tangent_acw(self.position) * -1.0; break;
        case DirectionId::AntiClockwise: heading = track.tangent_acw(self.position); break;
        case DirectionId::UpInnerWall: heading = track.outward(self.position) * -1.0; break;
        case DirectionId::UpOuterWall: heading = track.outward(self.position); break;
        case DirectionId::Ally1: heading = bearing_to(st.player(allies[0]).position); break;
        case DirectionId::Ally2: heading = bearing_to(st.player(allies[1]).position); break;
        case DirectionId::Enemy1: heading = bearing_to(st.player(enemies[0]).position); break;
        case DirectionId::Enemy2: heading = bearing_to(st.player(enemies[1]).position); break;
        case DirectionId::Enemy3: heading = bearing_to(st.player(enemies[2]).position); break;
        case DirectionId::Ball: heading = bearing_to(st.ball.position); break;
        case DirectionId::Goal: heading = bearing_to(track.goal_center()); break;
    }

    ControlIntent intent;
    intent.desired_heading = heading;
    intent.action_id = pair.action;

    // Combo window: a qualifying previous impulse within one decision interval
    // upgrades the new impulse.
    const auto in_window = [&](ActionId prev) {
        return self.last_action.action_id == static_cast<std::uint8_t>(prev) &&
               st.tick - self.last_action.tick <= kDecisionInterval;
    };
    switch (static_cast<ActionId>(pair.action)) {
        case ActionId::Accelerate: intent.locomotion = Locomotion::Accelerate; break;
        case ActionId::Pump: intent.locomotion = Locomotion::Pump; break;
        case ActionId::Brake: intent.locomotion = Locomotion::Brake; break;
        case ActionId::Throw:
            intent.ball_op = BallOpKind::Throw;
            intent.throw_dir = heading;
            break;
        case ActionId::Pass: intent.ball_op = BallOpKind::Pass; break;
        case ActionId::CallForPass: intent.ball_op = BallOpKind::CallForPass; break;
        case ActionId::Dash:
            intent.impulse = in_window(ActionId::Dash)    ? ImpulseKind::Dive
                             : in_window(ActionId::Dodge) ? ImpulseKind::DodgeDive
                                                          : ImpulseKind::Dash;
            break;
        case ActionId::Dodge: intent.impulse = ImpulseKind::Dodge; break;
        case ActionId::Jump:
            intent.impulse =
                in_window(ActionId::Dash) ? ImpulseKind::Uppercut : ImpulseKind::Jump;
            break;
    }
    return intent;
}

}  // namespace rinkball
