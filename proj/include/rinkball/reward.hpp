#pragma once

#include <span>
#include <stdexcept>

#include "rinkball/sim.hpp"
#include "rinkball/state.hpp"

namespace rinkball {

struct RewardConfig {
    double checkpoint_base = 0.05;   // per checkpoint, scaled by its index (1..4)
    double score_per_point = 2.0;
    double penalty_multiplier = 1.0; // m in [0,1]; mirrored penalty scale
    bool wall_skate_shaping = false;
    double wall_skate_max = 0.003;

    bool operator==(const RewardConfig&) const = default;

    void validate() const {
        if (checkpoint_base <= 0) throw ConfigError("reward.checkpoint_base must be > 0");
        if (score_per_point <= 0) throw ConfigError("reward.score_per_point must be > 0");
        if (penalty_multiplier < 0.0 || penalty_multiplier > 1.0)
            throw ConfigError("reward.penalty_multiplier must be in [0, 1]");
        if (wall_skate_max < 0) throw ConfigError("reward.wall_skate_max must be >= 0");
    }
};

// Presets matching the difficulty-knob settings.
inline RewardConfig reward_preset(std::string_view name) {
    RewardConfig cfg;
    if (name == "zero_sum") cfg.penalty_multiplier = 1.0;
    else if (name == "half_penalty") cfg.penalty_multiplier = 0.5;
    else if (name == "no_penalty") cfg.penalty_multiplier = 0.0;
    else throw ConfigError("unknown reward preset: " + std::string(name));
    return cfg;
}

struct TeamRewards {
    double team[2] = {0.0, 0.0};
    double& operator[](Team t) { return team[team_index(t)]; }
    double operator[](Team t) const { return team[team_index(t)]; }
    TeamRewards& operator+=(const TeamRewards& o) {
        team[0] += o.team[0];
        team[1] += o.team[1];
        return *this;
    }
};

// Per-team reward for one tick's events. Every agent of a team receives the
// team scalar; the opposing team receives the mirrored penalty scaled by m.
inline TeamRewards rewards_from_events(std::span<const GameEvent> events,
                                       const RewardConfig& cfg) {
    TeamRewards r;
    for (const auto& e : events) {
        double gain = 0.0;
        switch (e.kind) {
            case GameEvent::Kind::CheckpointProgressed:
                gain = cfg.checkpoint_base * e.checkpoint_index;
                break;
            case GameEvent::Kind::Scored:
                gain = cfg.score_per_point * e.points;
                break;
            default: continue;
        }
        r[e.team] += gain;
        r[other_team(e.team)] -= cfg.penalty_multiplier * gain;
    }
    return r;
}

// Optional shaping experiment: rewards the grounded ball bearer by height on
// the wall. Not mirrored to the opposing team.
inline double wall_skate_shaping_reward(const SimState& st, int agent_id,
                                        const RewardConfig& cfg) {
    if (!cfg.wall_skate_shaping) return 0.0;
    const auto& p = st.player(agent_id);
    if (!p.has_ball || p.airborne() || p.wall_height <= 0.0) return 0.0;
    return cfg.wall_skate_max * (p.wall_height / st.config.wall_height);
}

}  // namespace rinkball
