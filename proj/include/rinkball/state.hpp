#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rinkball/actions.hpp"
#include "rinkball/arena.hpp"
#include "rinkball/math.hpp"

namespace rinkball {

enum class Team : std::uint8_t { A = 0, B = 1 };

inline Team other_team(Team t) { return t == Team::A ? Team::B : Team::A; }
inline int team_index(Team t) { return static_cast<int>(t); }

enum class Locomotion : std::uint8_t { Neutral = 0, Accelerate, Pump, Brake };

// Impulses after combo resolution (Dive = Dash->Dash, DodgeDive = Dodge->Dash,
// Uppercut = Dash->Jump).
enum class ImpulseKind : std::uint8_t { None = 0, Dash, Dive, DodgeDive, Uppercut, Dodge, Jump };

enum class BallOpKind : std::uint8_t { None = 0, Throw, Pass, CallForPass };

// One decision's control, applied for a full decision interval. The impulse
// and ball op fire on the first tick only; run_decision_interval() handles
// the clearing.
struct ControlIntent {
    Vec2 desired_heading{1.0, 0.0};
    Locomotion locomotion = Locomotion::Neutral;
    ImpulseKind impulse = ImpulseKind::None;
    BallOpKind ball_op = BallOpKind::None;
    Vec2 throw_dir{1.0, 0.0};
    std::uint8_t action_id = 0;  // chosen ActionId, recorded for combo windows
    bool operator==(const ControlIntent&) const = default;
};

struct LastAction {
    std::uint8_t action_id = 0;
    int tick = -1000000;  // far in the past
    bool operator==(const LastAction&) const = default;
};

struct PlayerState {
    int player_id = 0;
    Team team = Team::A;
    Vec2 position{};
    double wall_height = 0.0;  // 0 = on the track floor
    Vec2 velocity{};
    Vec2 heading{1.0, 0.0};
    int hurt_timer = 0;  // ticks of incapacitation remaining
    int air_timer = 0;   // ticks airborne remaining
    bool has_ball = false;
    int dash_cooldown = 0;
    int dodge_cooldown = 0;
    int jump_cooldown = 0;
    int throw_lock = 0;  // ticks until throw/pass allowed after a catch
    LastAction last_action;
    int call_for_pass_timer = 0;

    // Active impulse bookkeeping.
    ImpulseKind active_impulse = ImpulseKind::None;
    int impulse_timer = 0;
    bool attack_spent = false;  // one tackle per impulse

    bool hurt() const { return hurt_timer > 0; }
    bool airborne() const { return air_timer > 0; }
    bool operator==(const PlayerState&) const = default;
};

struct BallState {
    std::optional<int> holder;
    Vec2 position{};
    double height = 0.0;
    Vec2 velocity{};         // horizontal flight/roll velocity
    double vertical_vel = 0.0;
    bool in_flight = false;
    int no_catch_timer = 0;  // thrower cannot re-catch immediately
    int last_toucher = -1;
    bool operator==(const BallState&) const = default;
};

struct TeamProgress {
    int next_checkpoint = 1;  // 1..4
    int laps_completed = 0;
    bool goal_active = false;

    void reset() { *this = TeamProgress{}; }
    bool operator==(const TeamProgress&) const = default;
};

enum class EndReason : std::uint8_t { Score = 0, Timeout };

struct GameEvent {
    // Order defines within-tick precedence.
    enum class Kind : std::uint8_t {
        CheckpointProgressed = 0,
        LapCompleted,
        Scored,
        PossessionChanged,
        Tackled,
        BallDropped,
        EpisodeEnd,
    };

    Kind kind{};
    int tick = 0;
    Team team = Team::A;            // CheckpointProgressed / LapCompleted / Scored
    int checkpoint_index = 0;       // CheckpointProgressed
    int points = 0;                 // Scored
    std::optional<Team> from_team;  // PossessionChanged
    Team to_team = Team::A;         // PossessionChanged
    int attacker = -1;              // Tackled
    int victim = -1;                // Tackled
    int player = -1;                // BallDropped
    EndReason end_reason = EndReason::Score;

    bool operator==(const GameEvent&) const = default;
};

struct SimState {
    ArenaConfig config;
    int tick = 0;
    std::vector<PlayerState> players;
    BallState ball;
    TeamProgress progress[2];
    int score[2] = {0, 0};
    std::optional<Team> possessing_team;  // last team to hold the ball
    Rng rng_stream;  // reserved for stochastic mechanics; kept in lockstep
    bool done = false;
    EndReason end_reason = EndReason::Timeout;

    const PlayerState& player(int id) const { return players[static_cast<size_t>(id)]; }
    PlayerState& player(int id) { return players[static_cast<size_t>(id)]; }
    int player_count() const { return static_cast<int>(players.size()); }

    TeamProgress& team_progress(Team t) { return progress[team_index(t)]; }
    const TeamProgress& team_progress(Team t) const { return progress[team_index(t)]; }

    bool operator==(const SimState& o) const {
        return config == o.config && tick == o.tick && players == o.players && ball == o.ball &&
               progress[0] == o.progress[0] && progress[1] == o.progress[1] &&
               score[0] == o.score[0] && score[1] == o.score[1] &&
               possessing_team == o.possessing_team && rng_stream == o.rng_stream &&
               done == o.done && end_reason == o.end_reason;
    }
};

}  // namespace rinkball
