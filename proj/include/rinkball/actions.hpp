#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace rinkball {

inline constexpr int kActionCount = 9;
inline constexpr int kDirectionCount = 11;
inline constexpr int kDecisionInterval = 15;  // fixed updates per decision

enum class ActionId : std::uint8_t {
    Accelerate = 0,
    Pump,
    Brake,
    Throw,
    Pass,
    CallForPass,
    Dash,
    Dodge,
    Jump,
};

enum class DirectionId : std::uint8_t {
    Clockwise = 0,
    AntiClockwise,
    UpInnerWall,
    UpOuterWall,
    Ally1,
    Ally2,
    Enemy1,
    Enemy2,
    Enemy3,
    Ball,
    Goal,
};

inline constexpr std::array<std::string_view, kActionCount> kActionNames = {
    "accelerate", "pump", "brake", "throw", "pass", "call_for_pass", "dash", "dodge", "jump",
};

inline constexpr std::array<std::string_view, kDirectionCount> kDirectionNames = {
    "clockwise", "anticlockwise", "up_inner", "up_outer", "ally1",
    "ally2",     "enemy1",        "enemy2",   "enemy3",   "ball",
    "goal",
};

struct ActionPair {
    std::uint8_t action = 0;     // index into ActionId
    std::uint8_t direction = 0;  // index into DirectionId
    bool operator==(const ActionPair&) const = default;
};

struct ActionMask {
    std::array<bool, kActionCount> action{};
    std::array<bool, kDirectionCount> direction{};

    bool allows(ActionPair p) const { return action[p.action] && direction[p.direction]; }
    bool operator==(const ActionMask&) const = default;
};

}  // namespace rinkball
