#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "neuroforage/random.hpp"

namespace neuroforage::world {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
  double norm() const noexcept { return std::hypot(x, y); }
};

/// Normalizes an angle to [0, 2 pi).
double normalize_heading(double theta) noexcept;
/// Normalizes an angle to (-pi, pi].
double normalize_bearing(double theta) noexcept;

enum class ObjectKind { Food, Poison, FoodContainer, EmptyContainer };
std::string_view to_string(ObjectKind kind) noexcept;

struct WorldObject {
  ObjectKind kind = ObjectKind::Food;
  Vec2 position;
  double radius = 2.4;
  /// Only for FoodContainer: the food item it holds.
  std::optional<Vec2> contained_food;

  bool is_container() const noexcept {
    return kind == ObjectKind::FoodContainer || kind == ObjectKind::EmptyContainer;
  }
  bool is_edible() const noexcept { return kind == ObjectKind::Food || kind == ObjectKind::Poison; }
};

/// Wall-less arena with toroidal wrap on both axes.
class Arena {
 public:
  Arena(double width, double height);

  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }

  Vec2 wrap(Vec2 p) const noexcept;
  /// Minimum-image displacement from `from` to `to`.
  Vec2 delta(Vec2 from, Vec2 to) const noexcept;
  double distance(Vec2 a, Vec2 b) const noexcept { return delta(a, b).norm(); }

  std::vector<WorldObject> objects;

  std::size_t count(ObjectKind kind) const noexcept;

 private:
  double width_;
  double height_;
};

struct SpeedRegime {
  double v_min = 25.0;
  double v_max = 31.2;
  double mid() const noexcept { return 0.5 * (v_min + v_max); }
};

/// Geometry and sensing constants. Lengths in cm, speeds in cm/s.
struct WorldParams {
  double food_radius = 2.4;
  double container_radius = 14.0;
  double robot_contact_radius = 0.5;
  double wheel_separation = 1.0;
  double food_range = 30.0;
  double container_range = 60.0;
  SpeedRegime full_speed{25.0, 31.2};
  SpeedRegime half_speed{12.5, 15.6};
};

struct RobotPose {
  Vec2 position;
  double heading = 0.0;  ///< radians in [0, 2 pi)
  double v_left = 28.1;
  double v_right = 28.1;
  /// Index into Arena::objects of the container the robot is in.
  std::optional<std::size_t> inside_container;
};

/// Differential-drive update over dt_s (exact arc when wheel speeds differ),
/// then toroidal wrap.
RobotPose advance_robot(const RobotPose& pose, double dt_s, const Arena& arena,
                        double wheel_separation = 1.0);

/// Radius of the circle driven at constant wheel speeds (infinite if equal).
double turning_radius(double v_left, double v_right, double wheel_separation = 1.0) noexcept;

struct SensorReadout {
  double left_food = 0.0;
  double right_food = 0.0;
  double left_container = 0.0;
  double right_container = 0.0;
  bool touch_food = false;
  bool touch_food_container = false;
  bool touch_empty_container = false;
};

/// Response of a range sensor to an object at distance d: max(0, 1 - d/range).
inline double range_response(double d, double range) noexcept {
  return d >= range ? 0.0 : std::max(0.0, 1.0 - d / range);
}

/// Range sensing with closest-object-per-side and per-modality
/// winner-takes-all; ties pick a side with `rng`. Touch flags stay false
/// (they come from resolve_contacts).
SensorReadout sense(const Arena& arena, const RobotPose& pose, const WorldParams& params, Rng& rng);

enum class ContactKind {
  FoodCollected,
  PoisonCollected,
  EnteredFoodContainer,
  EnteredEmptyContainer,
  ExitedContainer
};
std::string_view to_string(ContactKind kind) noexcept;

struct ContactEvent {
  ContactKind kind;
  std::size_t object = 0;
};

/// Checks contacts at the current pose: edible items within contact range
/// are collected and respawned (together with their container), container
/// entry and exit are edge-triggered, and the wheel speeds are remapped when
/// the speed regime changes.
std::vector<ContactEvent> resolve_contacts(Arena& arena, RobotPose& pose, const WorldParams& params,
                                           Rng& rng);

/// Active regime for a pose.
inline const SpeedRegime& active_regime(const RobotPose& pose, const WorldParams& params) noexcept {
  return pose.inside_container ? params.half_speed : params.full_speed;
}

/// Fills the arena with the requested objects at random non-overlapping
/// positions (containers do not overlap each other or the robot).
void populate(Arena& arena, const WorldParams& params, Rng& rng, std::size_t food,
              std::size_t poison, std::size_t food_containers, std::size_t empty_containers,
              Vec2 robot_position);

/// Picks a random position for object `index` satisfying the overlap rules
/// and moves it there (with fresh contained food for food containers).
void respawn(Arena& arena, std::size_t index, const WorldParams& params, Rng& rng,
             Vec2 robot_position);

}  // namespace neuroforage::world
