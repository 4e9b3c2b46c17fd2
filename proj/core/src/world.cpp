#include "neuroforage/world/world.hpp"

#include <limits>

#include "neuroforage/errors.hpp"

namespace neuroforage::world {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxPlacementAttempts = 100000;
}  // namespace

double normalize_heading(double theta) noexcept {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta -= kTwoPi;
  return theta;
}

double normalize_bearing(double theta) noexcept {
  theta = normalize_heading(theta);
  if (theta > std::numbers::pi) theta -= kTwoPi;
  return theta;
}

std::string_view to_string(ObjectKind kind) noexcept {
  switch (kind) {
    case ObjectKind::Food: return "food";
    case ObjectKind::Poison: return "poison";
    case ObjectKind::FoodContainer: return "food_container";
    case ObjectKind::EmptyContainer: return "empty_container";
  }
  return "?";
}

std::string_view to_string(ContactKind kind) noexcept {
  switch (kind) {
    case ContactKind::FoodCollected: return "food_collected";
    case ContactKind::PoisonCollected: return "poison_collected";
    case ContactKind::EnteredFoodContainer: return "entered_food_container";
    case ContactKind::EnteredEmptyContainer: return "entered_empty_container";
    case ContactKind::ExitedContainer: return "exited_container";
  }
  return "?";
}

Arena::Arena(double width, double height) : width_(width), height_(height) {
  if (!(width > 0.0) || !(height > 0.0)) throw ConfigError("arena dimensions must be positive");
}

Vec2 Arena::wrap(Vec2 p) const noexcept {
  p.x = std::fmod(p.x, width_);
  if (p.x < 0.0) p.x += width_;
  if (p.x >= width_) p.x -= width_;
  p.y = std::fmod(p.y, height_);
  if (p.y < 0.0) p.y += height_;
  if (p.y >= height_) p.y -= height_;
  return p;
}

Vec2 Arena::delta(Vec2 from, Vec2 to) const noexcept {
  Vec2 d = to - from;
  d.x -= width_ * std::round(d.x / width_);
  d.y -= height_ * std::round(d.y / height_);
  return d;
}

std::size_t Arena::count(ObjectKind kind) const noexcept {
  std::size_t n = 0;
  for (const auto& o : objects) n += o.kind == kind ? 1 : 0;
  return n;
}

double turning_radius(double v_left, double v_right, double wheel_separation) noexcept {
  if (v_left == v_right) return std::numeric_limits<double>::infinity();
  return 0.5 * wheel_separation * std::abs((v_left + v_right) / (v_right - v_left));
}

RobotPose advance_robot(const RobotPose& pose, double dt_s, const Arena& arena,
                        double wheel_separation) {
  RobotPose next = pose;
  const double v = 0.5 * (pose.v_left + pose.v_right);
  const double omega = (pose.v_right - pose.v_left) / wheel_separation;
  const double theta = pose.heading;
  if (std::abs(omega) < 1e-12) {
    next.position.x += v * std::cos(theta) * dt_s;
    next.position.y += v * std::sin(theta) * dt_s;
  } else {
    const double r = v / omega;
    const double theta2 = theta + omega * dt_s;
    next.position.x += r * (std::sin(theta2) - std::sin(theta));
    next.position.y -= r * (std::cos(theta2) - std::cos(theta));
    next.heading = theta2;
  }
  next.heading = normalize_heading(next.heading);
  next.position = arena.wrap(next.position);
  return next;
}

namespace {

struct SideHit {
  double left = 0.0;
  double right = 0.0;
};

void consider(const Arena& arena, const RobotPose& pose, Vec2 target, double range, SideHit& hit,
              double& best_left, double& best_right) {
  const Vec2 d = arena.delta(pose.position, target);
  const double dist = d.norm();
  if (dist >= range) return;
  const double bearing = dist == 0.0 ? 0.0 : normalize_bearing(std::atan2(d.y, d.x) - pose.heading);
  constexpr double quarter = 0.5 * std::numbers::pi;
  if (bearing >= 0.0 && bearing <= quarter && dist < best_left) {
    best_left = dist;
    hit.left = range_response(dist, range);
  }
  if (bearing <= 0.0 && bearing >= -quarter && dist < best_right) {
    best_right = dist;
    hit.right = range_response(dist, range);
  }
}

void winner_takes_all(double& left, double& right, Rng& rng) {
  if (left > 0.0 && right > 0.0) {
    if (left > right) {
      right = 0.0;
    } else if (right > left) {
      left = 0.0;
    } else if (rng.coin()) {
      right = 0.0;
    } else {
      left = 0.0;
    }
  }
}

}  // namespace

SensorReadout sense(const Arena& arena, const RobotPose& pose, const WorldParams& params, Rng& rng) {
  SensorReadout out;
  SideHit food, cont;
  double fl = params.food_range, fr = params.food_range;
  double cl = params.container_range, cr = params.container_range;
  for (std::size_t i = 0; i < arena.objects.size(); ++i) {
    const auto& o = arena.objects[i];
    if (o.is_edible()) {
      consider(arena, pose, o.position, params.food_range, food, fl, fr);
    } else if (pose.inside_container) {
      if (*pose.inside_container == i && o.contained_food) {
        consider(arena, pose, *o.contained_food, params.food_range, food, fl, fr);
      }
    } else {
      consider(arena, pose, o.position, params.container_range, cont, cl, cr);
    }
  }
  out.left_food = food.left;
  out.right_food = food.right;
  out.left_container = cont.left;
  out.right_container = cont.right;
  winner_takes_all(out.left_food, out.right_food, rng);
  winner_takes_all(out.left_container, out.right_container, rng);
  return out;
}

namespace {

void remap_speeds(RobotPose& pose, const SpeedRegime& from, const SpeedRegime& to) {
  const double scale = (to.v_max - to.v_min) / (from.v_max - from.v_min);
  pose.v_left = to.v_min + (pose.v_left - from.v_min) * scale;
  pose.v_right = to.v_min + (pose.v_right - from.v_min) * scale;
}

Vec2 random_point(const Arena& arena, Rng& rng) {
  return {rng.uniform(0.0, arena.width()), rng.uniform(0.0, arena.height())};
}

Vec2 random_point_in_disc(const Arena& arena, Vec2 centre, double radius, Rng& rng) {
  const double r = radius * std::sqrt(rng.uniform());
  const double phi = rng.uniform(0.0, kTwoPi);
  return arena.wrap({centre.x + r * std::cos(phi), centre.y + r * std::sin(phi)});
}

bool placement_ok(const Arena& arena, std::size_t index, Vec2 p, const WorldParams& params,
                  Vec2 robot) {
  const auto& obj = arena.objects[index];
  if (obj.is_edible()) {
    return arena.distance(p, robot) >= obj.radius + params.robot_contact_radius;
  }
  if (arena.distance(p, robot) < obj.radius + params.robot_contact_radius) return false;
  for (std::size_t j = 0; j < arena.objects.size(); ++j) {
    const auto& other = arena.objects[j];
    if (j == index || !other.is_container()) continue;
    if (arena.distance(p, other.position) < obj.radius + other.radius) return false;
  }
  return true;
}

}  // namespace

void respawn(Arena& arena, std::size_t index, const WorldParams& params, Rng& rng,
             Vec2 robot_position) {
  auto& obj = arena.objects.at(index);
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const Vec2 p = random_point(arena, rng);
    if (!placement_ok(arena, index, p, params, robot_position)) continue;
    obj.position = p;
    if (obj.kind == ObjectKind::FoodContainer) {
      obj.contained_food =
          random_point_in_disc(arena, p, obj.radius - params.food_radius, rng);
    }
    return;
  }
  throw ConfigError("could not place object without overlap; arena too crowded");
}

void populate(Arena& arena, const WorldParams& params, Rng& rng, std::size_t food,
              std::size_t poison, std::size_t food_containers, std::size_t empty_containers,
              Vec2 robot_position) {
  auto add = [&](ObjectKind kind, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      WorldObject o;
      o.kind = kind;
      o.radius = (kind == ObjectKind::Food || kind == ObjectKind::Poison) ? params.food_radius
                                                                          : params.container_radius;
      arena.objects.push_back(o);
      respawn(arena, arena.objects.size() - 1, params, rng, robot_position);
    }
  };
  add(ObjectKind::FoodContainer, food_containers);
  add(ObjectKind::EmptyContainer, empty_containers);
  add(ObjectKind::Food, food);
  add(ObjectKind::Poison, poison);
}

std::vector<ContactEvent> resolve_contacts(Arena& arena, RobotPose& pose, const WorldParams& params,
                                           Rng& rng) {
  std::vector<ContactEvent> events;
  const bool was_inside = pose.inside_container.has_value();

  std::optional<std::size_t> now_inside;
  for (std::size_t i = 0; i < arena.objects.size(); ++i) {
    const auto& o = arena.objects[i];
    if (o.is_container() && arena.distance(pose.position, o.position) < o.radius) {
      now_inside = i;
      break;
    }
  }
  if (now_inside != pose.inside_container) {
    if (pose.inside_container) events.push_back({ContactKind::ExitedContainer, *pose.inside_container});
    if (now_inside) {
      const auto kind = arena.objects[*now_inside].kind == ObjectKind::FoodContainer
                            ? ContactKind::EnteredFoodContainer
                            : ContactKind::EnteredEmptyContainer;
      events.push_back({kind, *now_inside});
    }
    pose.inside_container = now_inside;
  }

  const double reach = params.robot_contact_radius;
  for (std::size_t i = 0; i < arena.objects.size(); ++i) {
    auto& o = arena.objects[i];
    if (!o.is_edible()) continue;
    if (arena.distance(pose.position, o.position) < o.radius + reach) {
      events.push_back(
          {o.kind == ObjectKind::Poison ? ContactKind::PoisonCollected : ContactKind::FoodCollected, i});
      respawn(arena, i, params, rng, pose.position);
    }
  }

  if (pose.inside_container) {
    const auto c = *pose.inside_container;
    auto& cont = arena.objects[c];
    if (cont.contained_food &&
        arena.distance(pose.position, *cont.contained_food) < params.food_radius + reach) {
      events.push_back({ContactKind::FoodCollected, c});
      respawn(arena, c, params, rng, pose.position);
      events.push_back({ContactKind::ExitedContainer, c});
      pose.inside_container.reset();
    }
  }

  const bool is_inside = pose.inside_container.has_value();
  if (was_inside != is_inside) {
    remap_speeds(pose, was_inside ? params.half_speed : params.full_speed,
                 is_inside ? params.half_speed : params.full_speed);
  }
  return events;
}

}  // namespace neuroforage::world
