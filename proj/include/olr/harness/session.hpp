#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "olr/builder/registry.hpp"
#include "olr/painter/painter.hpp"

namespace olr {

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class SessionNotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};
class SessionOver : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Role { Builder, Painter };
enum class Status { Live, RedWin, BlueWin };

std::string to_string(Role r);
std::string to_string(Status s);
Role parse_role(std::string_view text);

struct SessionSnapshot {
  std::string id;
  GameGoal goal{TargetPattern::path(2), TargetPattern::path(2)};
  Role human = Role::Painter;
  std::string opponent;
  Board board;
  Transcript transcript;
  std::optional<Edge> pending_edge;  // awaiting the human Painter's colour
  Status status = Status::Live;

  nlohmann::ordered_json to_json() const;
};

// In-memory game sessions. The human plays one side; the engine plays the
// other with a scripted Builder strategy or a Painter strategy.
class SessionManager {
 public:
  // opponent: a builder spec ("p3-path:8") when the human paints, a painter
  // spec ("blocking:P3+acyclic", "optimal", "all-red") when the human builds.
  SessionSnapshot create(const GameGoal& goal, Role human, const std::string& opponent);
  SessionSnapshot state(const std::string& id) const;
  SessionSnapshot move_edge(const std::string& id, Edge e);
  SessionSnapshot move_color(const std::string& id, Color c);
  // {"edge":[u,v]} or {"color":"red"}.
  SessionSnapshot move(const std::string& id, const nlohmann::json& payload);

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;
  static void advance_builder(Session& s);

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  long next_id_ = 1;
};

}  // namespace olr
