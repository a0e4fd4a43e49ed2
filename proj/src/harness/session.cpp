#include "olr/harness/session.hpp"

#include <algorithm>
#include <cctype>

#include "olr/core/detect.hpp"
#include "olr/solver/solver.hpp"

namespace olr {

std::string to_string(Role r) { return r == Role::Builder ? "Builder" : "Painter"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Live:
      return "Live";
    case Status::RedWin:
      return "RedWin";
    case Status::BlueWin:
      return "BlueWin";
  }
  return "?";
}

Role parse_role(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "builder") return Role::Builder;
  if (t == "painter") return Role::Painter;
  throw std::invalid_argument("role must be Builder or Painter");
}

nlohmann::ordered_json SessionSnapshot::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["goal"] = {{"red", goal.red.to_string()}, {"blue", goal.blue.to_string()}};
  j["humanRole"] = to_string(human);
  j["opponent"] = opponent;
  auto edges = nlohmann::ordered_json::array();
  for (auto& [e, c] : board.edges()) edges.push_back({e.u(), e.v(), std::string(olr::to_string(c))});
  j["board"] = {{"edges", edges}};
  if (status != Status::Live)
    j["pending"] = nullptr;
  else
    j["pending"] = human == Role::Painter ? "color" : "edge";
  if (pending_edge)
    j["pendingEdge"] = {pending_edge->u(), pending_edge->v()};
  else
    j["pendingEdge"] = nullptr;
  j["status"] = to_string(status);
  j["round"] = board.round_count();
  return j;
}

struct SessionManager::Session {
  std::mutex mu;
  SessionSnapshot snap;
  std::optional<BuilderStrategy> builder;  // human paints
  std::optional<PainterStrategy> painter;  // human builds
  std::vector<Color> replies;
};

namespace {

Status status_after(const Board& b, Edge e, Color c, const GameGoal& g) {
  const TargetPattern& t = c == Color::Red ? g.red : g.blue;
  if (!contains_through(b.layer(c), e, t)) return Status::Live;
  return c == Color::Red ? Status::RedWin : Status::BlueWin;
}

PainterStrategy engine_painter(const GameGoal& goal, const std::string& spec) {
  if (spec == "optimal") {
    return optimal_painter(goal, goal.red.edge_count() + goal.blue.edge_count() + 6);
  }
  return parse_painter(spec);
}

// Guards the vertex ids a human Builder may use.
constexpr VertexId kMaxVertex = 4096;

}  // namespace

void SessionManager::advance_builder(Session& s) {
  ReplayState st = next_move(*s.builder, s.replies);
  s.snap.pending_edge = st.pending;
  if (st.winner) {
    s.snap.status = *st.winner == Color::Red ? Status::RedWin : Status::BlueWin;
  }
}

SessionSnapshot SessionManager::create(const GameGoal& goal, Role human,
                                       const std::string& opponent) {
  auto s = std::make_shared<Session>();
  s->snap.goal = goal;
  s->snap.human = human;
  s->snap.opponent = opponent;
  if (human == Role::Painter) {
    s->builder = parse_builder(opponent);
    if (!(s->builder->goal == goal)) {
      throw std::invalid_argument(opponent + " plays " + s->builder->goal.to_string() +
                                  ", not " + goal.to_string());
    }
    advance_builder(*s);
  } else {
    s->painter = engine_painter(goal, opponent);
  }
  std::lock_guard lock(mu_);
  s->snap.id = "s" + std::to_string(next_id_++);
  sessions_[s->snap.id] = s;
  return s->snap;
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound("no session '" + id + "'");
  return it->second;
}

SessionSnapshot SessionManager::state(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return s->snap;
}

SessionSnapshot SessionManager::move_edge(const std::string& id, Edge e) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  auto& snap = s->snap;
  if (snap.status != Status::Live) throw SessionOver("session " + id + " is over");
  if (snap.human != Role::Builder) throw IllegalMove("waiting for a colour, not an edge");
  if (e.v() >= kMaxVertex) throw IllegalMove("vertex id too large");
  if (snap.board.has_edge(e)) throw IllegalMove(to_string(e) + " is already uncovered");
  Color c = s->painter->decide(snap.board, e);
  snap.board.apply(e, c);
  snap.transcript.record(e, c);
  snap.status = status_after(snap.board, e, c, snap.goal);
  return snap;
}

SessionSnapshot SessionManager::move_color(const std::string& id, Color c) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  auto& snap = s->snap;
  if (snap.status != Status::Live) throw SessionOver("session " + id + " is over");
  if (snap.human != Role::Painter || !snap.pending_edge)
    throw IllegalMove("waiting for an edge, not a colour");
  Edge e = *snap.pending_edge;
  snap.board.apply(e, c);
  snap.transcript.record(e, c);
  s->replies.push_back(c);
  snap.status = status_after(snap.board, e, c, snap.goal);
  snap.pending_edge.reset();
  if (snap.status == Status::Live) advance_builder(*s);
  return snap;
}

SessionSnapshot SessionManager::move(const std::string& id, const nlohmann::json& payload) {
  if (!payload.is_object()) throw IllegalMove("move payload must be an object");
  if (payload.contains("edge")) {
    const auto& e = payload["edge"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw IllegalMove("edge must be [u, v] with non-negative integers");
    auto u = e[0].get<std::uint64_t>();
    auto v = e[1].get<std::uint64_t>();
    if (u >= kMaxVertex || v >= kMaxVertex) throw IllegalMove("vertex id too large");
    if (u == v) throw IllegalMove("self-loop");
    return move_edge(id, Edge(static_cast<VertexId>(u), static_cast<VertexId>(v)));
  }
  if (payload.contains("color")) {
    if (!payload["color"].is_string()) throw IllegalMove("color must be a string");
    Color c;
    try {
      c = parse_color(payload["color"].get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw IllegalMove(err.what());
    }
    return move_color(id, c);
  }
  throw IllegalMove("move payload needs \"edge\" or \"color\"");
}

}  // namespace olr
