#include "olr/harness/server.hpp"

#include <httplib.h>

#include "olr/builder/registry.hpp"

namespace olr {

namespace {

void reply(httplib::Response& res, int status, const nlohmann::ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void error(httplib::Response& res, int status, const std::string& kind, const std::string& msg) {
  reply(res, status, {{"error", kind}, {"message", msg}});
}

template <typename F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const SessionNotFound& e) {
    error(res, 404, "SessionNotFound", e.what());
  } catch (const SessionOver& e) {
    error(res, 409, "SessionOver", e.what());
  } catch (const IllegalMove& e) {
    error(res, 422, "IllegalMove", e.what());
  } catch (const nlohmann::json::exception& e) {
    error(res, 400, "BadRequest", e.what());
  } catch (const std::invalid_argument& e) {
    error(res, 400, "BadRequest", e.what());
  }
}

}  // namespace

std::unique_ptr<httplib::Server> make_server(SessionManager& sessions) {
  auto srv = std::make_unique<httplib::Server>();

  srv->Get("/strategies", [](const httplib::Request&, httplib::Response& res) {
    nlohmann::ordered_json j;
    j["builders"] = builder_catalogue();
    j["painters"] = {"blocking:P3+acyclic", "blocking:C4", "blocking:P4+acyclic", "optimal",
                     "all-red", "all-blue"};
    reply(res, 200, j);
  });

  srv->Post("/sessions", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto body = nlohmann::json::parse(req.body);
      GameGoal goal{TargetPattern::parse(body.at("goal").at("red").get<std::string>()),
                    TargetPattern::parse(body.at("goal").at("blue").get<std::string>())};
      Role role = parse_role(body.at("humanRole").get<std::string>());
      auto snap = sessions.create(goal, role, body.at("opponent").get<std::string>());
      reply(res, 201, snap.to_json());
    });
  });

  srv->Get(R"(/sessions/([^/]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 200, sessions.state(req.matches[1]).to_json()); });
  });

  srv->Get(R"(/sessions/([^/]+)/transcript)",
           [&sessions](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] {
               auto snap = sessions.state(req.matches[1]);
               res.set_content(snap.transcript.to_jsonl(), "application/x-ndjson");
             });
           });

  srv->Post(R"(/sessions/([^/]+)/move)",
            [&sessions](const httplib::Request& req, httplib::Response& res) {
              guarded(res, [&] {
                auto body = nlohmann::json::parse(req.body);
                reply(res, 200, sessions.move(req.matches[1], body).to_json());
              });
            });

  // The playground is served from another origin during development.
  srv->set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  srv->Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  return srv;
}

bool serve(SessionManager& sessions, const std::string& host, int port) {
  auto srv = make_server(sessions);
  return srv->listen(host, port);
}

}  // namespace olr
