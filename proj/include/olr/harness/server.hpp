#pragma once

#include <memory>
#include <string>

#include "olr/harness/session.hpp"

namespace httplib {
class Server;
}

namespace olr {

// Routes:
//   GET  /strategies
//   POST /sessions                 {"goal":{"red":"P3","blue":"P9"},"humanRole":"Painter","opponent":"p3-path:8"}
//   GET  /sessions/{id}
//   POST /sessions/{id}/move       {"edge":[u,v]} | {"color":"red"}
//   GET  /sessions/{id}/transcript JSONL
std::unique_ptr<httplib::Server> make_server(SessionManager& sessions);

// Blocks until the server stops.
bool serve(SessionManager& sessions, const std::string& host, int port);

}  // namespace olr
