// Copyright 2026 The activecc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "activecc/http_service.h"

#include "activecc/errors.h"
#include "httplib.h"
#include "json.hpp"

namespace activecc {
namespace {

using nlohmann::json;

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Runs a handler and maps library exceptions onto HTTP statuses.
template <typename Handler>
void Guarded(httplib::Response& res, Handler&& handler) {
  try {
    Reply(res, 200, handler());
  } catch (const NotFoundError& e) {
    Reply(res, 404, json{{"error", e.what()}});
  } catch (const ProtocolError& e) {
    Reply(res, 409, json{{"error", e.what()}});
  } catch (const InputError& e) {
    Reply(res, 400, json{{"error", e.what()}});
  } catch (const json::exception& e) {
    Reply(res, 400, json{{"error", e.what()}});
  }
}

json ParseBody(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("request body is not JSON: ") + e.what());
  }
}

}  // namespace

HttpService::HttpService(SessionManager& sessions)
    : sessions_(sessions), server_(std::make_unique<httplib::Server>()) {
  server_->Post("/sessions", [this](const httplib::Request& req,
                                    httplib::Response& res) {
    Guarded(res, [&] {
      const SessionConfig config = SessionConfig::FromJson(ParseBody(req));
      return json{{"id", sessions_.Create(config)}};
    });
  });

  server_->Get(R"(/sessions/([^/]+)/batch)", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
    Guarded(res, [&] {
      json pairs = json::array();
      for (const PairKey& pair : sessions_.NextBatch(req.matches[1])) {
        pairs.push_back({{"u", pair.u}, {"v", pair.v}});
      }
      return json{{"pairs", pairs}};
    });
  });

  server_->Post(R"(/sessions/([^/]+)/labels)", [this](const httplib::Request& req,
                                                       httplib::Response& res) {
    Guarded(res, [&] {
      const json body = ParseBody(req);
      const ElementId u = body.at("u").get<ElementId>();
      const ElementId v = body.at("v").get<ElementId>();
      if (u >= v) throw InputError("pair must satisfy u < v");
      const PairLabel label = ParsePairLabel(body.at("label").get<std::string>());
      const int64_t remaining =
          sessions_.Submit(req.matches[1], PairKey{u, v}, label);
      return json{{"pending_remaining", remaining}};
    });
  });

  server_->Get(R"(/sessions/([^/]+)/state)", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
    Guarded(res, [&] {
      const SessionState state = sessions_.State(req.matches[1]);
      return json{{"iteration", state.iteration},
                  {"labels_collected", state.labels_collected},
                  {"current_clustering", state.current_clustering.labels()},
                  {"done", state.done}};
    });
  });

  server_->Get(R"(/sessions/([^/]+)/snapshot)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 Guarded(res, [&] { return sessions_.Snapshot(req.matches[1]); });
               });
}

HttpService::~HttpService() { Stop(); }

bool HttpService::Listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

int HttpService::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::ListenAfterBind() { return server_->listen_after_bind(); }

void HttpService::Stop() {
  if (server_) server_->stop();
}

bool HttpService::WaitUntilReady() const {
  server_->wait_until_ready();
  return server_->is_running();
}

}  // namespace activecc
