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

#ifndef ACTIVECC_HTTP_SERVICE_H_
#define ACTIVECC_HTTP_SERVICE_H_

#include <memory>
#include <string>

#include "activecc/session.h"

namespace httplib {
class Server;
}

namespace activecc {

// JSON-over-HTTP front end of a SessionManager:
//
//   POST /sessions                  SessionConfig     -> {"id"}
//   GET  /sessions/{id}/batch                         -> {"pairs": [{"u","v"}]}
//   POST /sessions/{id}/labels      {"u","v","label"} -> {"pending_remaining"}
//   GET  /sessions/{id}/state                         -> {"iteration",
//                                      "labels_collected", "current_clustering",
//                                      "done"}
//   GET  /sessions/{id}/snapshot                      -> LabelSession::Snapshot
//
// label is "edge" or "nonedge". Errors come back as {"error": message} with
// 400 (malformed input), 404 (unknown session) or 409 (pair not pending).
class HttpService {
 public:
  explicit HttpService(SessionManager& sessions);
  ~HttpService();

  // Binds and serves until Stop(); port 0 picks a free port.
  bool Listen(const std::string& host, int port);
  // Binds without serving; returns the bound port or -1.
  int Bind(const std::string& host, int port);
  bool ListenAfterBind();
  void Stop();
  bool WaitUntilReady() const;

 private:
  SessionManager& sessions_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace activecc

#endif  // ACTIVECC_HTTP_SERVICE_H_
