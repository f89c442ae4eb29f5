/*
Copyright 2026 The confassign Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <shared_mutex>
#include <string>

#include "confassign/gateway/store.hpp"

namespace httplib {
class Server;
}

namespace confassign::gateway {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// HTTP-facing view of one conference document. Every request reloads the
/// document, so the service holds no state beyond the file itself.
/// Mutations take an exclusive lock and save before returning.
class Service {
 public:
  explicit Service(DocumentStore store, Clock clock = system_clock_ms);

  Response handle(const std::string& method, const std::string& path, const std::string& body);

  // Routes every /api endpoint of `server` to handle().
  void bind(httplib::Server& server);

 private:
  Response dispatch(const std::string& method, const std::string& path, const std::string& body);

  DocumentStore store_;
  Clock clock_;
  std::shared_mutex mutex_;
};

int status_for(ErrorCode code);

}  // namespace confassign::gateway
