#pragma once

#include <memory>
#include <string>

#include "codesign/api/gateway.hpp"

namespace codesign::api {

/// Blocking HTTP front end over a Gateway (thread-pool per connection).
class Server {
 public:
  Server(Gateway& gateway, int threads = 8);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds `host:port`; port 0 picks a free port. Returns the bound port.
  /// Throws Error(ConfigError) when the address cannot be bound.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called. Requires a prior bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace codesign::api
