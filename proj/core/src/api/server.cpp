#include "codesign/api/server.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>

#include "codesign/error.hpp"

namespace codesign::api {

struct Server::Impl {
  Gateway& gateway;
  httplib::Server http;

  explicit Impl(Gateway& g) : gateway(g) {}

  void serve(const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    request.body = req.body;
    for (const auto& [name, value] : req.params) request.query.emplace(name, value);
    for (const auto& [name, value] : req.headers) {
      std::string lower = name;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
      request.headers.emplace(std::move(lower), value);
    }
    const ApiResponse response = gateway.handle(request);
    res.status = response.status;
    for (const auto& [name, value] : response.headers) res.set_header(name, value);
    if (!response.content_type.empty()) res.set_content(response.body, response.content_type);
  }
};

Server::Server(Gateway& gateway, int threads) : impl_(std::make_unique<Impl>(gateway)) {
  const auto pool_size = static_cast<std::size_t>(std::max(1, threads));
  impl_->http.new_task_queue = [pool_size] { return new httplib::ThreadPool(pool_size); };
  // SO_REUSEADDR only; httplib's default adds SO_REUSEPORT.
  impl_->http.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->serve(req, res); };
  impl_->http.Get(".*", handler);
  impl_->http.Post(".*", handler);
  impl_->http.Put(".*", handler);
  impl_->http.Patch(".*", handler);
  impl_->http.Delete(".*", handler);
  impl_->http.Options(".*", handler);
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->http.bind_to_any_port(host);
  } else if (!impl_->http.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw ConfigError("port", "cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace codesign::api
