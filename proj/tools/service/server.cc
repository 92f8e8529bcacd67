// Copyright 2026 The Midair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "service/server.h"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>
#include <spdlog/spdlog.h>

#include "midair/errors.h"
#include "service/channel.h"
#include "service/wire.h"

namespace midair::service {
namespace {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(tcp::socket socket, Scene scene, asio::thread_pool& workers,
             std::set<std::shared_ptr<Connection>>& registry)
      : ws_(std::move(socket)),
        channel_(std::move(scene)),
        workers_(workers),
        registry_(registry) {}

  void Start() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
      if (ec) {
        spdlog::debug("handshake failed: {}", ec.message());
        self->Close();
        return;
      }
      self->Dispatch(self->channel_.Greeting());
      self->Read();
    });
  }

  void Close() {
    closed_ = true;
    registry_.erase(shared_from_this());
    beast::error_code ec;
    beast::get_lowest_layer(ws_).socket().close(ec);
  }

 private:
  void Read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, size_t) {
      if (ec) {
        if (ec != websocket::error::closed) spdlog::debug("read: {}", ec.message());
        self->Close();
        return;
      }
      std::string frame = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      if (!self->ws_.got_text()) {
        self->Send(Frame(ErrorMessage("MalformedFrame", "binary frames are not accepted")));
      } else {
        self->Dispatch(self->channel_.HandleFrame(frame));
      }
      self->Read();
    });
  }

  void Dispatch(SessionChannel::Reply reply) {
    for (auto& m : reply.messages) Send(std::move(m));
    if (reply.mesh) Schedule(std::move(*reply.mesh));
  }

  void Schedule(MeshJob job) {
    const std::string key = job.primitive.value_or("");
    if (busy_.contains(key)) {
      pending_.insert_or_assign(key, std::move(job));
      return;
    }
    busy_.insert(key);
    asio::post(workers_, [self = shared_from_this(), key, job = std::move(job)] {
      std::string message;
      try {
        message = RunMeshJob(job);
      } catch (const Error& e) {
        message = Frame(ErrorMessage(ToString(e.code()), e.what()));
      }
      asio::post(self->ws_.get_executor(),
                 [self, key, message = std::move(message)]() mutable {
                   self->Finished(key, std::move(message));
                 });
    });
  }

  void Finished(const std::string& key, std::string message) {
    busy_.erase(key);
    if (closed_) return;
    Send(std::move(message));
    if (auto it = pending_.find(key); it != pending_.end()) {
      MeshJob next = std::move(it->second);
      pending_.erase(it);
      Schedule(std::move(next));
    }
  }

  void Send(std::string message) {
    if (closed_) return;
    outbox_.push_back(std::move(message));
    if (outbox_.size() == 1) Write();
  }

  void Write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec, size_t) {
                      if (ec) {
                        spdlog::debug("write: {}", ec.message());
                        self->Close();
                        return;
                      }
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->Write();
                    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  SessionChannel channel_;
  asio::thread_pool& workers_;
  std::set<std::shared_ptr<Connection>>& registry_;
  std::deque<std::string> outbox_;
  std::set<std::string> busy_;
  std::map<std::string, MeshJob> pending_;
  bool closed_ = false;
};

}  // namespace

struct SessionServer::Impl {
  Impl(Scene s, const std::string& host, uint16_t port)
      : scene(std::move(s)),
        acceptor(ioc, tcp::endpoint(asio::ip::make_address(host), port)) {}

  void Accept() {
    acceptor.async_accept(asio::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) {
        if (ec != asio::error::operation_aborted) spdlog::warn("accept: {}", ec.message());
        return;
      }
      spdlog::info("client connected from {}",
                   socket.remote_endpoint(ec).address().to_string());
      auto conn = std::make_shared<Connection>(std::move(socket), scene, workers, connections);
      connections.insert(conn);
      conn->Start();
      Accept();
    });
  }

  Scene scene;
  asio::io_context ioc{1};
  tcp::acceptor acceptor;
  asio::thread_pool workers{2};
  std::set<std::shared_ptr<Connection>> connections;
};

SessionServer::SessionServer(Scene scene, const std::string& host, uint16_t port) {
  try {
    impl_ = std::make_unique<Impl>(std::move(scene), host, port);
  } catch (const boost::system::system_error& e) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port) + ": " +
                             e.code().message());
  }
}

SessionServer::~SessionServer() {
  Stop();
  impl_->workers.join();
}

uint16_t SessionServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void SessionServer::Run() {
  impl_->Accept();
  impl_->ioc.run();
}

void SessionServer::Stop() { impl_->ioc.stop(); }

}  // namespace midair::service
