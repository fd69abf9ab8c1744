/*
 *  Copyright 2026 The aspdbg Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <aspdbg/server.hpp>

#include <aspdbg/error.hpp>

#include <nlohmann/json.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>

namespace aspdbg {

std::uint16_t port_from_environment() {
    const char* env = std::getenv(port_environment);
    if (!env || !*env) {
        return default_port;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value == 0 || value > 65535) {
        return default_port;
    }
    return static_cast<std::uint16_t>(value);
}

CommandQueue::CommandQueue()
    : worker_([this] {
        for (;;) {
            std::packaged_task<std::vector<std::string>()> task;
            {
                std::unique_lock lock(mutex_);
                ready_.wait(lock, [this] { return done_ || !tasks_.empty(); });
                if (tasks_.empty()) {
                    return;
                }
                task = std::move(tasks_.front());
                tasks_.pop_front();
            }
            task();
        }
    }) {}

CommandQueue::~CommandQueue() {
    {
        std::lock_guard lock(mutex_);
        done_ = true;
    }
    ready_.notify_all();
    worker_.join();
}

std::future<std::vector<std::string>> CommandQueue::submit(std::function<std::vector<std::string>()> task) {
    std::packaged_task<std::vector<std::string>()> pt(std::move(task));
    auto                                           fut = pt.get_future();
    {
        std::lock_guard lock(mutex_);
        tasks_.push_back(std::move(pt));
    }
    ready_.notify_one();
    return fut;
}

Server::Server(ProtocolHandler& handler, ServerOptions opts) : handler_(handler), opts_(std::move(opts)) {}

Server::~Server() {
    stop();
    if (listen_fd_ >= 0) {
        ::close(listen_fd_);
    }
}

void Server::process(const std::string& line, const std::function<void(const std::string&)>& emit) {
    auto reply   = queue_.submit([this, line] { return handler_.handle_line(line); });
    auto started = std::chrono::steady_clock::now();
    while (reply.wait_for(opts_.heartbeat_interval) == std::future_status::timeout) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        emit(nlohmann::json{{"type", "heartbeat"}, {"elapsed_ms", elapsed.count()}}.dump());
    }
    std::vector<std::string> lines;
    try {
        lines = reply.get();
    }
    catch (const std::exception& e) {
        lines = {nlohmann::json{{"type", "error"}, {"message", std::string("internal error: ") + e.what()}}.dump()};
    }
    for (const auto& r : lines) {
        emit(r);
    }
}

void Server::serve_stream(std::istream& in, std::ostream& out) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        process(line, [&](const std::string& msg) { out << msg << '\n' << std::flush; });
    }
}

std::uint16_t Server::listen() {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) {
        throw Error(std::string("socket: ") + std::strerror(errno));
    }
    int yes = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port   = htons(opts_.port);
    if (::inet_pton(AF_INET, opts_.host.c_str(), &addr.sin_addr) != 1) {
        throw Error("invalid host address: " + opts_.host);
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) {
        throw Error("bind " + opts_.host + ":" + std::to_string(opts_.port) + ": " + std::strerror(errno));
    }
    if (::listen(listen_fd_, 1) < 0) {
        throw Error(std::string("listen: ") + std::strerror(errno));
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    return ntohs(addr.sin_port);
}

void Server::run() {
    if (listen_fd_ < 0) {
        listen();
    }
    while (!stopping_) {
        int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            if (errno == EINTR) {
                continue;
            }
            break;
        }
        client_fd_ = fd;
        if (stopping_) {
            ::close(fd);
            break;
        }
        serve_client(fd);
        client_fd_ = -1;
        ::close(fd);
    }
}

void Server::stop() {
    if (stopping_.exchange(true)) {
        return;
    }
    if (listen_fd_ >= 0) {
        ::shutdown(listen_fd_, SHUT_RDWR);
    }
    if (int fd = client_fd_.load(); fd >= 0) {
        ::shutdown(fd, SHUT_RDWR);
    }
}

void Server::serve_client(int fd) {
    auto emit = [fd](const std::string& msg) {
        std::string data = msg + '\n';
        std::size_t sent = 0;
        while (sent < data.size()) {
            auto n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
            if (n <= 0) {
                return;
            }
            sent += static_cast<std::size_t>(n);
        }
    };
    std::string buffer;
    char        chunk[4096];
    for (;;) {
        auto n = ::recv(fd, chunk, sizeof chunk, 0);
        if (n <= 0) {
            return;
        }
        buffer.append(chunk, static_cast<std::size_t>(n));
        for (auto nl = buffer.find('\n'); nl != std::string::npos; nl = buffer.find('\n')) {
            std::string line = buffer.substr(0, nl);
            buffer.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") != std::string::npos) {
                process(line, emit);
            }
        }
    }
}

} // namespace aspdbg
