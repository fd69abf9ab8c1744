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

#pragma once

#include <aspdbg/protocol.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <future>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace aspdbg {

inline constexpr std::uint16_t default_port     = 7341;
inline constexpr const char*   port_environment = "ASPDBG_PORT";

/// Port from ASPDBG_PORT if set and valid, otherwise default_port.
std::uint16_t port_from_environment();

struct ServerOptions {
    std::string               host = "127.0.0.1";
    std::uint16_t             port = default_port; ///< 0 picks a free port
    std::chrono::milliseconds heartbeat_interval{1000};
};

/// Runs every protocol request on one worker thread, in arrival order.
class CommandQueue {
public:
    CommandQueue();
    ~CommandQueue();
    CommandQueue(const CommandQueue&)            = delete;
    CommandQueue& operator=(const CommandQueue&) = delete;

    std::future<std::vector<std::string>> submit(std::function<std::vector<std::string>()> task);

private:
    std::mutex                                                  mutex_;
    std::condition_variable                                     ready_;
    std::deque<std::packaged_task<std::vector<std::string>()>> tasks_;
    bool                                                        done_ = false;
    std::thread                                                 worker_;
};

/// Serves one UI client at a time over a local TCP socket. The protocol
/// handler outlives connections, so a client may reconnect to a running
/// session. While a request is being processed a heartbeat line is written
/// every `heartbeat_interval`.
class Server {
public:
    Server(ProtocolHandler& handler, ServerOptions opts);
    ~Server();
    Server(const Server&)            = delete;
    Server& operator=(const Server&) = delete;

    /// Binds and listens; returns the bound port. Throws Error on failure.
    std::uint16_t listen();
    /// Accepts clients until stop() is called.
    void run();
    void stop();

    /// Processes requests from `in` until end of input, writing replies to `out`.
    void serve_stream(std::istream& in, std::ostream& out);

private:
    void serve_client(int fd);
    void process(const std::string& line, const std::function<void(const std::string&)>& emit);

    ProtocolHandler&  handler_;
    ServerOptions     opts_;
    CommandQueue      queue_;
    int               listen_fd_ = -1;
    std::atomic<int>  client_fd_{-1};
    std::atomic<bool> stopping_{false};
};

} // namespace aspdbg
