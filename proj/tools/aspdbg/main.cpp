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

#include "repl.hpp"

#include <aspdbg/debugger.hpp>
#include <aspdbg/ground.hpp>
#include <aspdbg/parser.hpp>
#include <aspdbg/protocol.hpp>
#include <aspdbg/server.hpp>
#include <aspdbg/solver.hpp>
#include <aspdbg/testkit.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <iostream>
#include <unistd.h>

namespace {

using namespace aspdbg;

constexpr int exit_incoherent = 20;

Server* active_server = nullptr;

void on_signal(int) {
    if (active_server) {
        active_server->stop();
    }
}

int cmd_solve(const std::vector<std::string>& files, std::size_t limit) {
    GroundProgram g      = ground(load_program(files));
    auto          models = enumerate(g, {}, limit == 0 ? unlimited : limit);
    for (const auto& m : models) {
        std::cout << format_interpretation(m) << '\n';
    }
    if (models.empty()) {
        std::cout << "INCOHERENT\n";
        return exit_incoherent;
    }
    return 0;
}

int cmd_ground(const std::vector<std::string>& files) {
    std::cout << format_ground_program(ground(load_program(files)));
    return 0;
}

int cmd_test(const std::vector<std::string>& files, const std::string& dir) {
    Program p      = load_program(files);
    int     status = 0;
    for (const auto& t : load_tests(list_test_files(dir))) {
        TestResult r = run_test(p, t);
        std::cout << to_string(r) << ' ' << t.name << '\n';
        if (r == TestResult::fail) {
            status = 1;
        }
    }
    return status;
}

int cmd_debug(const std::vector<std::string>& files, const std::string& test_file, bool no_color) {
    Program  p = load_program(files);
    TestCase t;
    if (!test_file.empty()) {
        t = load_tests({test_file}).front();
    }
    try {
        Session s(p, t);
        bool    color = !no_color && ::isatty(STDOUT_FILENO);
        return cli::run_repl(s, std::cin, std::cout, color);
    }
    catch (const CoherentProgram& e) {
        std::cout << "test passes; witness answer set: " << format_interpretation(project_to_program(e.witness()))
                  << '\n';
        return 0;
    }
}

int cmd_serve(const std::vector<std::string>& files, const std::string& tests, std::optional<std::uint16_t> port,
              bool stdio, unsigned heartbeat_ms) {
    ProtocolHandler handler(Workspace::load(files, tests));
    ServerOptions   opts;
    opts.port               = port ? *port : port_from_environment();
    opts.heartbeat_interval = std::chrono::milliseconds(heartbeat_ms);
    Server server(handler, opts);
    if (stdio) {
        server.serve_stream(std::cin, std::cout);
        return 0;
    }
    std::uint16_t bound = server.listen();
    std::cerr << "listening on " << opts.host << ':' << bound << std::endl;
    active_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    server.run();
    active_server = nullptr;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interactive debugger for answer set programs"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::size_t              limit = 0;
    auto* solve = app.add_subcommand("solve", "Print the answer sets of a program");
    solve->add_option("files", files, "Program files")->required()->check(CLI::ExistingFile);
    solve->add_option("-n,--models", limit, "Stop after this many answer sets (0 = all)");

    auto* gnd = app.add_subcommand("ground", "Print the ground instantiation of a program");
    gnd->add_option("files", files, "Program files")->required()->check(CLI::ExistingFile);

    std::string test_dir;
    auto* test = app.add_subcommand("test", "Run the test cases of a directory");
    test->add_option("files", files, "Program files")->required()->check(CLI::ExistingFile);
    test->add_option("--tests", test_dir, "Directory of .test files")->required()->check(CLI::ExistingDirectory);

    std::string test_file;
    bool        no_color = false;
    auto* debug = app.add_subcommand("debug", "Debug an incoherent program interactively");
    debug->add_option("files", files, "Program files")->required()->check(CLI::ExistingFile);
    debug->add_option("--test", test_file, "Test case to debug")->check(CLI::ExistingFile);
    debug->add_flag("--no-color", no_color, "Do not highlight rules");

    std::optional<std::uint16_t> port;
    bool                         stdio        = false;
    unsigned                     heartbeat_ms = 1000;
    auto* serve = app.add_subcommand("serve", "Serve the debugging protocol to a UI client");
    serve->add_option("files", files, "Program files")->required()->check(CLI::ExistingFile);
    serve->add_option("--tests", test_dir, "Directory of .test files")->check(CLI::ExistingDirectory);
    serve->add_option("--port", port, "TCP port (default: $ASPDBG_PORT or 7341)");
    serve->add_flag("--stdio", stdio, "Read requests from stdin instead of a socket");
    serve->add_option("--heartbeat-ms", heartbeat_ms, "Heartbeat interval")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) {
            return cmd_solve(files, limit);
        }
        if (*gnd) {
            return cmd_ground(files);
        }
        if (*test) {
            return cmd_test(files, test_dir);
        }
        if (*debug) {
            return cmd_debug(files, test_file, no_color);
        }
        return cmd_serve(files, test_dir, port, stdio, heartbeat_ms);
    }
    catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
    }
    catch (const SafetyError& e) {
        std::cerr << "unsafe rule: " << e.what() << '\n';
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}
