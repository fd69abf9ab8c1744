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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspdbg {

/// Base of all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string file, std::size_t line, std::size_t column, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
        , file_(std::move(file))
        , line_(line)
        , column_(column)
        , message_(msg) {}

    [[nodiscard]] const std::string& file() const { return file_; }
    [[nodiscard]] std::size_t        line() const { return line_; }
    [[nodiscard]] std::size_t        column() const { return column_; }
    /// Message without the location prefix.
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class SafetyError : public Error {
public:
    SafetyError(const std::string& location, const std::string& rule, std::string variable)
        : Error(location + ": unsafe variable " + variable + " in rule '" + rule + "'")
        , variable_(std::move(variable)) {}

    [[nodiscard]] const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

} // namespace aspdbg
