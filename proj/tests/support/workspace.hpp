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

#include "examples.hpp"

#include <aspdbg/protocol.hpp>
#include <aspdbg/testkit.hpp>

namespace aspdbg::testing {

/// The bidding workspace served in the shipped transcript fixture.
inline Workspace bidding_workspace() {
    return Workspace::from_buffers({{"bidding.lp", read_file(std::string(ASPDBG_SAMPLES) + "/bidding.lp")}},
                                   {parse_test(read_file(std::string(ASPDBG_SAMPLES) + "/bidding_tests/some_model.test"),
                                               "bidding_tests/some_model.test", "some_model")});
}

inline ProtocolHandler::IdGenerator counting_ids() {
    return [n = 0]() mutable { return "s" + std::to_string(++n); };
}

} // namespace aspdbg::testing
