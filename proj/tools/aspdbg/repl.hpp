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

#include <aspdbg/debugger.hpp>

#include <iosfwd>

namespace aspdbg::cli {

/// Terminal debugging loop: prints the rules of each core and the ranked
/// queries, then reads answers such as `1 y`, `y`, `n`, `u` (undo) or `q`.
int run_repl(Session& session, std::istream& in, std::ostream& out, bool color);

} // namespace aspdbg::cli
