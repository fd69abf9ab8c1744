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

#include <cstdint>
#include <vector>

namespace aspdbg::detail {

/// Literal over variable v: 2v for v true, 2v+1 for v false.
using Lit = int;

inline Lit  pos_lit(int v) { return 2 * v; }
inline Lit  neg_lit(int v) { return 2 * v + 1; }
inline int  var_of(Lit l) { return l >> 1; }
inline bool is_neg(Lit l) { return (l & 1) != 0; }
inline Lit  negate(Lit l) { return l ^ 1; }

/// Conflict-driven clause learning over a fixed decision order: the lowest
/// unassigned variable is decided false first. Clauses may be added between
/// solve calls; learnt clauses are kept.
class Sat {
public:
    explicit Sat(int vars = 0);

    int  new_var();
    [[nodiscard]] int vars() const { return static_cast<int>(value_.size()); }

    /// Adds a clause at decision level 0. Returns false once the clause set is
    /// unsatisfiable.
    bool add_clause(std::vector<Lit> c);

    /// Searches for a model extending `assumptions`. On success model() holds
    /// the assignment; the solver is back at level 0 either way.
    bool solve(const std::vector<Lit>& assumptions);

    /// Truth values of the last model, indexed by variable.
    [[nodiscard]] const std::vector<std::int8_t>& model() const { return model_; }

private:
    static constexpr std::int8_t unset = -1;

    [[nodiscard]] std::int8_t lit_value(Lit l) const {
        auto v = value_[var_of(l)];
        return v == unset ? unset : static_cast<std::int8_t>(v ^ (l & 1));
    }
    [[nodiscard]] int level() const { return static_cast<int>(trail_lim_.size()); }

    void assign(Lit l, int reason);
    int  propagate();
    void analyze(int conflict, std::vector<Lit>& learnt, int& back_level);
    void cancel_until(int lvl);
    int  attach(std::vector<Lit> c);

    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<int>> watches_; // literal -> clauses watching it
    std::vector<std::int8_t>      value_;
    std::vector<int>              var_level_;
    std::vector<int>              reason_;
    std::vector<Lit>              trail_;
    std::vector<int>              trail_lim_;
    std::vector<char>             seen_;
    std::vector<std::int8_t>      model_;
    std::size_t                   qhead_  = 0;
    int                           cursor_ = 0;
    bool                          ok_     = true;
};

} // namespace aspdbg::detail
