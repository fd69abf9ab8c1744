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

#include <aspdbg/ground.hpp>
#include <aspdbg/syntax.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace aspdbg {

using Interpretation = std::set<Atom>;

/// Ordered set of ground literals fixed true for one solver call. Insertion
/// order is kept; it is the order in which core minimization tries to drop
/// literals.
class AssumptionSet {
public:
    AssumptionSet() = default;
    AssumptionSet(std::initializer_list<Literal> lits);

    /// Returns false if `l` is already present. Throws Error if the complement is present.
    bool add(const Literal& l);
    void add_all(const AssumptionSet& other);
    bool remove(const Literal& l);

    [[nodiscard]] bool                        contains(const Literal& l) const;
    [[nodiscard]] const std::vector<Literal>& literals() const { return lits_; }
    [[nodiscard]] std::size_t                 size() const { return lits_.size(); }
    [[nodiscard]] bool                        empty() const { return lits_.empty(); }

    [[nodiscard]] auto begin() const { return lits_.begin(); }
    [[nodiscard]] auto end() const { return lits_.end(); }

private:
    std::vector<Literal> lits_;
};

struct Core {
    std::vector<Literal> literals;
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

namespace detail {
class Sat;
}

/// Ground answer-set search over one program.
///
/// Candidate models come from a clause-learning search over the rules read as
/// clauses plus support clauses; atoms are decided in lexicographic order,
/// false first. Each candidate is then checked for minimality against its
/// reduct, and a failed check adds the loop formula of the unfounded atoms
/// found. Debug and support atoms have no defining rules and are treated as
/// free: they may be true or false, unless fixed by an assumption.
///
/// The const members may be called concurrently.
class Engine {
public:
    explicit Engine(const GroundProgram& g);
    ~Engine();
    Engine(Engine&&) noexcept;
    Engine& operator=(Engine&&) noexcept;

    /// Calls `on_model` for every answer set satisfying `assume`, in search
    /// order, until it returns false.
    void search(const AssumptionSet& assume, const std::function<bool(const Interpretation&)>& on_model) const;

    [[nodiscard]] std::optional<Interpretation> solve(const AssumptionSet& assume) const;
    [[nodiscard]] std::vector<Interpretation>   enumerate(const AssumptionSet& assume, std::size_t limit) const;
    [[nodiscard]] bool                          coherent(const AssumptionSet& assume) const;

    /// Minimality of `m` w.r.t. the reduct; assumes `m` is a model.
    [[nodiscard]] bool is_minimal(const Interpretation& m) const;

    [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }

private:
    struct CompiledRule {
        std::vector<int> head;
        std::vector<int> pos;
        std::vector<int> neg;
    };

    [[nodiscard]] int              index_of(const Atom& a) const;
    /// Non-free atoms of `m` outside a smaller model of the reduct; empty iff stable.
    [[nodiscard]] std::vector<int> unfounded(const std::vector<bool>& m) const;
    void                           add_loop_formula(detail::Sat& s, const std::vector<int>& u) const;

    std::vector<Atom>                  atoms_;
    std::map<Atom, int>                index_;
    std::vector<bool>                  free_;
    std::vector<CompiledRule>          rules_;
    std::vector<int>                   body_var_;
    std::unique_ptr<const detail::Sat> base_;
};

bool           is_model(const GroundProgram& g, const Interpretation& i);
GroundProgram  reduct(const GroundProgram& g, const Interpretation& i);
bool           is_answer_set(const GroundProgram& g, const Interpretation& m);
std::vector<Interpretation> enumerate(const GroundProgram& g, const AssumptionSet& assume = {},
                                      std::size_t limit = unlimited);
bool           is_coherent(const GroundProgram& g, const AssumptionSet& assume = {});

/// Returns an answer set if `g` is coherent under `assume` and `context`,
/// otherwise a 1-minimal core C of `assume`: `g` is incoherent under
/// C together with `context`, and dropping any single literal of C restores
/// coherence. `context` literals are always kept and never appear in C.
/// Literals are dropped in the order of `assume`.
std::variant<Interpretation, Core> solve_with_core(const GroundProgram& g, const AssumptionSet& assume,
                                                   const AssumptionSet& context = {});

/// Same as above, reusing a compiled engine.
std::variant<Interpretation, Core> solve_with_core(const Engine& e, const AssumptionSet& assume,
                                                   const AssumptionSet& context = {});

std::string format_interpretation(const Interpretation& i);

} // namespace aspdbg
