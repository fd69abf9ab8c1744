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

#include "sat.hpp"

#include <algorithm>
#include <cassert>

namespace aspdbg::detail {

Sat::Sat(int vars) {
    for (int i = 0; i != vars; ++i) {
        new_var();
    }
}

int Sat::new_var() {
    int v = vars();
    value_.push_back(unset);
    var_level_.push_back(0);
    reason_.push_back(-1);
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    return v;
}

bool Sat::add_clause(std::vector<Lit> c) {
    assert(level() == 0);
    if (!ok_) {
        return false;
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i != c.size(); ++i) {
        if (i + 1 != c.size() && c[i + 1] == negate(c[i])) {
            return true; // tautology
        }
        auto v = lit_value(c[i]);
        if (v == 1) {
            return true;
        }
        if (v == unset) {
            kept.push_back(c[i]);
        }
    }
    if (kept.empty()) {
        ok_ = false;
    }
    else if (kept.size() == 1) {
        assign(kept[0], -1);
        ok_ = propagate() == -1;
    }
    else {
        attach(std::move(kept));
    }
    return ok_;
}

int Sat::attach(std::vector<Lit> c) {
    int idx = static_cast<int>(clauses_.size());
    watches_[c[0]].push_back(idx);
    watches_[c[1]].push_back(idx);
    clauses_.push_back(std::move(c));
    return idx;
}

void Sat::assign(Lit l, int reason) {
    int v         = var_of(l);
    value_[v]     = is_neg(l) ? 0 : 1;
    var_level_[v] = level();
    reason_[v]    = reason;
    trail_.push_back(l);
}

int Sat::propagate() {
    while (qhead_ < trail_.size()) {
        Lit   false_lit = negate(trail_[qhead_++]);
        auto& ws        = watches_[false_lit];
        std::size_t i = 0, j = 0;
        while (i != ws.size()) {
            int   ci = ws[i++];
            auto& c  = clauses_[ci];
            if (c[0] == false_lit) {
                std::swap(c[0], c[1]);
            }
            if (lit_value(c[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k != c.size(); ++k) {
                if (lit_value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[c[1]].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) {
                continue;
            }
            ws[j++] = ci;
            if (lit_value(c[0]) == 0) {
                while (i != ws.size()) {
                    ws[j++] = ws[i++];
                }
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            assign(c[0], ci);
        }
        ws.resize(j);
    }
    return -1;
}

void Sat::analyze(int conflict, std::vector<Lit>& learnt, int& back_level) {
    learnt.assign(1, 0);
    int  open = 0;
    Lit  p    = -1;
    auto idx  = static_cast<std::ptrdiff_t>(trail_.size()) - 1;
    int  ci   = conflict;
    do {
        const auto& c = clauses_[ci];
        for (std::size_t k = p == -1 ? 0 : 1; k != c.size(); ++k) {
            int v = var_of(c[k]);
            if (!seen_[v] && var_level_[v] > 0) {
                seen_[v] = 1;
                if (var_level_[v] >= level()) {
                    ++open;
                }
                else {
                    learnt.push_back(c[k]);
                }
            }
        }
        while (!seen_[var_of(trail_[idx])]) {
            --idx;
        }
        p  = trail_[idx--];
        ci = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --open;
    } while (open > 0);
    learnt[0] = negate(p);

    back_level = 0;
    std::size_t at = 1;
    for (std::size_t k = 1; k != learnt.size(); ++k) {
        seen_[var_of(learnt[k])] = 0;
        if (var_level_[var_of(learnt[k])] > back_level) {
            back_level = var_level_[var_of(learnt[k])];
            at         = k;
        }
    }
    if (learnt.size() > 1) {
        std::swap(learnt[1], learnt[at]);
    }
}

void Sat::cancel_until(int lvl) {
    if (level() <= lvl) {
        return;
    }
    for (auto i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
        int v      = var_of(trail_[i]);
        value_[v]  = unset;
        reason_[v] = -1;
        cursor_    = std::min(cursor_, v);
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
}

bool Sat::solve(const std::vector<Lit>& assumptions) {
    model_.clear();
    if (!ok_) {
        return false;
    }
    std::vector<Lit> learnt;
    for (;;) {
        int conflict = propagate();
        if (conflict != -1) {
            if (level() == 0) {
                ok_ = false;
                return false;
            }
            int back = 0;
            analyze(conflict, learnt, back);
            cancel_until(back);
            if (learnt.size() == 1) {
                assign(learnt[0], -1);
            }
            else {
                Lit first = learnt[0];
                assign(first, attach(learnt));
            }
            continue;
        }
        Lit next = -1;
        while (static_cast<std::size_t>(level()) < assumptions.size()) {
            Lit a = assumptions[level()];
            auto v = lit_value(a);
            if (v == 1) {
                trail_lim_.push_back(static_cast<int>(trail_.size()));
            }
            else if (v == 0) {
                cancel_until(0);
                return false;
            }
            else {
                next = a;
                break;
            }
        }
        if (next == -1) {
            while (cursor_ < vars() && value_[cursor_] != unset) {
                ++cursor_;
            }
            if (cursor_ == vars()) {
                model_ = value_;
                cancel_until(0);
                return true;
            }
            next = neg_lit(cursor_);
        }
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        assign(next, -1);
    }
}

} // namespace aspdbg::detail
