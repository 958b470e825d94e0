#include "ks/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ks {

namespace {

std::uint64_t checked_count_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("coloring count exceeds 64 bits");
    }
    return r;
}

// Backtracking over contexts with a shared per-ray state and an undo trail.
// Contexts are picked dynamically: fewest currently-unassigned members first,
// declaration order on ties.  Correctness does not depend on the order; it
// only drives pruning.
class Solver {
  public:
    Solver(const KSSet& set, const ColoringOptions& opts, bool count_mode)
        : set_(set), strong_(opts.strong_orthogonality), count_mode_(count_mode) {
        auto index = set.ray_index();
        n_ = set.rays.size();
        state_.assign(n_, kUnknown);
        members_.reserve(set.contexts.size());
        for (const auto& ctx : set.contexts) {
            std::vector<std::size_t> ms;
            ms.reserve(ctx.members.size());
            for (const auto& m : ctx.members) {
                ms.push_back(index.at(m));
            }
            members_.push_back(std::move(ms));
        }
        done_.assign(members_.size(), false);
        if (strong_) {
            orthogonal_.assign(n_, {});
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = i + 1; j < n_; ++j) {
                    if (dot(set.rays[i].ray, set.rays[j].ray).is_zero()) {
                        orthogonal_[i].push_back(j);
                        orthogonal_[j].push_back(i);
                    }
                }
            }
        }
    }

    std::uint64_t run() { return search(); }

    std::optional<Assignment> solution() const {
        if (!solution_) return std::nullopt;
        Assignment a;
        for (std::size_t i = 0; i < n_; ++i) {
            a.emplace(set_.rays[i].name, (*solution_)[i] == kYes);
        }
        return a;
    }

  private:
    static constexpr std::int8_t kUnknown = -1;
    static constexpr std::int8_t kNo = 0;
    static constexpr std::int8_t kYes = 1;

    bool set_no(std::size_t r) {
        if (state_[r] == kYes) return false;
        if (state_[r] == kUnknown) {
            state_[r] = kNo;
            trail_.push_back(r);
        }
        return true;
    }

    bool set_yes(std::size_t r) {
        if (state_[r] == kNo) return false;
        if (state_[r] == kUnknown) {
            state_[r] = kYes;
            trail_.push_back(r);
        }
        if (strong_) {
            for (std::size_t o : orthogonal_[r]) {
                if (!set_no(o)) return false;
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            state_[trail_.back()] = kUnknown;
            trail_.pop_back();
        }
    }

    std::uint64_t search() {
        if (done_count_ == members_.size()) return leaf();

        // Most-constrained context next.
        std::size_t best = members_.size();
        std::size_t best_unknown = std::numeric_limits<std::size_t>::max();
        for (std::size_t ci = 0; ci < members_.size(); ++ci) {
            if (done_[ci]) continue;
            std::size_t unknown = 0;
            for (std::size_t m : members_[ci]) {
                if (state_[m] == kUnknown) ++unknown;
            }
            if (unknown < best_unknown) {
                best_unknown = unknown;
                best = ci;
            }
        }

        done_[best] = true;
        ++done_count_;
        std::uint64_t total = solve_context(best);
        done_[best] = false;
        --done_count_;
        return total;
    }

    std::uint64_t solve_context(std::size_t ci) {
        const auto& mem = members_[ci];
        std::size_t yes = 0;
        for (std::size_t m : mem) {
            if (state_[m] == kYes) ++yes;
        }
        if (yes > 1) return 0;

        if (yes == 1) {
            // Context already satisfied; the rest of its members must be no.
            std::size_t mark = trail_.size();
            for (std::size_t m : mem) {
                if (state_[m] == kUnknown && !set_no(m)) {
                    undo_to(mark);
                    return 0;
                }
            }
            std::uint64_t total = search();
            undo_to(mark);
            return total;
        }

        std::uint64_t total = 0;
        for (std::size_t m : mem) {
            if (state_[m] != kUnknown) continue;
            std::size_t mark = trail_.size();
            bool feasible = set_yes(m);
            for (std::size_t m2 : mem) {
                if (!feasible) break;
                if (m2 == m) continue;
                feasible = set_no(m2);
            }
            if (feasible) {
                total = checked_count_add(total, search());
            }
            undo_to(mark);
            if (!count_mode_ && solution_) return total;
        }
        return total;
    }

    std::uint64_t leaf() {
        if (!count_mode_) {
            // Freeze a witness: rays untouched by any context default to no.
            std::vector<std::int8_t> sol = state_;
            for (auto& s : sol) {
                if (s == kUnknown) s = kNo;
            }
            solution_ = std::move(sol);
            return 1;
        }
        std::vector<std::size_t> free;
        for (std::size_t r = 0; r < n_; ++r) {
            if (state_[r] == kUnknown) free.push_back(r);
        }
        if (!strong_) {
            // Context-free rays are unconstrained: two choices each.
            if (free.size() >= 64) throw std::overflow_error("coloring count exceeds 64 bits");
            return std::uint64_t{1} << free.size();
        }
        return count_free_completions(free, 0);
    }

    // Strong rule: completions over leftover rays are the independent sets of
    // their orthogonality graph (orthogonal pairs cannot both be yes).
    std::uint64_t count_free_completions(const std::vector<std::size_t>& free, std::size_t idx) {
        if (idx == free.size()) return 1;
        std::size_t r = free[idx];
        std::uint64_t total = count_free_completions(free, idx + 1);  // r = no
        if (state_[r] == kUnknown) {
            std::size_t mark = trail_.size();
            if (set_yes(r)) {
                total = checked_count_add(total, count_free_completions(free, idx + 1));
            }
            undo_to(mark);
        }
        return total;
    }

    const KSSet& set_;
    bool strong_;
    bool count_mode_;
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<std::size_t>> orthogonal_;
    std::vector<std::int8_t> state_;
    std::vector<bool> done_;
    std::size_t done_count_ = 0;
    std::vector<std::size_t> trail_;
    std::optional<std::vector<std::int8_t>> solution_;
};

void require_verified(const KSSet& set, const char* op) {
    if (!verify(set).ok) {
        throw std::invalid_argument(std::string(op) + ": set does not verify");
    }
}

}  // namespace

std::optional<Assignment> find_coloring(const KSSet& set, const ColoringOptions& opts) {
    require_verified(set, "find_coloring");
    Solver solver(set, opts, /*count_mode=*/false);
    solver.run();
    return solver.solution();
}

std::uint64_t count_colorings(const KSSet& set, const ColoringOptions& opts) {
    require_verified(set, "count_colorings");
    Solver solver(set, opts, /*count_mode=*/true);
    return solver.run();
}

std::uint64_t count_colorings_bruteforce(const KSSet& set, const ColoringOptions& opts) {
    require_verified(set, "count_colorings_bruteforce");
    const std::size_t n = set.rays.size();
    if (n > 24) {
        throw std::invalid_argument("count_colorings_bruteforce: more than 24 rays");
    }

    auto index = set.ray_index();
    std::vector<std::uint32_t> context_masks;
    context_masks.reserve(set.contexts.size());
    for (const auto& ctx : set.contexts) {
        std::uint32_t mask = 0;
        for (const auto& m : ctx.members) {
            mask |= std::uint32_t{1} << index.at(m);
        }
        context_masks.push_back(mask);
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> orth_pairs;
    if (opts.strong_orthogonality) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (dot(set.rays[i].ray, set.rays[j].ray).is_zero()) {
                    orth_pairs.emplace_back(std::uint32_t{1} << i, std::uint32_t{1} << j);
                }
            }
        }
    }

    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t yes = 0; yes < limit; ++yes) {
        bool ok = true;
        for (std::uint32_t mask : context_masks) {
            if (std::popcount(static_cast<std::uint32_t>(yes) & mask) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& [a, b] : orth_pairs) {
                if ((yes & a) && (yes & b)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }
    return count;
}

bool is_valid_coloring(const KSSet& set, const Assignment& assignment,
                       const ColoringOptions& opts) {
    for (const auto& nr : set.rays) {
        if (!assignment.count(nr.name)) return false;
    }
    for (const auto& ctx : set.contexts) {
        std::size_t yes = 0;
        for (const auto& m : ctx.members) {
            auto it = assignment.find(m);
            if (it == assignment.end()) return false;
            if (it->second) ++yes;
        }
        if (yes != 1) return false;
    }
    if (opts.strong_orthogonality) {
        for (std::size_t i = 0; i < set.rays.size(); ++i) {
            if (!assignment.at(set.rays[i].name)) continue;
            for (std::size_t j = i + 1; j < set.rays.size(); ++j) {
                if (!assignment.at(set.rays[j].name)) continue;
                if (dot(set.rays[i].ray, set.rays[j].ray).is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace ks
