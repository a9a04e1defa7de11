#include "palettelab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace palettelab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kColorLimit = 64;  // colors live in uint64_t masks

std::uint64_t low_bits(int count) {
    return count >= 64 ? ~0ull : ((1ull << count) - 1);
}

struct Shared {
    std::atomic<int> incumbent{INT_MAX};
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex witness_mutex;
    std::vector<int> witness;  // edge -> color; empty means none yet
    int witness_value = INT_MAX;
    bool has_deadline = false;
    Clock::time_point deadline;
    int stop_threshold = 0;  // proven global lower bound; stop once reached
    bool feasibility_only = false;
};

struct CompletedPalette {
    std::uint64_t mask;
    int size;
    int refs;
};

struct Undo {
    bool introduced = false;
    bool x_pushed = false, x_completed = false;
    bool y_pushed = false, y_completed = false;
};

// Depth-first min-palette / feasibility search over one color universe.
// Copyable so parallel workers can clone the prefixed root state.
class Searcher {
public:
    Searcher(const Multigraph& g, int k, bool canonical, Shared& shared)
        : k_(k), canonical_(canonical), shared_(&shared) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        delta_ = g.max_degree();
        ends_.reserve(m_);
        for (EdgeId e = 0; e < m_; ++e) ends_.push_back(g.endpoints(e));
        deg_.resize(n_);
        for (VertexId v = 0; v < n_; ++v) deg_[v] = g.degree(v);

        vused_.assign(n_, 0);
        vleft_ = deg_;
        assign_.assign(m_, -1);
        ecnt_.assign(k_, 0);
        vcnt_.assign(k_, 0);
        capsum_ = static_cast<long long>(k_) * (n_ / 2);
        completed_by_size_.assign(delta_ + 1, 0);
        incomplete_by_size_.assign(delta_ + 1, 0);
        for (VertexId v = 0; v < n_; ++v) ++incomplete_by_size_[deg_[v]];
        {
            std::set<int> degs(deg_.begin(), deg_.end());
            present_degrees_.assign(degs.begin(), degs.end());
        }
        for (VertexId v = 0; v < n_; ++v)
            if (deg_[v] == 0) complete_vertex(v);

        order_.resize(m_);
        for (EdgeId e = 0; e < m_; ++e) order_[e] = e;
        std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            int sa = deg_[ends_[a].first] + deg_[ends_[a].second];
            int sb = deg_[ends_[b].first] + deg_[ends_[b].second];
            if (sa != sb) return sa > sb;
            return a < b;
        });

        if (canonical_ && m_ > 0 && k_ >= delta_) fix_prefix(g);
    }

    void run(std::size_t pos) {
        search(pos);
        flush_nodes();
    }

    // Expand the search frontier to the given depth, collecting the color
    // prefixes of surviving nodes; leaves reached earlier are evaluated in
    // place. Shares all pruning with search().
    void collect_tasks(std::size_t pos, std::size_t limit,
                       std::vector<std::vector<int>>& out) {
        collect_limit_ = limit;
        collect_out_ = &out;
        search(pos);
        collect_limit_ = SIZE_MAX;
        collect_out_ = nullptr;
        flush_nodes();
    }

    // Re-apply a task prefix produced by collect_tasks. Returns false when
    // the subtree is already dominated by the current incumbent.
    bool replay(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i)
            do_assign(order_[i], prefix[i]);
        if (shared_->feasibility_only) return true;
        return lower_bound() <= shared_->incumbent.load(std::memory_order_relaxed) - 1;
    }

    std::size_t branch_edges() const { return order_.size(); }

private:
    // Pin one max-degree vertex's edges to colors 0..delta-1; together with
    // first-use ordering of the remaining colors this picks one canonical
    // representative from every color-permutation orbit.
    void fix_prefix(const Multigraph& g) {
        VertexId pivot = 0;
        while (deg_[pivot] != delta_) ++pivot;
        std::vector<EdgeId> incident = g.incident_edges(pivot);
        std::sort(incident.begin(), incident.end());
        int c = 0;
        for (EdgeId e : incident) {
            do_assign(e, c++);
            order_.erase(std::find(order_.begin(), order_.end(), e));
        }
    }

    bool complete_vertex(VertexId v) {
        int d = deg_[v];
        --incomplete_by_size_[d];
        std::uint64_t mask = vused_[v];
        for (auto& cp : completed_) {
            if (cp.size == d && cp.mask == mask) {
                ++cp.refs;
                return false;
            }
        }
        completed_.push_back({mask, d, 1});
        ++completed_by_size_[d];
        return true;
    }

    void uncomplete_vertex(VertexId v, bool pushed) {
        int d = deg_[v];
        ++incomplete_by_size_[d];
        if (pushed) {
            completed_.pop_back();
            --completed_by_size_[d];
            return;
        }
        std::uint64_t mask = vused_[v];
        for (auto& cp : completed_) {
            if (cp.size == d && cp.mask == mask) {
                --cp.refs;
                return;
            }
        }
    }

    Undo do_assign(EdgeId e, int c) {
        Undo u;
        auto [x, y] = ends_[e];
        assign_[e] = c;
        ++assigned_;
        if (ecnt_[c]++ == 0) {
            in_play_ |= 1ull << c;
            ++colors_in_play_;
            u.introduced = true;
        }
        capsum_ -= ((n_ - vcnt_[c]) % 2 == 0) ? 1 : 0;
        ++vcnt_[c];
        capsum_ -= ((n_ - vcnt_[c]) % 2 == 0) ? 1 : 0;
        ++vcnt_[c];
        vused_[x] |= 1ull << c;
        vused_[y] |= 1ull << c;
        if (--vleft_[x] == 0) {
            u.x_completed = true;
            u.x_pushed = complete_vertex(x);
        }
        if (--vleft_[y] == 0) {
            u.y_completed = true;
            u.y_pushed = complete_vertex(y);
        }
        return u;
    }

    void undo_assign(EdgeId e, int c, const Undo& u) {
        auto [x, y] = ends_[e];
        if (u.y_completed) uncomplete_vertex(y, u.y_pushed);
        if (u.x_completed) uncomplete_vertex(x, u.x_pushed);
        ++vleft_[x];
        ++vleft_[y];
        vused_[x] &= ~(1ull << c);
        vused_[y] &= ~(1ull << c);
        --vcnt_[c];
        capsum_ += ((n_ - vcnt_[c]) % 2 == 0) ? 1 : 0;
        --vcnt_[c];
        capsum_ += ((n_ - vcnt_[c]) % 2 == 0) ? 1 : 0;
        if (u.introduced) {
            --ecnt_[c];
            in_play_ &= ~(1ull << c);
            --colors_in_play_;
        } else {
            --ecnt_[c];
        }
        assign_[e] = -1;
        --assigned_;
    }

    int lower_bound() const {
        int lb = static_cast<int>(completed_.size());
        for (int d : present_degrees_)
            if (completed_by_size_[d] == 0 && incomplete_by_size_[d] > 0) ++lb;
        return lb;
    }

    // Union of completed palettes of v's degree class that extend v's
    // current partial palette; only meaningful when the class has one.
    std::uint64_t fit_union(VertexId v) const {
        int d = deg_[v];
        std::uint64_t have = vused_[v];
        std::uint64_t out = 0;
        for (const auto& cp : completed_)
            if (cp.size == d && (cp.mask & have) == have) out |= cp.mask;
        return out;
    }

    void record_leaf() {
        int count = static_cast<int>(completed_.size());
        if (shared_->feasibility_only) {
            std::lock_guard<std::mutex> lk(shared_->witness_mutex);
            if (shared_->witness.empty()) {
                shared_->witness = assign_;
                shared_->witness_value = count;
            }
            shared_->incumbent.store(count);
            shared_->stop.store(true);
            return;
        }
        int cur = shared_->incumbent.load();
        while (count < cur &&
               !shared_->incumbent.compare_exchange_weak(cur, count)) {
        }
        if (count < cur) {
            std::lock_guard<std::mutex> lk(shared_->witness_mutex);
            if (count < shared_->witness_value) {
                shared_->witness = assign_;
                shared_->witness_value = count;
            }
        }
        if (count <= shared_->stop_threshold) shared_->stop.store(true);
    }

    void flush_nodes() {
        shared_->nodes.fetch_add(local_nodes_);
        local_nodes_ = 0;
    }

    void search(std::size_t pos) {
        if (shared_->stop.load(std::memory_order_relaxed)) return;
        if ((++local_nodes_ & 1023) == 0 && shared_->has_deadline &&
            Clock::now() > shared_->deadline) {
            shared_->timed_out.store(true);
            shared_->stop.store(true);
            return;
        }
        if (pos == order_.size()) {
            record_leaf();
            return;
        }
        if (pos == collect_limit_) {
            collect_out_->emplace_back(prefix_colors(pos));
            return;
        }

        EdgeId e = order_[pos];
        auto [x, y] = ends_[e];

        int slack = INT_MAX;
        if (!shared_->feasibility_only) {
            int target = shared_->incumbent.load(std::memory_order_relaxed) - 1;
            int lb = lower_bound();
            if (lb > target) return;
            slack = target - lb;
        }
        if (capsum_ < m_ - assigned_) return;
        if (k_ - std::popcount(vused_[x]) < vleft_[x]) return;
        if (k_ - std::popcount(vused_[y]) < vleft_[y]) return;

        std::uint64_t feas = ~(vused_[x] | vused_[y]) & low_bits(k_);
        bool can_new = true;
        if (!shared_->feasibility_only) {
            int target = shared_->incumbent.load(std::memory_order_relaxed) - 1;
            long long cap = static_cast<long long>(target) * delta_;
            can_new = colors_in_play_ < cap;
        }
        std::uint64_t allowed;
        if (canonical_) {
            allowed = low_bits(colors_in_play_);
            if (can_new && colors_in_play_ < k_) allowed |= 1ull << colors_in_play_;
        } else {
            allowed = can_new ? low_bits(k_) : in_play_;
        }
        std::uint64_t cands = feas & allowed;
        if (!cands) return;

        std::uint64_t fx = fit_union(x);
        std::uint64_t fy = fit_union(y);
        if (slack == 0) {
            // No new distinct palette may appear: vertices whose degree
            // class already produced one must finish inside an existing
            // palette mask.
            if (completed_by_size_[deg_[x]] > 0) cands &= fx;
            if (completed_by_size_[deg_[y]] > 0) cands &= fy;
            if (!cands) return;
        }

        // Try colors that steer both endpoints toward existing palettes
        // first, then one endpoint, then the rest.
        std::uint64_t tiers[3];
        tiers[0] = cands & fx & fy;
        tiers[1] = (cands & (fx | fy)) & ~tiers[0];
        tiers[2] = cands & ~(fx | fy);
        for (std::uint64_t tier : tiers) {
            while (tier) {
                int c = std::countr_zero(tier);
                tier &= tier - 1;
                Undo u = do_assign(e, c);
                search(pos + 1);
                undo_assign(e, c, u);
                if (shared_->stop.load(std::memory_order_relaxed)) return;
            }
        }
    }

    std::vector<int> prefix_colors(std::size_t depth) const {
        std::vector<int> prefix(depth);
        for (std::size_t i = 0; i < depth; ++i) prefix[i] = assign_[order_[i]];
        return prefix;
    }

    int k_;
    bool canonical_;
    Shared* shared_;
    int n_ = 0, m_ = 0, delta_ = 0;
    std::vector<std::pair<VertexId, VertexId>> ends_;
    std::vector<int> deg_;
    std::vector<EdgeId> order_;

    std::vector<std::uint64_t> vused_;
    std::vector<int> vleft_;
    std::vector<int> assign_;
    std::vector<int> ecnt_;
    std::vector<int> vcnt_;
    std::uint64_t in_play_ = 0;
    int colors_in_play_ = 0;
    long long capsum_ = 0;
    int assigned_ = 0;
    std::vector<CompletedPalette> completed_;
    std::vector<int> completed_by_size_;
    std::vector<int> incomplete_by_size_;
    std::vector<int> present_degrees_;
    std::uint64_t local_nodes_ = 0;

    std::size_t collect_limit_ = SIZE_MAX;
    std::vector<std::vector<int>>* collect_out_ = nullptr;
};

struct RunResult {
    int best = INT_MAX;
    std::optional<std::vector<int>> witness;
    bool complete = true;  // proven optimal over this universe
    bool timed_out = false;
    std::uint64_t nodes = 0;
};

RunResult run_search(const Multigraph& g, int k, bool feasibility,
                     const SearchConfig& cfg,
                     std::optional<Clock::time_point> deadline,
                     int incumbent_init = INT_MAX, int stop_threshold = 0,
                     const std::vector<int>* witness_init = nullptr) {
    Shared shared;
    shared.incumbent.store(incumbent_init);
    shared.stop_threshold = stop_threshold;
    shared.feasibility_only = feasibility;
    if (witness_init) {
        shared.witness = *witness_init;
        shared.witness_value = incumbent_init;
    }
    if (deadline) {
        shared.has_deadline = true;
        shared.deadline = *deadline;
    }

    Searcher root(g, k, cfg.symmetry_breaking, shared);
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || root.branch_edges() <= 1) {
        root.run(0);
    } else {
        // Widen the frontier breadth-first, then hand surviving prefixes to
        // a thread pool; leaves met during expansion are scored in place.
        std::vector<std::vector<int>> tasks{{}};
        std::size_t depth = 0;
        std::size_t want = static_cast<std::size_t>(workers) * 8;
        while (!tasks.empty() && tasks.size() < want &&
               depth + 1 < root.branch_edges() && !shared.stop.load()) {
            ++depth;
            std::vector<std::vector<int>> next;
            for (const auto& t : tasks) {
                Searcher s = root;
                if (!s.replay(t)) continue;
                s.collect_tasks(t.size(), depth, next);
            }
            tasks = std::move(next);
        }
        if (!tasks.empty() && !shared.stop.load()) {
            std::atomic<std::size_t> cursor{0};
            auto body = [&]() {
                while (!shared.stop.load(std::memory_order_relaxed)) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= tasks.size()) break;
                    Searcher w = root;
                    if (!w.replay(tasks[i])) continue;
                    w.run(tasks[i].size());
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t) pool.emplace_back(body);
            for (auto& th : pool) th.join();
        }
    }

    RunResult r;
    r.best = shared.incumbent.load();
    if (!shared.witness.empty() || g.edge_count() == 0)
        r.witness = shared.witness;
    r.timed_out = shared.timed_out.load();
    r.complete = !r.timed_out;
    r.nodes = shared.nodes.load();
    return r;
}

std::optional<Clock::time_point> make_deadline(const SearchConfig& cfg) {
    if (!cfg.time_budget_ms) return std::nullopt;
    return Clock::now() + std::chrono::milliseconds(*cfg.time_budget_ms);
}

int effective_color_ceiling(const Multigraph& g, const SearchConfig& cfg) {
    int hard = std::min(g.edge_count(), kColorLimit);
    if (cfg.max_colors) {
        if (*cfg.max_colors < g.max_degree())
            throw std::invalid_argument(
                "max_colors is below the maximum degree; no proper coloring fits");
        return std::min(*cfg.max_colors, hard);
    }
    return hard;
}

EdgeColoring witness_to_coloring(const std::vector<int>& assign, int k) {
    EdgeColoring c;
    c.k = k;
    c.assignment = assign;
    return c;
}

}  // namespace

int degree_diversity_lower_bound(const Multigraph& g) {
    std::set<int> degs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degs.insert(g.degree(v));
    return static_cast<int>(degs.size());
}

long long trivial_palette_upper_bound(int delta) {
    if (delta < 0 || delta > 61)
        throw std::invalid_argument("trivial_palette_upper_bound: delta out of range");
    if (delta == 0) return 1;
    return (1ll << (delta + 1)) - 2;
}

std::pair<long long, long long> gdelta_bounds(int delta) {
    if (delta < 4 || delta % 2 != 0)
        throw std::invalid_argument(
            "gdelta_bounds: only even maximum degree is supported (and it must be at least 4)");
    long long d = delta;
    return {d / 2 * (d - 2), (d + 1) * (d - 2)};
}

ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchConfig& cfg) {
    ChromaticIndexResult out;
    if (g.edge_count() == 0) return out;
    auto deadline = make_deadline(cfg);
    int delta = g.max_degree();
    int ceiling = delta + g.max_multiplicity();
    if (ceiling > kColorLimit)
        throw std::invalid_argument("chromatic_index: needs more than 64 colors");
    for (int k = delta; k <= ceiling; ++k) {
        RunResult r = run_search(g, k, /*feasibility=*/true, cfg, deadline);
        if (r.witness && !r.witness->empty()) {
            out.value = k;
            out.exact = true;
            out.lower = k;
            out.upper = k;
            return out;
        }
        if (r.timed_out) {
            out.value = ceiling;
            out.exact = false;
            out.lower = k;
            out.upper = ceiling;
            return out;
        }
    }
    throw std::logic_error("chromatic_index: feasibility never reached its ceiling");
}

MinPalettesResult min_palettes_with_k_colors(const Multigraph& g, int k,
                                             const SearchConfig& cfg) {
    if (k < 0 || k > kColorLimit)
        throw std::invalid_argument("min_palettes_with_k_colors: k must be in [0, 64]");
    MinPalettesResult out;
    if (g.edge_count() == 0) {
        out.value = 1;
        out.witness.k = k;
        out.exact = true;
        return out;
    }
    auto deadline = make_deadline(cfg);
    ChromaticIndexResult chi = chromatic_index(g, cfg);
    if (!chi.exact)
        throw std::runtime_error("min_palettes_with_k_colors: time budget exhausted");
    if (k < chi.value) {
        std::ostringstream msg;
        msg << "min_palettes_with_k_colors: k=" << k
            << " is below the chromatic index " << chi.value;
        throw std::invalid_argument(msg.str());
    }
    int lb = degree_diversity_lower_bound(g);
    RunResult r = run_search(g, k, /*feasibility=*/false, cfg, deadline,
                             INT_MAX, lb);
    out.nodes = r.nodes;
    if (!r.witness)
        throw std::runtime_error("min_palettes_with_k_colors: time budget exhausted");
    out.value = r.best;
    out.exact = r.complete || r.best <= lb;
    out.witness = witness_to_coloring(*r.witness, k);
    return out;
}

PaletteIndexResult palette_index(const Multigraph& g, const SearchConfig& cfg) {
    auto t0 = Clock::now();
    PaletteIndexResult out;
    out.lower_bound = degree_diversity_lower_bound(g);
    if (g.edge_count() == 0) {
        out.value = 1;
        out.exact = true;
        out.colors_used = 0;
        out.witness = witness_to_coloring({}, 0);
        return out;
    }
    auto deadline = make_deadline(cfg);
    int delta = g.max_degree();

    ChromaticIndexResult chi = chromatic_index(g, cfg);
    if (!chi.exact) {
        out.exact = false;
        out.value = -1;
        return out;
    }
    int cap = effective_color_ceiling(g, cfg);
    if (cap < chi.value)
        throw std::invalid_argument(
            "palette_index: max_colors is below the chromatic index");

    int lb = out.lower_bound;
    int incumbent = INT_MAX;
    std::optional<std::vector<int>> witness;
    int k = chi.value;
    int searched_max = 0;
    out.explored_k_min = k;
    bool timed_out = false;

    while (true) {
        SearchConfig pass = cfg;
        RunResult r = run_search(g, k, /*feasibility=*/false, pass, deadline,
                                 incumbent, lb,
                                 witness ? &*witness : nullptr);
        out.nodes += r.nodes;
        searched_max = k;
        if (r.best < incumbent) {
            incumbent = r.best;
            witness = r.witness;
        }
        if (r.timed_out) {
            timed_out = true;
            break;
        }
        if (incumbent <= lb) break;
        // Any coloring with fewer palettes than the incumbent uses at most
        // (incumbent - 1) * delta colors, so searching a universe that wide
        // settles the question.
        long long needed_ll = std::min<long long>(
            g.edge_count(), static_cast<long long>(incumbent - 1) * delta);
        int needed = static_cast<int>(std::min<long long>(needed_ll, INT_MAX));
        if (k >= needed || k >= cap) break;
        int next = std::min({cap, needed});
        if (k == chi.value) {
            int mid = std::max(k + 1, (3 * delta + 1) / 2);
            next = std::min(next, mid);
        }
        k = std::max(k + 1, next);
    }

    out.explored_k_max = searched_max;
    out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - t0)
                      .count();
    if (incumbent == INT_MAX) {
        out.exact = false;
        out.value = -1;
        return out;
    }
    out.value = incumbent;
    long long needed_ll = std::min<long long>(
        g.edge_count(), static_cast<long long>(incumbent - 1) * delta);
    out.exact = !timed_out &&
                (incumbent <= lb ||
                 (needed_ll <= kColorLimit && searched_max >= needed_ll &&
                  (!cfg.max_colors || cap >= needed_ll)));
    EdgeColoring w = witness_to_coloring(*witness, searched_max);
    w = strip_unused_colors(w);
    out.colors_used = w.k;
    out.witness = w;
    return out;
}

ChiPrimeSResult chi_prime_s(const Multigraph& g, const SearchConfig& cfg) {
    PaletteIndexResult pi = palette_index(g, cfg);
    if (!pi.exact)
        throw std::runtime_error(
            "chi_prime_s: palette index search was inexact; cannot certify the minimum");
    ChiPrimeSResult out;
    out.palette_count = pi.value;
    if (g.edge_count() == 0) {
        out.k = 0;
        out.witness = *pi.witness;
        return out;
    }
    auto deadline = make_deadline(cfg);
    ChromaticIndexResult chi = chromatic_index(g, cfg);
    for (int k = chi.value; k <= pi.colors_used; ++k) {
        RunResult r = run_search(g, k, /*feasibility=*/false, cfg, deadline,
                                 pi.value + 1, pi.value);
        if (r.timed_out)
            throw std::runtime_error("chi_prime_s: time budget exhausted");
        if (r.best <= pi.value) {
            EdgeColoring w = witness_to_coloring(*r.witness, k);
            w = strip_unused_colors(w);
            out.k = w.k;
            out.witness = w;
            return out;
        }
    }
    throw std::logic_error("chi_prime_s: no universe attained the palette index");
}

PaletteIndexResult palette_index_union(const std::vector<Multigraph>& parts,
                                       const SearchConfig& cfg) {
    if (parts.empty())
        throw std::invalid_argument("palette_index_union: needs at least one part");
    if (parts.size() == 1) return palette_index(parts[0], cfg);

    UnionLayout layout = disjoint_union(parts);

    // Degree classes per part, and how they overlap.
    std::vector<std::set<int>> classes(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (VertexId v = 0; v < parts[i].vertex_count(); ++v)
            classes[i].insert(parts[i].degree(v));
    std::set<int> shared_degrees;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int d : classes[i])
                if (classes[j].count(d)) shared_degrees.insert(d);

    bool decomposable = shared_degrees.size() <= 1;
    int dstar = -1;
    if (shared_degrees.size() == 1) {
        dstar = *shared_degrees.begin();
        for (std::size_t i = 0; i < parts.size() && decomposable; ++i) {
            if (!classes[i].count(dstar)) continue;
            int count = 0;
            for (VertexId v = 0; v < parts[i].vertex_count(); ++v)
                if (parts[i].degree(v) == dstar) ++count;
            if (count != 1) decomposable = false;
        }
    }

    if (!decomposable) {
        PaletteIndexResult direct = palette_index(layout.graph, cfg);
        direct.method = SearchMethod::direct;
        return direct;
    }

    std::vector<PaletteIndexResult> sub;
    sub.reserve(parts.size());
    for (const auto& p : parts) sub.push_back(palette_index(p, cfg));

    PaletteIndexResult out;
    out.method = SearchMethod::decomposition;
    out.lower_bound = degree_diversity_lower_bound(layout.graph);
    out.exact = true;
    long long total = 0;
    int sharing = 0;
    int kmax = 0;
    out.explored_k_min = INT_MAX;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.exact = out.exact && sub[i].exact;
        out.nodes += sub[i].nodes;
        out.wall_ms += sub[i].wall_ms;
        out.explored_k_min = std::min(out.explored_k_min, sub[i].explored_k_min);
        out.explored_k_max = std::max(out.explored_k_max, sub[i].explored_k_max);
        total += sub[i].value;
        if (dstar >= 0 && classes[i].count(dstar)) ++sharing;
        kmax = std::max(kmax, sub[i].colors_used);
    }
    if (sharing > 0) total -= sharing - 1;
    out.value = static_cast<int>(total);
    if (!out.exact) return out;

    // Stitch the witnesses together; parts sharing the degree class d* get
    // their unique degree-d* palette relabeled onto {0..d*-1} so those
    // palettes coincide and nothing else can.
    kmax = std::max(kmax, dstar);
    std::vector<int> assignment(layout.graph.edge_count(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        EdgeColoring w = *sub[i].witness;
        if (dstar >= 0 && classes[i].count(dstar)) {
            VertexId hubv = 0;
            while (parts[i].degree(hubv) != dstar) ++hubv;
            Palette central = palette_of(parts[i], w, hubv);
            std::vector<int> perm(w.k, -1);
            int next = 0;
            for (int c : central) perm[c] = next++;
            for (int c = 0; c < w.k; ++c)
                if (perm[c] < 0) perm[c] = next++;
            if (w.k > 0) w = relabel_colors(w, perm);
        }
        int base = layout.edge_offset[i];
        for (EdgeId e = 0; e < parts[i].edge_count(); ++e)
            assignment[base + e] = w.assignment.empty() ? -1 : w.assignment[e];
        kmax = std::max(kmax, w.k);
    }
    bool all_edges_colored = true;
    for (int a : assignment)
        if (a < 0) all_edges_colored = false;
    if (all_edges_colored) {
        EdgeColoring stitched;
        stitched.k = kmax;
        stitched.assignment = assignment;
        stitched = strip_unused_colors(stitched);
        int got = static_cast<int>(
            distinct_palettes(layout.graph, stitched).size());
        if (got != out.value)
            throw std::logic_error(
                "palette_index_union: stitched witness disagrees with the formula");
        out.witness = stitched;
        out.colors_used = stitched.k;
    }
    return out;
}

}  // namespace palettelab
