#include "palettelab/interval.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace palettelab {

namespace {

using Clock = std::chrono::steady_clock;

// Sorted incident colors per vertex; input must already be proper, so no
// duplicates can appear.
std::vector<std::vector<int>> incident_colors(const Multigraph& g,
                                              const EdgeColoring& c) {
    std::vector<std::vector<int>> at(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        at[u].push_back(c.assignment[e]);
        at[v].push_back(c.assignment[e]);
    }
    for (auto& colors : at) std::sort(colors.begin(), colors.end());
    return at;
}

IntervalReport interval_report(const Multigraph& g, const EdgeColoring& raw,
                               const char* op) {
    if (!is_proper(g, raw))
        throw std::invalid_argument(std::string(op) + ": coloring is not proper");
    EdgeColoring c = strip_unused_colors(raw);
    IntervalReport report;
    report.t = c.k;
    report.is_interval = true;
    report.is_cyclic_interval = true;
    auto at = incident_colors(g, c);
    std::optional<VertexId> first_interval_violation;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& colors = at[v];
        if (colors.empty()) continue;
        bool interval =
            colors.back() - colors.front() + 1 == static_cast<int>(colors.size());
        if (!interval && !first_interval_violation) first_interval_violation = v;
        report.is_interval = report.is_interval && interval;
        if (interval) continue;
        // Gaps read around the cycle 0..t-1; one gap still leaves a cyclic
        // run, two or more do not.
        int gaps = 0;
        for (std::size_t i = 0; i + 1 < colors.size(); ++i)
            if (colors[i + 1] - colors[i] > 1) ++gaps;
        if (colors.front() + c.k - colors.back() > 1) ++gaps;
        if (gaps > 1) {
            report.is_cyclic_interval = false;
            if (!report.offending_vertex) report.offending_vertex = v;
        }
    }
    if (report.is_cyclic_interval && !report.is_interval)
        report.offending_vertex = first_interval_violation;
    return report;
}

// Backtracking search for one interval t-coloring. Returns true when found
// (witness filled), false when the space is exhausted; flips *timed_out
// instead of finishing if the deadline passes.
class IntervalSearcher {
public:
    IntervalSearcher(const Multigraph& g, int t,
                     std::optional<Clock::time_point> deadline)
        : g_(g), t_(t), deadline_(deadline) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        deg_.resize(n_);
        for (VertexId v = 0; v < n_; ++v) deg_[v] = g.degree(v);
        used_.assign(static_cast<std::size_t>(n_) * t_, 0);
        cmin_.assign(n_, INT_MAX);
        cmax_.assign(n_, -1);
        left_ = deg_;
        ccount_.assign(t_, 0);
        unused_colors_ = t_;
        assign_.assign(m_, -1);
        order_.resize(m_);
        for (EdgeId e = 0; e < m_; ++e) order_[e] = e;
        std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            auto [ax, ay] = g_.endpoints(a);
            auto [bx, by] = g_.endpoints(b);
            int sa = deg_[ax] + deg_[ay];
            int sb = deg_[bx] + deg_[by];
            if (sa != sb) return sa > sb;
            return a < b;
        });
    }

    bool run(std::vector<int>& witness, bool* timed_out) {
        timed_out_ = timed_out;
        if (search(0)) {
            witness = found_;
            return true;
        }
        return false;
    }

private:
    bool fits(VertexId v, int c) const {
        if (used_[static_cast<std::size_t>(v) * t_ + c]) return false;
        int lo = std::min(cmin_[v], c);
        int hi = std::max(cmax_[v], c);
        return hi - lo + 1 <= deg_[v];
    }

    bool complete_ok(VertexId v) const {
        if (left_[v] > 0) return true;
        if (deg_[v] == 0) return true;
        return cmax_[v] - cmin_[v] + 1 == deg_[v];
    }

    bool search(std::size_t pos) {
        if ((++nodes_ & 1023) == 0 && deadline_ && Clock::now() > *deadline_) {
            *timed_out_ = true;
            return false;
        }
        if (pos == order_.size()) {
            if (unused_colors_ != 0) return false;
            found_ = assign_;  // unwinding resets assign_, so snapshot here
            return true;
        }
        if (unused_colors_ > static_cast<int>(order_.size() - pos)) return false;

        EdgeId e = order_[pos];
        auto [x, y] = g_.endpoints(e);
        // Mirror symmetry c <-> t-1-c: pin the first branched edge to the
        // lower half.
        int limit = (pos == 0) ? (t_ - 1) / 2 : t_ - 1;
        for (int c = 0; c <= limit; ++c) {
            if (!fits(x, c) || !fits(y, c)) continue;
            int sx_min = cmin_[x], sx_max = cmax_[x];
            int sy_min = cmin_[y], sy_max = cmax_[y];
            used_[static_cast<std::size_t>(x) * t_ + c] = 1;
            used_[static_cast<std::size_t>(y) * t_ + c] = 1;
            cmin_[x] = std::min(cmin_[x], c);
            cmax_[x] = std::max(cmax_[x], c);
            cmin_[y] = std::min(cmin_[y], c);
            cmax_[y] = std::max(cmax_[y], c);
            --left_[x];
            --left_[y];
            if (++ccount_[c] == 1) --unused_colors_;
            assign_[e] = c;

            bool ok = complete_ok(x) && complete_ok(y) && search(pos + 1);

            assign_[e] = -1;
            if (--ccount_[c] == 0) ++unused_colors_;
            ++left_[x];
            ++left_[y];
            cmin_[x] = sx_min;
            cmax_[x] = sx_max;
            cmin_[y] = sy_min;
            cmax_[y] = sy_max;
            used_[static_cast<std::size_t>(x) * t_ + c] = 0;
            used_[static_cast<std::size_t>(y) * t_ + c] = 0;
            if (ok) return true;
            if (timed_out_ && *timed_out_) return false;
        }
        return false;
    }

    const Multigraph& g_;
    int t_;
    std::optional<Clock::time_point> deadline_;
    int n_ = 0, m_ = 0;
    std::vector<int> deg_;
    std::vector<EdgeId> order_;
    std::vector<std::uint8_t> used_;
    std::vector<int> cmin_, cmax_, left_, ccount_;
    std::vector<int> assign_;
    std::vector<int> found_;
    int unused_colors_ = 0;
    std::uint64_t nodes_ = 0;
    bool* timed_out_ = nullptr;
};

}  // namespace

IntervalReport is_interval_coloring(const Multigraph& g, const EdgeColoring& c) {
    return interval_report(g, c, "is_interval_coloring");
}

IntervalReport is_cyclic_interval_coloring(const Multigraph& g,
                                           const EdgeColoring& c) {
    return interval_report(g, c, "is_cyclic_interval_coloring");
}

IntervalSearchResult find_interval_coloring(const Multigraph& g,
                                            const SearchConfig& cfg) {
    IntervalSearchResult out;
    if (g.edge_count() == 0) {
        out.status = IntervalSearchStatus::found;
        out.witness = EdgeColoring{0, {}};
        return out;
    }
    std::optional<Clock::time_point> deadline;
    if (cfg.time_budget_ms)
        deadline = Clock::now() + std::chrono::milliseconds(*cfg.time_budget_ms);
    int t_low = g.max_degree();
    int t_high = g.edge_count();
    if (cfg.max_colors) t_high = std::min(t_high, *cfg.max_colors);
    for (int t = t_low; t <= t_high; ++t) {
        out.max_colors_tried = t;
        bool timed_out = false;
        IntervalSearcher searcher(g, t, deadline);
        std::vector<int> witness;
        if (searcher.run(witness, &timed_out)) {
            out.status = IntervalSearchStatus::found;
            out.witness = EdgeColoring{t, witness};
            out.colors = t;
            return out;
        }
        if (timed_out) {
            out.status = IntervalSearchStatus::unknown;
            return out;
        }
    }
    out.status = (cfg.max_colors && t_high < g.edge_count())
                     ? IntervalSearchStatus::unknown
                     : IntervalSearchStatus::none;
    return out;
}

long long interval_palette_bound(int delta) {
    if (delta < 0)
        throw std::invalid_argument("interval_palette_bound: delta must be nonnegative");
    long long d = delta;
    return d * d - d + 1;
}

IntervalBoundReport check_interval_bound(const Multigraph& g, const SearchConfig& cfg) {
    IntervalBoundReport report;
    report.bound = interval_palette_bound(g.max_degree());
    IntervalSearchResult found = find_interval_coloring(g, cfg);
    report.status = found.status;
    if (found.status != IntervalSearchStatus::found) {
        report.exact = found.status == IntervalSearchStatus::none;
        return report;
    }
    report.applicable = true;
    PaletteIndexResult pi = palette_index(g, cfg);
    report.palette_index = pi.value;
    report.exact = pi.exact;
    report.holds = pi.value >= 0 && pi.value <= report.bound;
    return report;
}

}  // namespace palettelab
