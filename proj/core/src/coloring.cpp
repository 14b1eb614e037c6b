#include "chroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace chroma {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_assignment(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("colouring covers " + std::to_string(c.assignment.size()) +
                                    " vertices but the graph has " + std::to_string(g.order()));
}

}  // namespace

Coloring Coloring::from_assignment(std::vector<int> assignment) {
    Coloring c;
    c.assignment = std::move(assignment);
    int k = 0;
    for (int colour : c.assignment) {
        if (colour < 0) throw std::invalid_argument("negative colour index");
        k = std::max(k, colour + 1);
    }
    c.colour_count = k;
    c.theta.assign(k, 0);
    for (int colour : c.assignment) ++c.theta[colour];
    for (int i = 0; i < k; ++i)
        if (c.theta[i] == 0)
            throw std::invalid_argument("colour " + std::to_string(i) +
                                        " unused; colours must form 0..k-1");
    return c;
}

VertexPartition VertexPartition::of(const Coloring& c) {
    VertexPartition p;
    p.classes.resize(c.colour_count);
    for (int v = 0; v < static_cast<int>(c.assignment.size()); ++v)
        p.classes[c.assignment[v]].push_back(v);
    // Vertices arrive in increasing order, so classes are already sorted.
    std::sort(p.classes.begin(), p.classes.end());
    return p;
}

Coloring VertexPartition::to_coloring() const {
    int n = 0;
    for (const auto& cls : classes) n += static_cast<int>(cls.size());
    std::vector<int> assignment(n, -1);
    for (int colour = 0; colour < static_cast<int>(classes.size()); ++colour)
        for (int v : classes[colour]) assignment[v] = colour;
    return Coloring::from_assignment(std::move(assignment));
}

std::vector<int> VertexPartition::class_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(classes.size());
    for (const auto& cls : classes) sizes.push_back(static_cast<int>(cls.size()));
    return sizes;
}

VertexPartition partition_of(const Coloring& c) { return VertexPartition::of(c); }

bool is_proper(const Graph& g, const Coloring& c) {
    check_assignment(g, c);
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v]) return false;
    return true;
}

std::vector<Edge> bad_edges(const Graph& g, const Coloring& c) {
    check_assignment(g, c);
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v]) out.emplace_back(u, v);
    return out;
}

namespace {

// Backtracking k-colourability with dynamic most-saturated-first vertex
// selection; introduces at most one unused colour per node, which breaks
// the colour-permutation symmetry.
class Colourability {
public:
    Colourability(const Graph& g, int k) : g_(g), k_(k), assignment_(g.order(), -1) {
        class_masks_.assign(static_cast<std::size_t>(std::max(k, 1)), 0);
    }

    bool solve() { return extend(0, 0); }

private:
    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (assignment_[v] >= 0) continue;
            int sat = 0;
            for (int c = 0; c < k_; ++c)
                if (class_masks_[c] & g_.neighbourhood(v)) ++sat;
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(int coloured, int used) {
        if (coloured == g_.order()) return true;
        int v = pick_vertex();
        int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (class_masks_[c] & g_.neighbourhood(v)) continue;
            assignment_[v] = c;
            class_masks_[c] |= bit(v);
            if (extend(coloured + 1, std::max(used, c + 1))) return true;
            class_masks_[c] &= ~bit(v);
            assignment_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> assignment_;
    std::vector<std::uint64_t> class_masks_;
};

bool colourable_with(const Graph& g, int k) {
    if (g.order() == 0) return true;
    if (k <= 0) return false;
    if (k >= g.order()) return true;
    return Colourability(g, k).solve();
}

int greedy_clique_bound(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::uint64_t clique = 0;
    int size = 0;
    for (int v : order) {
        if ((clique & ~g.neighbourhood(v)) == 0) {
            clique |= bit(v);
            ++size;
        }
    }
    return size;
}

int dsatur_bound(const Graph& g) {
    const int n = g.order();
    std::vector<int> assignment(n, -1);
    std::vector<std::uint64_t> class_masks;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (assignment[v] >= 0) continue;
            int sat = 0;
            for (const auto& mask : class_masks)
                if (mask & g.neighbourhood(v)) ++sat;
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (c < static_cast<int>(class_masks.size()) &&
               (class_masks[c] & g.neighbourhood(best)))
            ++c;
        if (c == static_cast<int>(class_masks.size())) class_masks.push_back(0);
        class_masks[c] |= bit(best);
        assignment[best] = c;
    }
    return static_cast<int>(class_masks.size());
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.is_edgeless()) return 1;
    int lower = std::max(2, greedy_clique_bound(g));
    int upper = dsatur_bound(g);
    for (int k = lower; k < upper; ++k)
        if (colourable_with(g, k)) return k;
    return upper;
}

namespace {

class CanonicalEnumerator {
public:
    CanonicalEnumerator(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit)
        : g_(g), k_(k), visit_(visit), assignment_(g.order(), -1), class_masks_(k, 0) {}

    bool run() {
        if (k_ < 0) return true;
        if (g_.order() == 0) return k_ == 0 ? visit_(Coloring{}) : true;
        if (k_ == 0) return true;
        return extend(0, 0);
    }

private:
    bool extend(int v, int used) {
        if (used + (g_.order() - v) < k_) return true;  // cannot reach k colours
        if (v == g_.order()) {
            Coloring c;
            c.assignment = assignment_;
            c.colour_count = k_;
            c.theta.assign(k_, 0);
            for (int colour : assignment_) ++c.theta[colour];
            return visit_(c);
        }
        int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (class_masks_[c] & g_.neighbourhood(v)) continue;
            assignment_[v] = c;
            class_masks_[c] |= bit(v);
            bool keep_going = extend(v + 1, std::max(used, c + 1));
            class_masks_[c] &= ~bit(v);
            assignment_[v] = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    const std::function<bool(const Coloring&)>& visit_;
    std::vector<int> assignment_;
    std::vector<std::uint64_t> class_masks_;
};

}  // namespace

bool for_each_coloring_with(const Graph& g, int colours,
                            const std::function<bool(const Coloring&)>& visit) {
    return CanonicalEnumerator(g, colours, visit).run();
}

void for_each_chromatic_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                                 int order_cap) {
    if (g.order() > order_cap)
        throw CapExceeded("exact colouring enumeration capped at order " +
                          std::to_string(order_cap) + "; use near_lucky_coloring for order " +
                          std::to_string(g.order()));
    for_each_coloring_with(g, chromatic_number(g), visit);
}

std::vector<Coloring> chromatic_colorings(const Graph& g, int order_cap) {
    std::vector<Coloring> out;
    for_each_chromatic_coloring(
        g,
        [&](const Coloring& c) {
            out.push_back(c);
            return true;
        },
        order_cap);
    return out;
}

std::uint64_t count_proper_colorings(const Graph& g, int colours, int order_cap) {
    if (g.order() > order_cap)
        throw CapExceeded("chromatic polynomial evaluation capped at order " +
                          std::to_string(order_cap));
    if (colours < 0) throw std::invalid_argument("colour count must be >= 0");
    const int n = g.order();
    if (n == 0) return 1;

    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // independent[s]: the vertex subset s spans no edge
    std::vector<bool> independent(full + 1);
    independent[0] = true;
    for (std::uint64_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        std::uint64_t rest = s & (s - 1);
        independent[s] = independent[rest] && (g.neighbourhood(low) & s) == 0;
    }

    // ways[s][j]: partitions of subset s into j independent classes, the
    // class of the lowest vertex of s chosen canonically first.
    std::vector<std::vector<std::uint64_t>> ways(full + 1, std::vector<std::uint64_t>(n + 1, 0));
    ways[0][0] = 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        std::uint64_t others = s & ~bit(low);
        // All subsets t of s that contain `low`.
        for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
            std::uint64_t cls = sub | bit(low);
            if (independent[cls]) {
                std::uint64_t rest = s & ~cls;
                for (int j = 1; j <= n; ++j)
                    if (ways[rest][j - 1]) ways[s][j] += ways[rest][j - 1];
            }
            if (sub == 0) break;
        }
    }

    constexpr auto kLimit = std::numeric_limits<std::uint64_t>::max();
    auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t out;
        if (__builtin_mul_overflow(a, b, &out))
            throw std::overflow_error("proper colouring count exceeds 64 bits");
        return out;
    };
    std::uint64_t total = 0;
    for (int j = 1; j <= n; ++j) {
        if (!ways[full][j] || j > colours) continue;
        std::uint64_t falling = 1;
        for (int i = 0; i < j; ++i)
            falling = checked_mul(falling, static_cast<std::uint64_t>(colours - i));
        std::uint64_t term = checked_mul(falling, ways[full][j]);
        if (total > kLimit - term)
            throw std::overflow_error("proper colouring count exceeds 64 bits");
        total += term;
    }
    return total;
}

}  // namespace chroma
