#include "chroma/completion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace chroma {

int pseudo_completion_size(const std::vector<int>& theta) {
    long long sum = 0, sum_sq = 0;
    for (int t : theta) {
        if (t < 1) throw std::invalid_argument("class sizes must be >= 1");
        sum += t;
        sum_sq += static_cast<long long>(t) * t;
    }
    return static_cast<int>((sum * sum - sum_sq) / 2);
}

std::vector<Edge> completion_edges(const Graph& g, const Coloring& c) {
    auto bad = bad_edges(g, c);
    if (!bad.empty())
        throw std::invalid_argument("colouring is not proper: edge (" +
                                    std::to_string(bad.front().first) + "," +
                                    std::to_string(bad.front().second) +
                                    ") joins two vertices of colour " +
                                    std::to_string(c.assignment[bad.front().first]));
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && c.assignment[u] != c.assignment[v]) out.emplace_back(u, v);
    return out;
}

CompletionResult zeta(const Graph& g, int order_cap) {
    CompletionResult result;
    result.chi = chromatic_number(g);
    result.epsilon = g.size();
    if (g.order() == 0) {
        result.lucky_partitions.push_back(VertexPartition{});
        result.witness_edge_sets.emplace_back();
        return result;
    }

    int best = -1;
    std::vector<VertexPartition> partitions;
    for_each_chromatic_coloring(
        g,
        [&](const Coloring& c) {
            int count = pseudo_completion_size(c.theta) - g.size();
            if (count > best) {
                best = count;
                partitions.clear();
            }
            if (count == best) partitions.push_back(partition_of(c));
            return true;
        },
        order_cap);

    result.zeta = best;
    std::sort(partitions.begin(), partitions.end());
    result.lucky_partitions = std::move(partitions);
    for (const auto& p : result.lucky_partitions)
        result.witness_edge_sets.push_back(completion_edges(g, p.to_coloring()));
    return result;
}

std::vector<int> balanced_parts(int n, int parts) {
    if (parts < 1 || parts > n)
        throw std::invalid_argument("need 1 <= parts <= n, got parts=" + std::to_string(parts) +
                                    " n=" + std::to_string(n));
    std::vector<int> out(parts, n / parts);
    for (int i = 0; i < n % parts; ++i) ++out[i];
    return out;
}

int lucky_sum_product(int n, int parts) { return pseudo_completion_size(balanced_parts(n, parts)); }

namespace {

int best_partition_value(int remaining, int parts, int max_part, long long sum_so_far,
                         long long sum_sq_so_far) {
    if (parts == 1) {
        if (remaining > max_part) return -1;
        long long sum = sum_so_far + remaining;
        long long sum_sq = sum_sq_so_far + static_cast<long long>(remaining) * remaining;
        return static_cast<int>((sum * sum - sum_sq) / 2);
    }
    int best = -1;
    // Non-increasing parts, each at least 1 and leaving enough for the rest.
    for (int part = std::min(max_part, remaining - (parts - 1)); part >= 1; --part) {
        if (static_cast<long long>(part) * parts < remaining) break;
        best = std::max(best,
                        best_partition_value(remaining - part, parts - 1, part, sum_so_far + part,
                                             sum_sq_so_far + static_cast<long long>(part) * part));
    }
    return best;
}

}  // namespace

int lucky_sum_product_bruteforce(int n, int parts) {
    if (parts < 1 || parts > n)
        throw std::invalid_argument("need 1 <= parts <= n, got parts=" + std::to_string(parts) +
                                    " n=" + std::to_string(n));
    return best_partition_value(n, parts, n, 0, 0);
}

NearLuckyResult near_lucky_coloring(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {Coloring{}, 0};

    std::vector<int> processing(n);
    std::iota(processing.begin(), processing.end(), 0);
    std::stable_sort(processing.begin(), processing.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    int palette = chromatic_number(g);
    std::vector<int> assignment(n, -1);
    std::vector<std::uint64_t> class_masks(palette, 0);
    std::vector<int> theta(palette, 0);

    auto take = [&](int v, int c) {
        assignment[v] = c;
        class_masks[c] |= std::uint64_t{1} << v;
        ++theta[c];
    };

    for (int i = 0; i < n; ++i) {
        int v = processing[i];
        int preferred = i % palette;
        if ((class_masks[preferred] & g.neighbourhood(v)) == 0) {
            take(v, preferred);
            continue;
        }
        int chosen = -1;
        for (int c = 0; c < palette; ++c) {
            if (class_masks[c] & g.neighbourhood(v)) continue;
            if (chosen < 0 || theta[c] < theta[chosen]) chosen = c;
        }
        if (chosen >= 0) {
            take(v, chosen);
        } else {
            class_masks.push_back(0);
            theta.push_back(0);
            take(v, palette++);
        }
    }

    NearLuckyResult result;
    result.coloring = Coloring::from_assignment(std::move(assignment));
    result.completion_count = pseudo_completion_size(result.coloring.theta) - g.size();
    return result;
}

BoundReport zeta_upper_bounds(const Graph& g) {
    BoundReport report;
    report.complement_bound = static_cast<int>(pair_count(g.order())) - g.size();
    if (g.order() > 0) {
        report.lucky_bound = lucky_sum_product(g.order(), chromatic_number(g)) - g.size();
        report.near_lucky_bound = near_lucky_coloring(g).completion_count;
    }
    return report;
}

}  // namespace chroma
