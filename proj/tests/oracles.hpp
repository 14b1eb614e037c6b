#pragma once

// Brute-force reference implementations, deliberately written as plain
// exhaustive sweeps with none of the library's pruning, canonicalization,
// or closed forms. Everything here stays independent of the code paths it
// is used to check.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace oracles {

using PartitionSet = std::set<std::vector<std::vector<int>>>;  // normalized partitions

// Smallest k for which some assignment V -> [k] is proper (tries k = 1, 2, ...).
int brute_chromatic_number(const chroma::Graph& g);

// Number of proper assignments V -> [k], counted by direct recursion.
std::uint64_t brute_count_proper(const chroma::Graph& g, int k);

struct BruteZeta {
    int chi = 0;
    int zeta = 0;
    PartitionSet lucky_partitions;
};

// Scans every surjective proper assignment with exactly chi colours and
// counts addable cross edges directly.
BruteZeta brute_zeta(const chroma::Graph& g);

// Largest k <= min_degree+1 admitting a proper assignment whose every
// closed neighbourhood carries all k colours; nullopt when none exists.
std::optional<int> brute_j_number(const chroma::Graph& g);

struct BruteZetaJ {
    int j = 0;
    int zeta_j = 0;
    PartitionSet optimal_partitions;
};

std::optional<BruteZetaJ> brute_zeta_j(const chroma::Graph& g);

// Maximum of sum-of-pairwise-products over partitions of n into p positive
// parts, plus the set of maximising partitions (parts sorted descending).
struct BruteSumProduct {
    int best = -1;
    std::set<std::vector<int>> argmax;
};

BruteSumProduct brute_sum_product(int n, int p);

// Independent graph6 decoder (separate bit handling from the library's).
chroma::Graph reference_decode_graph6(const std::string& text);

// Normalizes an assignment into a partition value for set comparisons.
std::vector<std::vector<int>> normalized_partition(const std::vector<int>& assignment, int k);

}  // namespace oracles
