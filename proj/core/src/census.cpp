#include "chroma/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "chroma/graph_io.hpp"
#include "chroma/jcoloring.hpp"
#include "chroma/stability.hpp"

namespace chroma {

std::array<std::pair<const char*, bool>, CensusFlags::kCount> CensusFlags::items() const {
    return {{{"complement_bound", complement_bound},
             {"completion_stays_incomplete", completion_stays_incomplete},
             {"stable_iff_witness_unique", stable_iff_witness_unique},
             {"stable_iff_rainbow_adjacent", stable_iff_rainbow_adjacent},
             {"stable_iff_rainbow_count_full", stable_iff_rainbow_count_full},
             {"bipartite_stable", bipartite_stable},
             {"pendant_not_stable", pendant_not_stable},
             {"completion_chain", completion_chain},
             {"stable_implies_j_colorable", stable_implies_j_colorable},
             {"uniqueness_chain", uniqueness_chain}}};
}

bool CensusFlags::all_ok() const {
    for (auto [name, ok] : items())
        if (!ok) return false;
    return true;
}

CensusRecord census_record_of(const Graph& g, bool* rainbow_reading_divergent) {
    CensusRecord rec;
    rec.graph6 = to_graph6(g);
    const bool connected = g.is_connected();
    const bool complete = g.is_complete();

    rec.chi = chromatic_number(g);

    // One pass over the canonical chromatic colourings gathers ζ, the
    // optimal partitions, and whether all chromatic partitions coincide.
    int best = -1;
    bool have_any = false;
    bool all_chromatic_same = true;
    VertexPartition first_partition;
    std::vector<VertexPartition> lucky;
    for_each_coloring_with(g, rec.chi, [&](const Coloring& c) {
        VertexPartition part = partition_of(c);
        if (!have_any) {
            first_partition = part;
            have_any = true;
        } else {
            all_chromatic_same = all_chromatic_same && part == first_partition;
        }
        int count = pseudo_completion_size(c.theta) - g.size();
        if (count > best) {
            best = count;
            lucky.clear();
        }
        if (count == best) lucky.push_back(std::move(part));
        return true;
    });
    std::sort(lucky.begin(), lucky.end());
    rec.zeta = best;

    std::vector<std::vector<Edge>> witnesses;
    witnesses.reserve(lucky.size());
    for (const auto& p : lucky) witnesses.push_back(completion_edges(g, p.to_coloring()));

    const bool definitional = lucky.size() == 1;
    bool witness_unique = true;
    for (const auto& w : witnesses) witness_unique = witness_unique && w == witnesses.front();
    bool rainbow_all = true, rainbow_any = false, rainbow_count_all = true;
    for (const auto& p : lucky) {
        Coloring c = p.to_coloring();
        bool rainbow = rainbow_condition_holds(g, c);
        rainbow_all = rainbow_all && rainbow;
        rainbow_any = rainbow_any || rainbow;
        rainbow_count_all = rainbow_count_all && rainbow_neighbourhood_number(g, c) == g.order();
    }
    if (rainbow_reading_divergent)
        *rainbow_reading_divergent = connected && rec.zeta > 0 && rainbow_any != rainbow_all;
    rec.scc = rec.zeta == 0 || definitional;

    auto j = j_optimal_set(g, g.order());
    rec.j_exists = j.has_value();
    if (j) {
        rec.j_number = j->j_number;
        rec.zeta_j = j->zeta_j;
    }

    CensusFlags& f = rec.flags;
    const int non_edges = static_cast<int>(pair_count(g.order())) - g.size();
    f.complement_bound = rec.zeta <= non_edges && ((rec.zeta == non_edges) == complete);

    f.completion_stays_incomplete = true;
    for (const auto& w : witnesses) {
        Graph completed = g;
        for (auto [u, v] : w) completed.add_edge(u, v);
        f.completion_stays_incomplete =
            f.completion_stays_incomplete && completed.is_complete() == complete;
    }

    if (rec.zeta > 0) f.stable_iff_witness_unique = definitional == witness_unique;
    if (connected && rec.zeta > 0) {
        f.stable_iff_rainbow_adjacent = definitional == rainbow_all;
        f.stable_iff_rainbow_count_full = definitional == rainbow_count_all;
        if (rec.chi <= 2) f.bipartite_stable = definitional;
        f.stable_implies_j_colorable = !definitional || rec.j_exists;
    }
    if (connected && rec.chi >= 3 && g.has_pendant_vertex()) f.pendant_not_stable = !definitional;
    if (connected && rec.j_exists) f.completion_chain = rec.zeta <= *rec.zeta_j;
    if (connected) {
        const bool unique_chromatic = all_chromatic_same;
        const bool unique_lucky = definitional;
        const bool unique_j = !rec.j_exists || j->partitions.size() == 1;
        f.uniqueness_chain =
            (!unique_chromatic || unique_lucky) && (!unique_lucky || unique_j);
    }
    return rec;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool sampled(std::uint64_t mask, const CensusOptions& options) {
    if (options.sample_fraction >= 1.0) return true;
    if (options.sample_fraction <= 0.0) return false;
    const long double scale = 18446744073709551616.0L;  // 2^64
    auto threshold =
        static_cast<std::uint64_t>(static_cast<long double>(options.sample_fraction) * scale);
    return splitmix64(options.seed ^ (mask * 0x9e3779b97f4a7c15ULL)) < threshold;
}

void tally(CensusSummary& summary, const CensusRecord& rec, int witnesses_per_flag) {
    ++summary.graphs;
    if (rec.scc) ++summary.scc_count;
    if (rec.j_exists) ++summary.j_colorable_count;
    auto items = rec.flags.items();
    for (int i = 0; i < CensusFlags::kCount; ++i) {
        if (items[i].second) continue;
        auto& t = summary.flag_tallies[i];
        ++t.failures;
        ++summary.total_failures;
        if (static_cast<int>(t.witnesses.size()) < witnesses_per_flag)
            t.witnesses.push_back(rec.graph6);
    }
}

}  // namespace

CensusSummary run_census(const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& emit) {
    if (options.order < 1) throw std::invalid_argument("census order must be >= 1");
    if (options.order > options.order_cap)
        throw CapExceeded("census capped at order " + std::to_string(options.order_cap) +
                          "; asked for " + std::to_string(options.order));

    CensusSummary summary;
    summary.order = options.order;
    summary.connected_only = options.connected_only;
    summary.sample_fraction = options.sample_fraction;
    summary.seed = options.seed;
    for (auto [name, ok] : CensusFlags{}.items()) summary.flag_tallies.push_back({name, 0, {}});

    const std::uint64_t masks = std::uint64_t{1} << pair_count(options.order);
    const int threads = std::max(1, options.threads);

    if (threads == 1) {
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (!sampled(mask, options)) continue;
            Graph g = graph_from_edge_mask(options.order, mask);
            if (options.connected_only && !g.is_connected()) continue;
            bool divergent = false;
            CensusRecord rec = census_record_of(g, &divergent);
            if (divergent) ++summary.rainbow_reading_divergences;
            tally(summary, rec, options.witnesses_per_flag);
            if (emit) emit(rec);
        }
        return summary;
    }

    // Bounded blocks keep memory flat; records are re-ordered by mask
    // inside each block so output is independent of the thread count.
    constexpr std::uint64_t kBlock = 8192;
    for (std::uint64_t block_start = 0; block_start < masks; block_start += kBlock) {
        const std::uint64_t block_end = std::min(masks, block_start + kBlock);
        std::vector<std::vector<std::pair<std::uint64_t, CensusRecord>>> partial(threads);
        std::vector<std::uint64_t> divergences(threads, 0);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t mask = block_start + t; mask < block_end;
                     mask += static_cast<std::uint64_t>(threads)) {
                    if (!sampled(mask, options)) continue;
                    Graph g = graph_from_edge_mask(options.order, mask);
                    if (options.connected_only && !g.is_connected()) continue;
                    bool divergent = false;
                    CensusRecord rec = census_record_of(g, &divergent);
                    partial[t].emplace_back(mask, std::move(rec));
                    if (divergent) divergences[t] += 1;
                }
            });
        }
        for (auto& worker : pool) worker.join();
        for (std::uint64_t d : divergences) summary.rainbow_reading_divergences += d;
        std::vector<std::pair<std::uint64_t, CensusRecord>> block;
        for (auto& part : partial)
            for (auto& entry : part) block.push_back(std::move(entry));
        std::sort(block.begin(), block.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [mask, rec] : block) {
            tally(summary, rec, options.witnesses_per_flag);
            if (emit) emit(rec);
        }
    }
    return summary;
}

std::string census_csv_header() {
    std::string out = "graph6,chi,zeta,scc,j_exists,j_number,zeta_j";
    for (auto [name, ok] : CensusFlags{}.items()) {
        out += ',';
        out += name;
    }
    out += '\n';
    return out;
}

std::string census_csv_row(const CensusRecord& rec) {
    std::ostringstream out;
    out << rec.graph6 << ',' << rec.chi << ',' << rec.zeta << ',' << (rec.scc ? "true" : "false")
        << ',' << (rec.j_exists ? "true" : "false") << ',';
    if (rec.j_number) out << *rec.j_number;
    out << ',';
    if (rec.zeta_j) out << *rec.zeta_j;
    for (auto [name, ok] : rec.flags.items()) out << ',' << (ok ? "true" : "false");
    out << '\n';
    return out.str();
}

}  // namespace chroma
