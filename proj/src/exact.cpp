#include "bondage/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "bondage/error.hpp"

namespace bondage {

std::string to_string(Objective k) {
    switch (k) {
        case Objective::Gamma: return "gamma";
        case Objective::Tau: return "tau";
        case Objective::Alpha: return "alpha";
    }
    return "?";
}

Objective parse_objective(const std::string& s) {
    if (s == "gamma") return Objective::Gamma;
    if (s == "tau") return Objective::Tau;
    if (s == "alpha") return Objective::Alpha;
    throw InputError("unknown objective '" + s + "' (expected gamma, tau or alpha)");
}

DominationQuery DominationQuery::plain(const Graph& g) {
    return {VertexSet::full(g.n()), VertexSet::full(g.n()), VertexSet(g.n())};
}

namespace {

constexpr int kInfeasible = 1 << 29;

// ---------------------------------------------------------------------------
// Dominating set branch and bound.
//
// Branch on the lowest-index undominated vertex u, trying the members of
// N[u] in ascending order; the i-th branch forbids the first i-1 members so
// every set is reached along exactly one path.
class DominationSearch {
public:
    DominationSearch(const Graph& g, const VertexSet& allowed) : g_(g), allowed_(allowed) {
        closed_.reserve(g.n());
        for (VertexId v = 0; v < g.n(); ++v) closed_.push_back(g.closed_neighborhood(v));
        max_cover_ = g.max_degree() + 1;
    }

    // Minimum over sets containing `start` (already chosen) that dominate
    // `must`. `limit` is an exclusive upper bound on the total size.
    std::optional<std::vector<VertexId>> minimize(const std::vector<VertexId>& start,
                                                  const VertexSet& must, int limit) {
        best_size_ = limit;
        best_.clear();
        found_ = false;
        stop_at_ = -1;
        run(start, must);
        if (!found_) return std::nullopt;
        return best_;
    }

    // First set (DFS order) of size <= bound.
    std::optional<std::vector<VertexId>> first_within(const std::vector<VertexId>& start,
                                                      const VertexSet& must, int bound) {
        best_size_ = bound + 1;
        best_.clear();
        found_ = false;
        stop_at_ = bound;
        run(start, must);
        if (!found_) return std::nullopt;
        return best_;
    }

    // Every set of size exactly k (all are minimal when k is the optimum).
    void enumerate(const std::vector<VertexId>& start, const VertexSet& must, int k, std::size_t cap,
                   std::vector<std::vector<VertexId>>& out, bool& truncated) {
        enum_k_ = k;
        enum_cap_ = cap;
        enum_out_ = &out;
        truncated_ = &truncated;
        VertexSet dominated(g_.n());
        for (VertexId v : start) dominated |= closed_[v];
        std::vector<VertexId> chosen = start;
        enum_dfs(chosen, must - dominated, VertexSet(g_.n()));
        enum_out_ = nullptr;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void run(const std::vector<VertexId>& start, const VertexSet& must) {
        VertexSet dominated(g_.n());
        for (VertexId v : start) dominated |= closed_[v];
        std::vector<VertexId> chosen = start;
        dfs(chosen, must - dominated, VertexSet(g_.n()));
    }

    int lower_bound(const VertexSet& undominated, const VertexSet& excluded) const {
        int count = undominated.count();
        if (count == 0) return 0;
        VertexSet used(g_.n());
        int packing = 0;
        for (VertexId x = undominated.first(); x >= 0; x = undominated.next(x)) {
            VertexSet cand = (closed_[x] & allowed_) - excluded;
            if (cand.empty()) return kInfeasible;
            if (!cand.intersects(used)) {
                ++packing;
                used |= cand;
            }
        }
        return std::max(packing, (count + max_cover_ - 1) / max_cover_);
    }

    bool done() const { return stop_at_ >= 0 && found_; }

    void dfs(std::vector<VertexId>& chosen, const VertexSet& undominated, VertexSet excluded) {
        ++nodes_;
        int size = static_cast<int>(chosen.size());
        if (undominated.empty()) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
                found_ = true;
            }
            return;
        }
        int lb = lower_bound(undominated, excluded);
        if (lb >= kInfeasible || size + lb >= best_size_) return;
        VertexId u = undominated.first();
        VertexSet cand = (closed_[u] & allowed_) - excluded;
        for (VertexId w = cand.first(); w >= 0; w = cand.next(w)) {
            chosen.push_back(w);
            dfs(chosen, undominated - closed_[w], excluded);
            chosen.pop_back();
            if (done()) return;
            excluded.insert(w);
            if (size + 1 >= best_size_) return;
        }
    }

    void enum_dfs(std::vector<VertexId>& chosen, const VertexSet& undominated, VertexSet excluded) {
        ++nodes_;
        if (*truncated_) return;
        int size = static_cast<int>(chosen.size());
        if (undominated.empty()) {
            if (size == enum_k_) {
                if (enum_out_->size() >= enum_cap_) {
                    *truncated_ = true;
                    return;
                }
                auto s = chosen;
                std::sort(s.begin(), s.end());
                enum_out_->push_back(std::move(s));
            }
            return;
        }
        int lb = lower_bound(undominated, excluded);
        if (lb >= kInfeasible || size + lb > enum_k_) return;
        VertexId u = undominated.first();
        VertexSet cand = (closed_[u] & allowed_) - excluded;
        for (VertexId w = cand.first(); w >= 0; w = cand.next(w)) {
            chosen.push_back(w);
            enum_dfs(chosen, undominated - closed_[w], excluded);
            chosen.pop_back();
            excluded.insert(w);
        }
    }

    const Graph& g_;
    VertexSet allowed_;
    std::vector<VertexSet> closed_;
    int max_cover_ = 1;
    int best_size_ = 0;
    std::vector<VertexId> best_;
    bool found_ = false;
    int stop_at_ = -1;
    std::uint64_t nodes_ = 0;

    int enum_k_ = 0;
    std::size_t enum_cap_ = 0;
    std::vector<std::vector<VertexId>>* enum_out_ = nullptr;
    bool* truncated_ = nullptr;
};

std::vector<VertexId> greedy_domination(const Graph& g, const DominationQuery& q) {
    VertexSet undominated = q.must_dominate;
    std::vector<VertexId> chosen = q.forced.members();
    for (VertexId v : chosen) undominated -= g.closed_neighborhood(v);
    while (!undominated.empty()) {
        int best = -1, best_gain = 0;
        for (VertexId w = q.allowed.first(); w >= 0; w = q.allowed.next(w)) {
            int gain = g.closed_neighborhood(w).intersection_count(undominated);
            if (gain > best_gain) {
                best_gain = gain;
                best = w;
            }
        }
        if (best < 0) return {};
        chosen.push_back(best);
        undominated -= g.closed_neighborhood(best);
    }
    return chosen;
}

// ---------------------------------------------------------------------------
// Maximum independent set branch and bound with degree pivoting.
class IndependentSearch {
public:
    explicit IndependentSearch(const Graph& g) : g_(g) {
        for (VertexId v = 0; v < g.n(); ++v) {
            open_.push_back(g.open_neighborhood(v));
            closed_.push_back(g.closed_neighborhood(v));
        }
    }

    std::vector<VertexId> maximize(const VertexSet& region, int floor_size) {
        best_size_ = floor_size;
        best_.clear();
        std::vector<VertexId> current;
        dfs(region, current);
        return best_;
    }

    void enumerate(const VertexSet& region, int k, std::size_t cap,
                   std::vector<std::vector<VertexId>>& out, bool& truncated) {
        std::vector<VertexId> current;
        enum_dfs(region, current, k, cap, out, truncated);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // |R| minus a greedy matching inside R bounds alpha(G[R]).
    int upper_bound(const VertexSet& r) const {
        VertexSet free = r;
        int matched = 0;
        for (VertexId x = free.first(); x >= 0; x = free.next(x)) {
            VertexSet nb = open_[x] & free;
            VertexId y = nb.first();
            if (y >= 0) {
                free.erase(x);
                free.erase(y);
                ++matched;
            }
        }
        return r.count() - matched;
    }

    void dfs(VertexSet r, std::vector<VertexId>& current) {
        ++nodes_;
        std::size_t mark = current.size();
        // Degree 0 and 1 vertices belong to some maximum independent set.
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = r.first(); v >= 0; v = r.next(v)) {
                if (open_[v].intersection_count(r) <= 1) {
                    current.push_back(v);
                    r -= closed_[v];
                    changed = true;
                    break;
                }
            }
        }
        int size = static_cast<int>(current.size());
        if (r.empty()) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            current.resize(mark);
            return;
        }
        if (size + upper_bound(r) <= best_size_) {
            current.resize(mark);
            return;
        }
        VertexId pivot = -1;
        int pivot_deg = -1;
        for (VertexId v = r.first(); v >= 0; v = r.next(v)) {
            int d = open_[v].intersection_count(r);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        current.push_back(pivot);
        dfs(r - closed_[pivot], current);
        current.pop_back();
        VertexSet without = r;
        without.erase(pivot);
        dfs(without, current);
        current.resize(mark);
    }

    void enum_dfs(const VertexSet& r, std::vector<VertexId>& current, int k, std::size_t cap,
                  std::vector<std::vector<VertexId>>& out, bool& truncated) {
        ++nodes_;
        if (truncated) return;
        int size = static_cast<int>(current.size());
        if (r.empty()) {
            if (size == k) {
                if (out.size() >= cap) {
                    truncated = true;
                    return;
                }
                auto s = current;
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            return;
        }
        if (size + upper_bound(r) < k) return;
        VertexId v = r.first();
        current.push_back(v);
        enum_dfs(r - closed_[v], current, k, cap, out, truncated);
        current.pop_back();
        VertexSet without = r;
        without.erase(v);
        enum_dfs(without, current, k, cap, out, truncated);
    }

    const Graph& g_;
    std::vector<VertexSet> open_;
    std::vector<VertexSet> closed_;
    int best_size_ = 0;
    std::vector<VertexId> best_;
    std::uint64_t nodes_ = 0;
};

std::vector<VertexId> complement(int n, const std::vector<VertexId>& s) {
    VertexSet in = VertexSet::of(n, s);
    return (VertexSet::full(n) - in).members();
}

}  // namespace

std::optional<SolveResult> solve_domination(const Graph& g, const DominationQuery& q) {
    SolveResult r;
    r.kind = Objective::Gamma;
    DominationSearch search(g, q.allowed);
    std::vector<VertexId> witness = q.forced.members();
    VertexSet must = q.must_dominate;
    for (VertexId f : witness) must -= g.closed_neighborhood(f);
    // Components are independent subproblems.
    for (const auto& comp : connected_components(g)) {
        VertexSet part = VertexSet::of(g.n(), comp);
        VertexSet sub_must = must & part;
        if (sub_must.empty()) continue;
        DominationQuery sub{sub_must, q.allowed & part, VertexSet(g.n())};
        auto greedy = greedy_domination(g, sub);
        if (greedy.empty()) return std::nullopt;
        auto best = search.minimize({}, sub_must, static_cast<int>(greedy.size()) + 1);
        if (!best) return std::nullopt;
        witness.insert(witness.end(), best->begin(), best->end());
    }
    std::sort(witness.begin(), witness.end());
    r.value = static_cast<int>(witness.size());
    r.witness = std::move(witness);
    r.nodes_explored = search.nodes();
    return r;
}

std::optional<std::vector<VertexId>> find_domination_at_most(const Graph& g, const DominationQuery& q,
                                                             int bound) {
    DominationSearch search(g, q.allowed);
    auto found = search.first_within(q.forced.members(), q.must_dominate, bound);
    if (found) std::sort(found->begin(), found->end());
    return found;
}

SolveResult min_dominating_set(const Graph& g) {
    return *solve_domination(g, DominationQuery::plain(g));
}

SolveResult max_independent_set(const Graph& g) {
    IndependentSearch search(g);
    std::vector<VertexId> witness;
    for (const auto& comp : connected_components(g)) {
        VertexSet region = VertexSet::of(g.n(), comp);
        auto part = search.maximize(region, 0);
        witness.insert(witness.end(), part.begin(), part.end());
    }
    std::sort(witness.begin(), witness.end());
    SolveResult r;
    r.kind = Objective::Alpha;
    r.value = static_cast<int>(witness.size());
    r.witness = std::move(witness);
    r.nodes_explored = search.nodes();
    return r;
}

SolveResult min_vertex_cover(const Graph& g) {
    SolveResult r = max_independent_set(g);
    r.kind = Objective::Tau;
    r.witness = complement(g.n(), r.witness);
    r.value = static_cast<int>(r.witness.size());
    return r;
}

SolveResult solve(const Graph& g, Objective kind) {
    switch (kind) {
        case Objective::Gamma: return min_dominating_set(g);
        case Objective::Tau: return min_vertex_cover(g);
        case Objective::Alpha: return max_independent_set(g);
    }
    return {};
}

int gamma_number(const Graph& g) { return min_dominating_set(g).value; }
int alpha_number(const Graph& g) { return max_independent_set(g).value; }
int tau_number(const Graph& g) { return g.n() - alpha_number(g); }

bool is_dominating(const Graph& g, const std::vector<VertexId>& s) {
    VertexSet dom(g.n());
    for (VertexId v : s) dom |= g.closed_neighborhood(v);
    return dom.count() == g.n();
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& s) {
    VertexSet in = VertexSet::of(g.n(), s);
    for (const auto& e : g.edges())
        if (!in.contains(e.u) && !in.contains(e.v)) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<VertexId>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

OptimalFamily enumerate_optimal(const Graph& g, Objective kind, std::size_t cap) {
    if (cap < 1) throw InputError("enumeration cap must be at least 1");
    OptimalFamily fam;
    fam.kind = kind;
    if (kind == Objective::Gamma) {
        fam.value = gamma_number(g);
        DominationSearch search(g, VertexSet::full(g.n()));
        search.enumerate({}, VertexSet::full(g.n()), fam.value, cap, fam.sets, fam.truncated);
    } else {
        int alpha = alpha_number(g);
        IndependentSearch search(g);
        search.enumerate(VertexSet::full(g.n()), alpha, cap, fam.sets, fam.truncated);
        fam.value = alpha;
        if (kind == Objective::Tau) {
            fam.value = g.n() - alpha;
            for (auto& s : fam.sets) s = complement(g.n(), s);
        }
    }
    std::sort(fam.sets.begin(), fam.sets.end());
    return fam;
}

namespace {

int alpha_of_region(const Graph& g, const VertexSet& region) {
    IndependentSearch search(g);
    int total = 0;
    for (const auto& comp : connected_components(g)) {
        VertexSet part = VertexSet::of(g.n(), comp) & region;
        if (!part.empty()) total += static_cast<int>(search.maximize(part, 0).size());
    }
    return total;
}

bool in_every_alpha_set(const Graph& g, VertexId v, int alpha) {
    VertexSet region = VertexSet::full(g.n());
    region.erase(v);
    return alpha_of_region(g, region) < alpha;
}

bool in_some_alpha_set(const Graph& g, VertexId v, int alpha) {
    return 1 + alpha_of_region(g, VertexSet::full(g.n()) - g.closed_neighborhood(v)) == alpha;
}

}  // namespace

CoreReport cores(const Graph& g, Objective kind) {
    CoreReport r;
    r.kind = kind;
    if (kind == Objective::Gamma) {
        int gamma = gamma_number(g);
        for (VertexId v = 0; v < g.n(); ++v) {
            DominationQuery without = DominationQuery::plain(g);
            without.allowed.erase(v);
            auto res = solve_domination(g, without);
            if (!res || res->value > gamma) r.core.push_back(v);
            DominationQuery with = DominationQuery::plain(g);
            with.forced.insert(v);
            if (solve_domination(g, with)->value > gamma) r.anticore.push_back(v);
        }
        return r;
    }
    int alpha = alpha_number(g);
    std::vector<VertexId> alpha_core, alpha_anticore;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (in_every_alpha_set(g, v, alpha)) alpha_core.push_back(v);
        if (!in_some_alpha_set(g, v, alpha)) alpha_anticore.push_back(v);
    }
    if (kind == Objective::Alpha) {
        r.core = alpha_core;
        r.anticore = alpha_anticore;
    } else {
        r.core = alpha_anticore;
        r.anticore = alpha_core;
    }
    return r;
}

CoreReport cores_from_family(const Graph& g, const OptimalFamily& family) {
    CoreReport r;
    r.kind = family.kind;
    VertexSet inter = VertexSet::full(g.n());
    VertexSet uni(g.n());
    for (const auto& s : family.sets) {
        VertexSet m = VertexSet::of(g.n(), s);
        inter &= m;
        uni |= m;
    }
    if (family.sets.empty()) inter = VertexSet(g.n());
    r.core = inter.members();
    if (!family.truncated) r.anticore = (VertexSet::full(g.n()) - uni).members();
    return r;
}

bool tau_anticore_leaf_test(const Graph& g, VertexId v) {
    if (!g.valid(v)) throw InputError("vertex id out of range");
    return tau_number(attach_leaves(g, {v})) == tau_number(g) + 1;
}

bool alpha_core_delete_test(const Graph& g, VertexId v) {
    if (!g.valid(v)) throw InputError("vertex id out of range");
    VertexSet region = VertexSet::full(g.n());
    region.erase(v);
    return alpha_of_region(g, region) == alpha_number(g) - 1;
}

bool has_min_ds_containing(const Graph& g, const std::vector<VertexId>& a) {
    for (VertexId v : a)
        if (!g.valid(v)) throw InputError("vertex id out of range");
    return gamma_number(attach_leaves(g, a)) == gamma_number(g);
}

bool is_gamma_critical_edge(const Graph& g, const EdgeRef& e) {
    if (!g.has_edge(e)) throw InputError("missing edge (" + std::to_string(e.u) + ", " +
                                         std::to_string(e.v) + ")");
    return gamma_number(delete_edges(g, {e})) == gamma_number(g) + 1;
}

bool next_colex_combination(std::vector<int>& c, int m) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[i + 1] : m;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

namespace {

// Does a known dominating set of G still dominate G - E'? Only endpoints
// of E' can lose their dominator.
bool still_dominates(const Graph& g, const VertexSet& s, const std::vector<EdgeRef>& removed) {
    for (const auto& e : removed) {
        for (VertexId w : {e.u, e.v}) {
            if (s.contains(w)) continue;
            bool ok = false;
            for (VertexId x : g.neighbors(w)) {
                if (!s.contains(x)) continue;
                bool deleted = false;
                for (const auto& f : removed)
                    if (f == EdgeRef(w, x)) {
                        deleted = true;
                        break;
                    }
                if (!deleted) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

struct SubsetVerdict {
    bool raises = false;
    std::optional<std::vector<VertexId>> counter;  // gamma-size set still dominating
};

SubsetVerdict test_subset(const Graph& g, int gamma, const std::vector<EdgeRef>& removed,
                          const std::vector<VertexSet>& cache) {
    for (const auto& s : cache)
        if (still_dominates(g, s, removed)) return {false, std::nullopt};
    Graph h = delete_edges(g, removed);
    auto found = find_domination_at_most(h, DominationQuery::plain(h), gamma);
    if (found) return {false, found};
    return {true, std::nullopt};
}

}  // namespace

BondageResult bondage_number(const Graph& g, int d_max, const SearchOptions& opts) {
    if (g.m() == 0) throw PreconditionError("bondage number is undefined for an edgeless graph");
    if (d_max < 1) throw InputError("d_max must be at least 1");
    BondageResult res;
    res.d_max = d_max;
    auto base = min_dominating_set(g);
    res.gamma = base.value;
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<VertexSet> cache{VertexSet::of(g.n(), base.witness)};
    const int threads = std::max(1, opts.threads);
    constexpr std::size_t kBlock = 64;
    constexpr std::size_t kCacheLimit = 512;

    for (int k = 1; k <= std::min(d_max, m); ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            // Gather a block in colex order; evaluate it against a frozen cache.
            std::vector<std::vector<EdgeRef>> block;
            while (more && block.size() < kBlock) {
                std::vector<EdgeRef> subset;
                for (int idx : comb) subset.push_back(edges[idx]);
                block.push_back(std::move(subset));
                more = next_colex_combination(comb, m);
            }
            std::vector<SubsetVerdict> verdicts(block.size());
            if (threads == 1 || block.size() == 1) {
                for (std::size_t i = 0; i < block.size(); ++i) verdicts[i] = test_subset(g, res.gamma, block[i], cache);
            } else {
                std::atomic<std::size_t> next{0};
                std::vector<std::thread> pool;
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back([&] {
                        for (std::size_t i = next++; i < block.size(); i = next++)
                            verdicts[i] = test_subset(g, res.gamma, block[i], cache);
                    });
                for (auto& th : pool) th.join();
            }
            for (std::size_t i = 0; i < block.size(); ++i) {
                ++res.subsets_tested;
                if (verdicts[i].raises) {
                    res.value = k;
                    res.witness = block[i];
                    return res;
                }
                if (verdicts[i].counter && cache.size() < kCacheLimit)
                    cache.push_back(VertexSet::of(g.n(), *verdicts[i].counter));
            }
        }
    }
    return res;
}

std::vector<EdgeRef> non_critical_filters(const Graph& g, const OptimalFamily& family) {
    int gamma = gamma_number(g);
    for (const auto& s : family.sets)
        if (static_cast<int>(s.size()) != gamma || !is_dominating(g, s))
            throw InputError("family contains a set that is not a gamma-set");
    std::vector<EdgeRef> out;
    for (const auto& e : g.edges()) {
        bool filtered = false;
        for (const auto& s : family.sets) {
            VertexSet in = VertexSet::of(g.n(), s);
            if (in.contains(e.u) == in.contains(e.v)) {
                filtered = true;
                break;
            }
            for (VertexId x : {e.u, e.v})
                if (!in.contains(x) && g.open_neighborhood(x).intersection_count(in) >= 2) filtered = true;
            if (filtered) break;
        }
        if (filtered) out.push_back(e);
    }
    return out;
}

}  // namespace bondage
