#include "bicontract/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "bicontract/error.hpp"

namespace bicontract {

std::string_view to_string(IrrelevantPolicy policy) {
    switch (policy) {
        case IrrelevantPolicy::paper_exact_only: return "paper-exact-only";
        case IrrelevantPolicy::verified_against_oracle: return "verified-against-oracle";
        case IrrelevantPolicy::disabled: return "disabled";
    }
    return "?";
}

IrrelevantPolicy parse_policy(std::string_view text) {
    if (text == "paper-exact-only" || text == "paper-exact") return IrrelevantPolicy::paper_exact_only;
    if (text == "verified" || text == "verified-against-oracle") return IrrelevantPolicy::verified_against_oracle;
    if (text == "disabled") return IrrelevantPolicy::disabled;
    fail(Errc::invalid_argument, "unknown irrelevant-edge policy '" + std::string(text) + "'");
}

PhaseRecord& PhaseRecord::add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

PhaseRecord& PhaseRecord::add(std::string key, std::int64_t value) {
    return add(std::move(key), std::to_string(value));
}

std::string PhaseRecord::to_line() const {
    std::string line = "phase=" + phase;
    for (const auto& [key, value] : fields) line += " " + key + "=" + value;
    return line;
}

namespace {

constexpr auto saturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    return __builtin_mul_overflow(a, b, &out) ? saturated : out;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    return __builtin_add_overflow(a, b, &out) ? saturated : out;
}

// p·t·4^p with p = 4k²
std::int64_t default_core(std::size_t k, std::size_t t) {
    const auto kk = static_cast<std::int64_t>(k);
    const auto p = sat_mul(4, sat_mul(kk, kk));
    std::int64_t power = p >= 31 ? saturated : (std::int64_t{1} << (2 * p));
    return sat_mul(sat_mul(p, static_cast<std::int64_t>(t)), power);
}

}  // namespace

std::int64_t default_width_bound(std::size_t k, std::size_t t) {
    return sat_add(sat_mul(3, default_core(k, t)), 3);
}

std::int64_t default_wellconnected_size(std::size_t k, std::size_t t) {
    return sat_add(sat_mul(2, default_core(k, t)), 2);
}

void CheaperInstance::validate() const {
    phi.require_host(graph);
    auto cost = coloring_cost(graph, phi);
    if (cost != k + 1)
        fail(Errc::invalid_coloring,
             "coloring has cost " + std::to_string(cost) + ", expected " + std::to_string(k + 1));
}

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

struct Context {
    const SolverConfig& cfg;
    SolveStats stats;
    std::mutex lock;

    template <class F>
    void update(F&& f) {
        std::lock_guard guard(lock);
        f(stats);
    }

    void emit(const PhaseRecord& record) {
        if (!cfg.diagnostics) return;
        std::lock_guard guard(lock);
        cfg.diagnostics(record);
    }

    void publish(SolveStats* out) {
        if (out) *out = stats;
    }
};

std::optional<TwoColoring> extension_impl(Context& ctx, const ExtensionInstance& inst);

VertexSet restrict_to(std::span<const Vertex> set, const VertexSet& sorted_members) {
    VertexSet out;
    for (auto v : set)
        if (std::binary_search(sorted_members.begin(), sorted_members.end(), v)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// Proper coloring of a connected bipartite graph matching the terminals, if
// any exists.
std::optional<TwoColoring> proper_extension(const ExtensionInstance& inst) {
    auto proper = proper_two_coloring(inst.graph);
    if (!proper) return std::nullopt;
    auto phi = TwoColoring::from_proper(inst.graph, *proper);
    if (phi.extends(inst.t1, inst.t2)) return phi;
    std::map<Vertex, int> flipped;
    for (auto [v, c] : phi.to_map()) flipped[v] = 3 - c;
    auto other = TwoColoring::from_map(flipped);
    if (other.extends(inst.t1, inst.t2)) return other;
    return std::nullopt;
}

TreeDecomposition best_heuristic(const Graph& g) {
    auto a = heuristic_decomposition(g, EliminationStrategy::min_degree);
    auto b = heuristic_decomposition(g, EliminationStrategy::min_fill);
    return b.width() < a.width() ? b : a;
}

std::optional<TwoColoring> run_dp(Context& ctx, const ExtensionInstance& inst, const TreeDecomposition& td,
                                  std::string_view branch) {
    auto ntd = to_nice(td, inst.graph);
    ctx.update([&](SolveStats& s) {
        ++s.dp_runs;
        s.max_width = std::max(s.max_width, td.width());
    });
    DpStats dp;
    auto result = solve_extension_dp(inst, ntd, &dp, ctx.cfg.work_limit);
    ctx.emit(PhaseRecord{"extension"}
                 .add("branch", std::string(branch))
                 .add("n", static_cast<std::int64_t>(inst.graph.num_vertices()))
                 .add("m", static_cast<std::int64_t>(inst.graph.num_edges()))
                 .add("t", static_cast<std::int64_t>(inst.num_terminals()))
                 .add("k", static_cast<std::int64_t>(inst.k))
                 .add("width", td.width())
                 .add("states", static_cast<std::int64_t>(dp.states))
                 .add("found", result ? "yes" : "no"));
    return result;
}

std::optional<TwoColoring> oracle_fallback(Context& ctx, const ExtensionInstance& inst) {
    const auto& g = inst.graph;
    const auto n = g.num_vertices();
    const auto work = static_cast<long double>(g.num_vertices() + g.num_edges()) *
                      static_cast<long double>(n >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                                       : (std::uint64_t{1} << n));
    if (work > static_cast<long double>(ctx.cfg.work_limit))
        return run_dp(ctx, inst, best_heuristic(g), "dichotomy-failure-dp");
    ctx.update([](SolveStats& s) { ++s.oracle_fallbacks; });
    auto best = brute_force_coloring(g, inst.t1, inst.t2, ctx.cfg.work_limit);
    ctx.emit(PhaseRecord{"extension"}
                 .add("branch", "oracle")
                 .add("n", static_cast<std::int64_t>(n))
                 .add("k", static_cast<std::int64_t>(inst.k))
                 .add("cost", static_cast<std::int64_t>(best.cost)));
    if (best.cost > inst.k) return std::nullopt;
    return best.coloring;
}

bool deletion_allowed(const SolverConfig& cfg, std::size_t n) {
    switch (cfg.policy) {
        case IrrelevantPolicy::paper_exact_only: return cfg.uses_default_constants();
        case IrrelevantPolicy::verified_against_oracle: return n <= cfg.oracle_vertex_limit;
        case IrrelevantPolicy::disabled: return false;
    }
    return false;
}

// Connected graph.
std::optional<TwoColoring> solve_component(Context& ctx, const ExtensionInstance& inst) {
    ctx.update([](SolveStats& s) { ++s.extension_calls; });
    const auto& g = inst.graph;
    const auto t = inst.num_terminals();
    if (t == 0 || inst.k == 0) {
        ctx.update([](SolveStats& s) { ++s.shortcuts; });
        auto proper = proper_extension(inst);
        ctx.emit(PhaseRecord{"extension"}
                     .add("branch", "proper")
                     .add("n", static_cast<std::int64_t>(g.num_vertices()))
                     .add("t", static_cast<std::int64_t>(t))
                     .add("found", proper ? "yes" : "no"));
        return proper;
    }

    const auto w = ctx.cfg.width_bound.value_or(default_width_bound(inst.k, t));
    const auto h = ctx.cfg.wellconnected_size.value_or(default_wellconnected_size(inst.k, t));
    std::optional<Dichotomy> split;
    try {
        split = decomposition_or_wellconnected(g, w, h);
    } catch (const Error& e) {
        if (e.code() != Errc::dichotomy_failure) throw;
        ctx.emit(PhaseRecord{"dichotomy"}.add("result", "failure").add("w", w).add("h", h));
        return oracle_fallback(ctx, inst);
    }
    if (auto* td = std::get_if<TreeDecomposition>(&*split)) return run_dp(ctx, inst, *td, "decomposition");

    auto& candidate = std::get<WellConnectedCandidate>(*split);
    ctx.update([](SolveStats& s) { ++s.candidates; });
    if (!deletion_allowed(ctx.cfg, g.num_vertices()))
        return run_dp(ctx, inst, best_heuristic(g), "candidate-dp");

    IrrelevantEdgeReport report;
    Edge e;
    try {
        e = find_irrelevant_edge(g, candidate, inst.t1, inst.t2, inst.k, ctx.cfg, &report);
    } catch (const Error& err) {
        if (err.code() != Errc::candidate_invalid && err.code() != Errc::not_found &&
            err.code() != Errc::unsound_deletion)
            throw;
        ctx.update([](SolveStats& s) { ++s.rejected_candidates; });
        ctx.emit(PhaseRecord{"irrelevant-edge"}
                     .add("result", "rejected")
                     .add("reason", std::string(to_string(err.code()))));
        return run_dp(ctx, inst, best_heuristic(g), "candidate-dp");
    }
    ctx.update([&](SolveStats& s) {
        s.deletions.push_back({e, report.z.z, report.y1, report.y2, report.z.cut_budget});
    });
    ctx.emit(PhaseRecord{"irrelevant-edge"}
                 .add("result", "deleted")
                 .add("edge", edge_text(e))
                 .add("z", static_cast<std::int64_t>(report.z.z.size()))
                 .add("y", static_cast<std::int64_t>(candidate.members.size()))
                 .add("verified", report.verified ? "yes" : "no"));

    ExtensionInstance reduced{delete_edge(g, e), inst.k, inst.t1, inst.t2};
    auto result = extension_impl(ctx, reduced);
    if (!result) return std::nullopt;
    if (coloring_cost(g, *result) <= inst.k) return result;
    // the coloring of G - uv pays for uv; solve G itself
    return run_dp(ctx, inst, best_heuristic(g), "lift-dp");
}

std::optional<TwoColoring> extension_impl(Context& ctx, const ExtensionInstance& inst) {
    inst.validate();
    std::map<Vertex, int> colors;
    std::size_t remaining = inst.k;
    for (const auto& comp : connected_components(inst.graph)) {
        ExtensionInstance part{inst.graph.induced_subgraph(comp), 0, restrict_to(inst.t1, comp),
                               restrict_to(inst.t2, comp)};
        std::optional<TwoColoring> found;
        for (std::size_t budget = 0; budget <= remaining && !found; ++budget) {
            part.k = budget;
            found = solve_component(ctx, part);
        }
        if (!found) return std::nullopt;
        remaining -= coloring_cost(part.graph, *found);
        for (auto [v, c] : found->to_map()) colors[v] = c;
    }
    return TwoColoring::from_map(colors);
}

std::optional<TwoColoring> try_partition(Context& ctx, const CheaperInstance& inst, const VertexSet& x,
                                         const EdgeSet& bad, std::uint64_t mask) {
    const auto& g = inst.graph;
    auto in_x2 = [&](Vertex v) {
        auto pos = std::lower_bound(x.begin(), x.end(), v) - x.begin();
        return ((mask >> pos) & 1) != 0;
    };
    EdgeSet within;
    EdgeSet cross;
    for (const auto& e : bad) (in_x2(e.u) == in_x2(e.v) ? within : cross).push_back(e);

    auto contracted = contract_edges(g, within);
    const auto merged = contracted.trace.merges.size();
    if (merged > inst.k) {
        ctx.update([](SolveStats& s) { ++s.partitions_discarded; });
        return std::nullopt;
    }
    std::set<Edge> drop;
    for (const auto& e : cross)
        drop.insert(Edge::make(contracted.trace.image(e.u), contracted.trace.image(e.v)));
    EdgeSet kept;
    for (const auto& e : contracted.graph.edges())
        if (!drop.count(e)) kept.push_back(e);
    auto residual = contracted.graph.with_edges(std::move(kept));
    if (!is_bipartite(residual)) throw std::logic_error("residual graph of a partition is not bipartite");

    std::set<Vertex> t1;
    std::set<Vertex> t2;
    for (auto v : x) (in_x2(v) ? t2 : t1).insert(contracted.trace.image(v));
    ExtensionInstance ext{residual, inst.k - merged, VertexSet(t1.begin(), t1.end()),
                          VertexSet(t2.begin(), t2.end())};
    auto psi = extension_impl(ctx, ext);
    if (!psi) return std::nullopt;

    std::map<Vertex, int> lifted;
    for (auto v : g.vertices()) lifted[v] = psi->color(contracted.trace.image(v));
    auto phi = TwoColoring::from_map(lifted);
    if (coloring_cost(g, phi) > inst.k) throw std::logic_error("lifted coloring exceeds the budget");
    return phi;
}

std::optional<TwoColoring> cheaper_impl(Context& ctx, const CheaperInstance& inst) {
    inst.validate();
    ctx.update([](SolveStats& s) { ++s.cheaper_calls; });
    auto analysis = analyze(inst.graph, inst.phi);
    std::set<Vertex> endpoints;
    for (const auto& e : analysis.bad_edges) {
        endpoints.insert(e.u);
        endpoints.insert(e.v);
    }
    const VertexSet x(endpoints.begin(), endpoints.end());
    if (x.size() >= 63) fail(Errc::budget_exceeded, "too many bad-edge endpoints to enumerate partitions");
    const std::uint64_t total = std::uint64_t{1} << x.size();
    ctx.update([&](SolveStats& s) { s.partitions += total; });

    std::optional<TwoColoring> found;
    std::uint64_t winner = total;
    const unsigned threads = std::max(1u, std::min<unsigned>(ctx.cfg.threads, static_cast<unsigned>(total)));
    if (threads == 1) {
        for (std::uint64_t mask = 0; mask < total && !found; ++mask) {
            found = try_partition(ctx, inst, x, analysis.bad_edges, mask);
            if (found) winner = mask;
        }
    } else {
        std::vector<std::optional<TwoColoring>> results(total);
        std::vector<std::exception_ptr> errors(total);
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{total};
        auto worker = [&] {
            for (;;) {
                auto mask = next.fetch_add(1);
                if (mask >= total || mask > best.load()) return;
                try {
                    results[mask] = try_partition(ctx, inst, x, analysis.bad_edges, mask);
                } catch (...) {
                    errors[mask] = std::current_exception();
                }
                if (results[mask] || errors[mask]) {
                    auto seen = best.load();
                    while (mask < seen && !best.compare_exchange_weak(seen, mask)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (errors[mask]) std::rethrow_exception(errors[mask]);
            if (results[mask]) {
                found = std::move(results[mask]);
                winner = mask;
                break;
            }
        }
    }
    ctx.emit(PhaseRecord{"cheaper"}
                 .add("n", static_cast<std::int64_t>(inst.graph.num_vertices()))
                 .add("k", static_cast<std::int64_t>(inst.k))
                 .add("x", static_cast<std::int64_t>(x.size()))
                 .add("partitions", static_cast<std::int64_t>(total))
                 .add("found", found ? "yes" : "no")
                 .add("mask", found ? static_cast<std::int64_t>(winner) : -1));
    return found;
}

std::optional<TwoColoring> cheap_impl(Context& ctx, const Graph& g, std::size_t k) {
    auto phi = TwoColoring::uniform(g, 1);
    std::vector<Edge> prefix;
    prefix.reserve(g.num_edges());
    for (const auto& e : g.edges()) {
        prefix.push_back(e);
        auto h = g.with_edges(prefix);
        ctx.update([](SolveStats& s) { ++s.insertions; });
        if (coloring_cost(h, phi) <= k) continue;
        auto next = cheaper_impl(ctx, CheaperInstance{h, k, phi});
        if (!next) return std::nullopt;
        phi = std::move(*next);
    }
    return phi;
}

}  // namespace

std::optional<TwoColoring> solve_extension(const ExtensionInstance& inst, const SolverConfig& cfg,
                                           SolveStats* stats) {
    Context ctx{cfg, {}, {}};
    auto out = extension_impl(ctx, inst);
    ctx.publish(stats);
    return out;
}

std::optional<TwoColoring> solve_cheaper_coloring(const CheaperInstance& inst, const SolverConfig& cfg,
                                                  SolveStats* stats) {
    Context ctx{cfg, {}, {}};
    auto out = cheaper_impl(ctx, inst);
    ctx.publish(stats);
    return out;
}

std::optional<TwoColoring> solve_cheap_coloring(const Graph& g, std::size_t k, const SolverConfig& cfg,
                                                SolveStats* stats) {
    Context ctx{cfg, {}, {}};
    auto out = cheap_impl(ctx, g, k);
    ctx.publish(stats);
    return out;
}

std::optional<ContractionSet> solve_bipartite_contraction(const Graph& g, std::size_t k, const SolverConfig& cfg,
                                                          SolveStats* stats) {
    Context ctx{cfg, {}, {}};
    std::map<Vertex, int> colors;
    std::size_t remaining = k;
    bool feasible = true;
    for (const auto& comp : connected_components(g)) {
        auto part = g.induced_subgraph(comp);
        std::optional<TwoColoring> found;
        for (std::size_t budget = 0; budget <= remaining && !found; ++budget) found = cheap_impl(ctx, part, budget);
        if (!found) {
            feasible = false;
            break;
        }
        remaining -= coloring_cost(part, *found);
        for (auto [v, c] : found->to_map()) colors[v] = c;
    }
    ctx.publish(stats);
    ctx.emit(PhaseRecord{"solve"}
                 .add("n", static_cast<std::int64_t>(g.num_vertices()))
                 .add("m", static_cast<std::int64_t>(g.num_edges()))
                 .add("k", static_cast<std::int64_t>(k))
                 .add("result", feasible ? "yes" : "no"));
    if (!feasible) return std::nullopt;

    auto witness = coloring_to_contraction_set(g, TwoColoring::from_map(colors));
    auto check = check_witness(g, witness.edges(), k);
    if (!check.accepted) throw std::logic_error("solver produced a bad witness: " + check.reason);
    return witness;
}

Edge find_irrelevant_edge(const Graph& g, WellConnectedCandidate& candidate, std::span<const Vertex> t1,
                          std::span<const Vertex> t2, std::size_t k, const SolverConfig& cfg,
                          IrrelevantEdgeReport* report) {
    if (cfg.policy == IrrelevantPolicy::disabled)
        fail(Errc::precondition_violated, "irrelevant-edge deletion is disabled");
    if (cfg.policy == IrrelevantPolicy::paper_exact_only && !cfg.uses_default_constants())
        fail(Errc::precondition_violated, "paper-exact-only policy forbids deletion under overridden constants");

    IrrelevantEdgeReport local;
    auto& out = report ? *report : local;
    out.z = compute_z(g, candidate.members, t1, t2, k, cfg.cut_budget, cfg.work_limit);
    const auto& z = out.z.z;
    auto in_z = [&](Vertex v) { return std::binary_search(z.begin(), z.end(), v); };

    VertexSet inside;
    VertexSet outside;
    for (auto v : candidate.members) (in_z(v) ? inside : outside).push_back(v);
    const auto half = candidate.members.size() / 2;
    if (half == 0 || inside.size() > half)
        fail(Errc::not_found, "Z covers " + std::to_string(inside.size()) + " of " +
                                  std::to_string(candidate.members.size()) + " candidate vertices");
    // Y1 takes the smallest vertices outside Z, Y2 holds Z ∩ Y and the next ones.
    VertexSet y1(outside.begin(), outside.begin() + static_cast<long>(half));
    VertexSet y2 = inside;
    y2.insert(y2.end(), outside.begin() + static_cast<long>(half),
              outside.begin() + static_cast<long>(2 * half - inside.size()));
    std::sort(y2.begin(), y2.end());
    out.y1 = y1;
    out.y2 = y2;
    if (!verify_partition(g, candidate, y1, y2))
        fail(Errc::candidate_invalid, "candidate partition has fewer than " + std::to_string(half) +
                                          " disjoint paths");

    const auto& flow = candidate.verified.back().flow;
    std::optional<Edge> chosen;
    for (const auto& path : flow.paths) {
        if (path.size() < 2) continue;
        if (!in_z(path[0]) && !in_z(path[1])) {
            chosen = Edge::make(path[0], path[1]);
            break;
        }
    }
    if (!chosen) fail(Errc::not_found, "every path starts with an edge touching Z");

    if (cfg.policy == IrrelevantPolicy::verified_against_oracle && g.num_vertices() <= cfg.oracle_vertex_limit) {
        auto before = brute_force_coloring(g, t1, t2, cfg.work_limit).cost;
        auto after = brute_force_coloring(delete_edge(g, *chosen), t1, t2, cfg.work_limit).cost;
        out.verified = true;
        out.optimum_before = std::min(before, k + 1);
        out.optimum_after = std::min(after, k + 1);
        if (out.optimum_before != out.optimum_after)
            fail(Errc::unsound_deletion, "deleting " + edge_text(*chosen) + " changes the optimum");
    }
    return *chosen;
}

}  // namespace bicontract
