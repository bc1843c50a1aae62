#pragma once

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isograph.hpp"

namespace orbikit {

// Working graph of the rewriting: erased edges stay in place as empty slots so indices are stable.
struct KillState {
    struct Vertex {
        Isotropy type;
        int lost = 0;        // incident half-edges whose generator has been killed
        bool merged = false; // absorbed into an edge by degree-2 resolution
    };
    struct LiveEdge {
        int u, v, weight;
    };

    std::vector<Vertex> vertices;
    std::vector<std::optional<LiveEdge>> edges;

    std::vector<int> surviving_half_edges(int vertex) const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i]) continue;
            if (edges[i]->u == vertex) out.push_back(static_cast<int>(i));
            if (edges[i]->v == vertex) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    std::size_t live_edge_count() const
    {
        return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.has_value(); }));
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["vertices"] = nlohmann::json::array();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].merged) continue;
            j["vertices"].push_back({{"id", i}, {"type", vertices[i].type.name()}, {"lost", vertices[i].lost}});
        }
        j["edges"] = nlohmann::json::array();
        auto end = [](int x) { return x == cusp ? nlohmann::json("cusp") : nlohmann::json(x); };
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i]) j["edges"].push_back({{"id", i}, {"ends", {end(edges[i]->u), end(edges[i]->v)}}, {"weight", edges[i]->weight}});
        return j;
    }
};

struct RewriteStep {
    std::string rule;
    std::string target;
    KillState snapshot;
};

enum class Verdict { Trivial, NonTrivial };

inline std::string to_string(Verdict v)
{
    return v == Verdict::Trivial ? "Trivial" : "NonTrivial";
}

struct RewriteTrace {
    std::vector<RewriteStep> steps;
    Verdict verdict = Verdict::NonTrivial;
    KillState residual;

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["verdict"] = to_string(verdict);
        j["steps"] = nlohmann::json::array();
        for (const auto& s : steps) j["steps"].push_back({{"rule", s.rule}, {"target", s.target}, {"graph", s.snapshot.to_json()}});
        j["residual"] = residual.to_json();
        return j;
    }
};

namespace detail {

enum class KillRule { collapse, gcd_relabel, resolve_degree2 };

inline const char* rule_name(KillRule r)
{
    switch (r) {
    case KillRule::collapse: return "collapse";
    case KillRule::gcd_relabel: return "gcd_relabel";
    case KillRule::resolve_degree2: return "resolve_degree2";
    }
    return "?";
}

struct Candidate {
    KillRule rule;
    int vertex;
};

inline void erase_edge(KillState& s, int idx)
{
    const auto e = *s.edges[idx];
    s.edges[idx].reset();
    if (e.u != cusp) ++s.vertices[e.u].lost;
    if (e.v != cusp) ++s.vertices[e.v].lost;
}

inline std::vector<Candidate> applicable(const KillState& s)
{
    std::vector<Candidate> out;
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        const auto& vx = s.vertices[v];
        if (vx.merged) continue;
        auto half = s.surviving_half_edges(v);
        if (half.empty()) continue;
        if (vx.lost >= 1 && half.size() <= 1) out.push_back({KillRule::collapse, v});
        if (half.size() == 2 && half[0] != half[1] && (vx.lost >= 1 || vx.type.kind == Isotropy::Kind::Cyclic)) {
            int w0 = s.edges[half[0]]->weight, w1 = s.edges[half[1]]->weight;
            if (vx.lost >= 1 && (w0 != w1 || std::gcd(w0, w1) == 1)) out.push_back({KillRule::gcd_relabel, v});
            out.push_back({KillRule::resolve_degree2, v});
        }
    }
    return out;
}

inline std::string apply_rule(KillState& s, const Candidate& c)
{
    auto half = s.surviving_half_edges(c.vertex);
    std::string target = "vertex " + std::to_string(c.vertex);
    switch (c.rule) {
    case KillRule::collapse:
        for (int e : half)
            if (s.edges[e]) erase_edge(s, e);
        break;
    case KillRule::gcd_relabel: {
        int g = std::gcd(s.edges[half[0]]->weight, s.edges[half[1]]->weight);
        if (g == 1) {
            erase_edge(s, half[0]);
            erase_edge(s, half[1]);
        }
        else {
            s.edges[half[0]]->weight = g;
            s.edges[half[1]]->weight = g;
        }
        break;
    }
    case KillRule::resolve_degree2: {
        auto e0 = *s.edges[half[0]], e1 = *s.edges[half[1]];
        int g = std::gcd(e0.weight, e1.weight);
        int a = e0.u == c.vertex ? e0.v : e0.u;
        int b = e1.u == c.vertex ? e1.v : e1.u;
        s.edges[half[1]].reset();
        s.vertices[c.vertex].merged = true;
        if (g == 1) {
            s.edges[half[0]].reset();
            if (a != cusp) ++s.vertices[a].lost;
            if (b != cusp) ++s.vertices[b].lost;
        }
        else {
            s.edges[half[0]] = KillState::LiveEdge{a, b, g};
        }
        target += " into edge " + std::to_string(half[0]);
        break;
    }
    }
    return target;
}

}  // namespace detail

struct CuspKillOptions {
    std::optional<std::uint64_t> seed;  // random rule order when set, canonical order otherwise
    bool record_snapshots = true;
};

// Quotient by the normal closure of the peripheral torsion, carried out as edge erasure on the graph.
inline RewriteTrace cusp_kill(const IsotropyGraph& g, const CuspKillOptions& opts = {})
{
    auto violations = validate(g);
    if (!violations.empty()) throw InvalidGraph(violations.front().location + ": " + violations.front().message);

    KillState s;
    for (const auto& v : g.vertices) s.vertices.push_back({v, 0, false});
    for (const auto& e : g.edges) s.edges.push_back(KillState::LiveEdge{e.u, e.v, e.weight});

    RewriteTrace trace;
    auto record = [&](std::string rule, std::string target) {
        trace.steps.push_back({std::move(rule), std::move(target), opts.record_snapshots ? s : KillState{}});
    };

    std::vector<int> cusp_edges;
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        if (s.edges[i]->u == cusp || s.edges[i]->v == cusp) cusp_edges.push_back(static_cast<int>(i));
    for (int e : cusp_edges) detail::erase_edge(s, e);
    if (!cusp_edges.empty()) record("kill_cusp_edges", std::to_string(cusp_edges.size()) + " cusp edges");
    if (g.cusp_type == CuspType::S2_2222) record("klein4_quotient", "cusp: all four involutions killed, quotient trivial");

    std::mt19937_64 rng(opts.seed.value_or(0));
    for (;;) {
        auto cands = detail::applicable(s);
        if (cands.empty()) break;
        std::size_t pick = 0;
        if (opts.seed) pick = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng);
        std::string target = detail::apply_rule(s, cands[pick]);
        record(detail::rule_name(cands[pick].rule), target);
    }
    trace.verdict = s.live_edge_count() == 0 ? Verdict::Trivial : Verdict::NonTrivial;
    trace.residual = std::move(s);
    return trace;
}

inline bool components_connected_to_cusp(const IsotropyGraph& g)
{
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto id = [&](int x) { return x == cusp ? n : x; };
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) parent[find(id(e.u))] = find(id(e.v));
    for (int v = 0; v < n; ++v)
        if (find(v) != find(n)) return false;
    return true;
}

}  // namespace orbikit
