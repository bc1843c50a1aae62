#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"

namespace orbikit {

enum class CuspType { Torus, S2_2222, S2_244, S2_236, S2_333 };

inline std::string to_string(CuspType t)
{
    switch (t) {
    case CuspType::Torus: return "Torus";
    case CuspType::S2_2222: return "S2_2222";
    case CuspType::S2_244: return "S2_244";
    case CuspType::S2_236: return "S2_236";
    case CuspType::S2_333: return "S2_333";
    }
    return "?";
}

// Accepts "S2_244", "244", "torus" and the like.
inline CuspType parse_cusp_type(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    if (s.rfind("S2_", 0) == 0) s = s.substr(3);
    if (s == "TORUS" || s == "T2") return CuspType::Torus;
    if (s == "2222") return CuspType::S2_2222;
    if (s == "244") return CuspType::S2_244;
    if (s == "236") return CuspType::S2_236;
    if (s == "333") return CuspType::S2_333;
    throw ParseError("unknown cusp type '" + s + "'");
}

inline std::vector<int> cone_orders(CuspType t)
{
    switch (t) {
    case CuspType::Torus: return {};
    case CuspType::S2_2222: return {2, 2, 2, 2};
    case CuspType::S2_244: return {2, 4, 4};
    case CuspType::S2_236: return {2, 3, 6};
    case CuspType::S2_333: return {3, 3, 3};
    }
    return {};
}

inline bool is_rigid(CuspType t)
{
    return t == CuspType::S2_244 || t == CuspType::S2_236 || t == CuspType::S2_333;
}

struct Isotropy {
    enum class Kind { Cyclic, Dihedral, A4, S4, A5 };
    Kind kind;
    int n = 0;

    static Isotropy cyclic(int n) { return {Kind::Cyclic, n}; }
    static Isotropy dihedral(int n) { return {Kind::Dihedral, n}; }
    static Isotropy a4() { return {Kind::A4, 0}; }
    static Isotropy s4() { return {Kind::S4, 0}; }
    static Isotropy a5() { return {Kind::A5, 0}; }

    // Sorted multiset of incident edge weights.
    std::vector<int> weights() const
    {
        switch (kind) {
        case Kind::Cyclic: return {n, n};
        case Kind::Dihedral: {
            std::vector<int> w{2, 2, n};
            std::sort(w.begin(), w.end());
            return w;
        }
        case Kind::A4: return {2, 3, 3};
        case Kind::S4: return {2, 3, 4};
        case Kind::A5: return {2, 3, 5};
        }
        return {};
    }

    std::string name() const
    {
        switch (kind) {
        case Kind::Cyclic: return "C" + std::to_string(n);
        case Kind::Dihedral: return "D" + std::to_string(n);
        case Kind::A4: return "A4";
        case Kind::S4: return "S4";
        case Kind::A5: return "A5";
        }
        return "?";
    }

    friend bool operator==(const Isotropy&, const Isotropy&) = default;
};

inline constexpr int cusp = -1;

struct Edge {
    int u, v;
    int weight;

    bool is_loop() const { return u == v; }
    bool touches_cusp() const { return u == cusp || v == cusp; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct IsotropyGraph {
    CuspType cusp_type = CuspType::Torus;
    std::vector<Isotropy> vertices;
    std::vector<Edge> edges;

    // Incident weights at an endpoint, loops counted twice.
    std::vector<int> incident_weights(int endpoint) const
    {
        std::vector<int> w;
        for (const auto& e : edges) {
            if (e.u == endpoint) w.push_back(e.weight);
            if (e.v == endpoint) w.push_back(e.weight);
        }
        std::sort(w.begin(), w.end());
        return w;
    }

    bool has_cusp_loop(int weight) const
    {
        return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.u == cusp && e.v == cusp && e.weight == weight; });
    }

    friend bool operator==(const IsotropyGraph&, const IsotropyGraph&) = default;
};

struct Violation {
    std::string location;
    std::string message;
};

inline std::string endpoint_name(int e)
{
    return e == cusp ? "cusp" : "vertex " + std::to_string(e);
}

inline std::vector<Violation> validate(const IsotropyGraph& g)
{
    std::vector<Violation> out;
    const int nv = static_cast<int>(g.vertices.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        std::string where = "edge " + std::to_string(i);
        if (e.weight < 2) out.push_back({where, "weight " + std::to_string(e.weight) + " is below 2"});
        for (int end : {e.u, e.v})
            if (end != cusp && (end < 0 || end >= nv)) out.push_back({where, "endpoint " + std::to_string(end) + " does not exist"});
    }
    for (int i = 0; i < nv; ++i) {
        const Isotropy& iso = g.vertices[i];
        std::string where = endpoint_name(i);
        if ((iso.kind == Isotropy::Kind::Cyclic || iso.kind == Isotropy::Kind::Dihedral) && iso.n < 2) {
            out.push_back({where, iso.name() + " has parameter below 2"});
            continue;
        }
        auto have = g.incident_weights(i), want = iso.weights();
        if (have != want) {
            std::string h, w;
            for (int x : have) h += (h.empty() ? "" : ",") + std::to_string(x);
            for (int x : want) w += (w.empty() ? "" : ",") + std::to_string(x);
            out.push_back({where, iso.name() + " expects incident weights {" + w + "} but has {" + h + "}"});
        }
    }
    auto have = g.incident_weights(cusp), want = cone_orders(g.cusp_type);
    std::sort(want.begin(), want.end());
    if (have != want) {
        std::string h, w;
        for (int x : have) h += (h.empty() ? "" : ",") + std::to_string(x);
        for (int x : want) w += (w.empty() ? "" : ",") + std::to_string(x);
        out.push_back({"cusp", to_string(g.cusp_type) + " expects incident weights {" + w + "} but has {" + h + "}"});
    }
    return out;
}

inline IsotropyGraph parse_graph(const nlohmann::json& j)
{
    IsotropyGraph g;
    try {
        g.cusp_type = parse_cusp_type(j.at("cusp").get<std::string>());
        const auto& verts = j.at("vertices");
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& v = verts[i];
            std::string type = v.at("type").get<std::string>();
            std::string where = "vertices[" + std::to_string(i) + "]";
            if (type == "C" || type == "D") {
                int n = v.at("n").get<int>();
                if (n < 2) throw ParseError(where + ": parameter n must be at least 2");
                g.vertices.push_back(type == "C" ? Isotropy::cyclic(n) : Isotropy::dihedral(n));
            }
            else if (type == "A4") g.vertices.push_back(Isotropy::a4());
            else if (type == "S4") g.vertices.push_back(Isotropy::s4());
            else if (type == "A5") g.vertices.push_back(Isotropy::a5());
            else throw ParseError(where + ": unknown vertex type '" + type + "'");
        }
        const int nv = static_cast<int>(g.vertices.size());
        const auto& edges = j.at("edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            std::string where = "edges[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 3) throw ParseError(where + ": expected [endpoint, endpoint, weight]");
            auto endpoint = [&](const nlohmann::json& x) {
                if (x.is_string()) {
                    if (x.get<std::string>() != "cusp") throw ParseError(where + ": unknown endpoint '" + x.get<std::string>() + "'");
                    return cusp;
                }
                int k = x.get<int>();
                if (k < 0 || k >= nv) throw ParseError(where + ": endpoint index " + std::to_string(k) + " out of range");
                return k;
            };
            int w = e[2].get<int>();
            if (w < 2) throw ParseError(where + ": weight " + std::to_string(w) + " is below 2");
            g.edges.push_back({endpoint(e[0]), endpoint(e[1]), w});
        }
    }
    catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed graph JSON: ") + ex.what());
    }
    return g;
}

inline nlohmann::json to_json(const IsotropyGraph& g)
{
    nlohmann::json j;
    j["cusp"] = to_string(g.cusp_type);
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json jv;
        switch (v.kind) {
        case Isotropy::Kind::Cyclic: jv = {{"type", "C"}, {"n", v.n}}; break;
        case Isotropy::Kind::Dihedral: jv = {{"type", "D"}, {"n", v.n}}; break;
        default: jv = {{"type", v.name()}}; break;
        }
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    auto end = [](int x) { return x == cusp ? nlohmann::json("cusp") : nlohmann::json(x); };
    for (const auto& e : g.edges) j["edges"].push_back({end(e.u), end(e.v), e.weight});
    return j;
}

}  // namespace orbikit
