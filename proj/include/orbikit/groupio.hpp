#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "algnum.hpp"
#include "groups.hpp"
#include "moebius.hpp"

namespace orbikit {

namespace detail {

template <unsigned Bits>
Complex<Bits> parse_complex_json(const nlohmann::json& j)
{
    auto part = [](const nlohmann::json& x) { return x.is_string() ? parse_real<Bits>(x.get<std::string>()) : Real<Bits>(x.get<double>()); };
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("complex number must be [re, im]");
        return Complex<Bits>(part(j[0]), part(j[1]));
    }
    return Complex<Bits>(part(j));
}

inline Rational parse_rational(const nlohmann::json& x)
{
    if (x.is_number_integer()) return Rational(x.get<long long>());
    std::string s = x.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace detail

// Exact matrix: {"field": {"minpoly": [c0, c1, ...], "root": [re, im]}, "matrix": [[coeffs] x 4]}.
inline Moebius<AlgNum> parse_exact_moebius(const nlohmann::json& j)
{
    try {
        const auto& f = j.at("field");
        std::vector<Rational> mp;
        for (const auto& c : f.at("minpoly")) mp.push_back(detail::parse_rational(c));
        auto root = f.at("root");
        auto field = NumberField::create(RationalPoly(mp), root.at(0).get<double>(), root.at(1).get<double>());
        std::vector<AlgNum> e;
        for (const auto& entry : j.at("matrix")) {
            std::vector<Rational> c;
            for (const auto& x : entry) c.push_back(detail::parse_rational(x));
            e.emplace_back(field, c);
        }
        if (e.size() != 4) throw ParseError("matrix must have four entries");
        return Moebius<AlgNum>(e[0], e[1], e[2], e[3]);
    }
    catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed exact matrix: ") + ex.what());
    }
}

// Numeric matrix: {"matrix": [a, b, c, d]} with each entry [re, im] as expression strings, or an exact matrix.
template <unsigned Bits>
Moebius<Complex<Bits>> parse_moebius(const nlohmann::json& j)
{
    if (j.contains("field")) return parse_exact_moebius(j).template to_numeric<Bits>();
    try {
        const auto& m = j.at("matrix");
        if (m.size() != 4) throw ParseError("matrix must have four entries");
        return Moebius<Complex<Bits>>(detail::parse_complex_json<Bits>(m[0]), detail::parse_complex_json<Bits>(m[1]),
                                      detail::parse_complex_json<Bits>(m[2]), detail::parse_complex_json<Bits>(m[3]));
    }
    catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed matrix: ") + ex.what());
    }
}

// Either {"named": "sqrt21" | "tetrahedral_case1" | "tetrahedral_case2"} or explicit generators and lattice.
template <unsigned Bits>
NamedGroup<Bits> parse_group(const nlohmann::json& j)
{
    if (j.contains("named")) {
        std::string n = j.at("named").get<std::string>();
        if (n == "sqrt21") return sqrt21_group<Bits>();
        if (n == "tetrahedral_case1") return tetrahedral_case1_group<Bits>(j.contains("theta") ? parse_real<Bits>(j.at("theta").get<std::string>()) : Real<Bits>(0));
        if (n == "tetrahedral_case2") return tetrahedral_case2_group<Bits>();
        throw ParseError("unknown named group '" + n + "'");
    }
    try {
        std::vector<NamedGenerator<Bits>> gens;
        for (const auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), parse_moebius<Bits>(g)});
        const auto& l = j.at("lattice");
        Real<Bits> c = l.contains("c") ? detail::parse_complex_json<Bits>(l.at("c")).real() : Real<Bits>(1);
        PeripheralLattice<Bits> lat(detail::parse_complex_json<Bits>(l.at("gen1")), detail::parse_complex_json<Bits>(l.at("gen2")),
                                    l.value("rotation_order", 1), c);
        std::vector<NamedPoint<Bits>> pts;
        if (j.contains("points"))
            for (const auto& p : j.at("points")) pts.push_back({p.at("name").get<std::string>(), detail::parse_complex_json<Bits>(p.at("z"))});
        return {j.value("name", std::string("group")), std::move(gens), std::move(lat), std::move(pts)};
    }
    catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed group JSON: ") + ex.what());
    }
}

}  // namespace orbikit
