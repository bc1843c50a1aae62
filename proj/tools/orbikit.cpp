#include <CLI11.hpp>
#include <json.hpp>

#include <orbikit/cuspgeom.hpp>
#include <orbikit/cuspkill.hpp>
#include <orbikit/groupio.hpp>
#include <orbikit/grouppres.hpp>
#include <orbikit/horoball.hpp>
#include <orbikit/isograph.hpp>
#include <orbikit/so3geom.hpp>
#include <orbikit/verify.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace orbikit;

namespace {

constexpr int exit_invalid = 2;

nlohmann::json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

int run_cuspkill(const std::string& path, const std::string& trace_path, std::optional<std::uint64_t> seed)
{
    auto g = parse_graph(read_json(path));
    auto trace = cusp_kill(g, {seed, !trace_path.empty()});
    if (!trace_path.empty()) write_file(trace_path, trace.to_json().dump(2) + "\n");
    std::cout << to_string(trace.verdict) << "\n";
    if (trace.verdict == Verdict::NonTrivial) std::cout << trace.residual.to_json().dump() << "\n";
    return trace.verdict == Verdict::Trivial ? 0 : 1;
}

int run_abelianize(const std::string& path)
{
    auto g = parse_graph(read_json(path));
    std::cout << abelianization(g).to_string() << "\n";
    return 0;
}

int run_angles(int a, int b, int c)
{
    auto x = axis_angles(a, b, c);
    const double deg = 180 / std::numbers::pi;
    std::cout << "alpha " << format_fixed(x.alpha, 15) << " rad  " << format_fixed(x.alpha * deg, 10) << " deg\n";
    std::cout << "beta  " << format_fixed(x.beta, 15) << " rad  " << format_fixed(x.beta * deg, 10) << " deg\n";
    std::cout << "gamma " << format_fixed(x.gamma, 15) << " rad  " << format_fixed(x.gamma * deg, 10) << " deg\n";
    return 0;
}

template <unsigned Bits>
int run_slopes(const std::string& lat_text, const std::string& c_text, const std::string& bound_text)
{
    auto parts = split(lat_text, ';');
    if (parts.size() != 2) throw ParseError("--lat expects \"re1,im1;re2,im2\"");
    auto gen = [](const std::string& s) {
        auto xy = split(s, ',');
        if (xy.size() != 2) throw ParseError("lattice generator '" + s + "' must be re,im");
        return Complex<Bits>(parse_real<Bits>(xy[0]), parse_real<Bits>(xy[1]));
    };
    PeripheralLattice<Bits> lat(gen(parts[0]), gen(parts[1]), 1, parse_real<Bits>(c_text));
    auto slopes = exceptional_slope_candidates(lat, parse_real<Bits>(bound_text));
    std::cout << slopes.size() << " slopes\n";
    for (const auto& s : slopes) std::cout << "(" << s.m << ", " << s.n << ")  length " << format_fixed(s.length, 15) << "\n";
    return 0;
}

int run_classify(const std::string& cusp_text, const std::string& volume_text)
{
    auto t = parse_cusp_type(cusp_text);
    double v = static_cast<double>(parse_real<default_bits>(volume_text));
    auto cls = classify_rigid_cusp_volume(t, v);
    std::cout << to_string(cls.kind);
    if (!cls.entry.empty()) std::cout << " " << cls.entry;
    if (!cls.orbifold_volume.empty()) std::cout << " (orbifold volume " << cls.orbifold_volume << ")";
    std::cout << "\n";
    return 0;
}

int run_degree(const std::string& cusp_text, const std::string& scenario, bool has_4_loop, bool no_dihedral_6)
{
    CoverScenario sc;
    if (scenario == "manifold" || scenario == "manifold_cover") sc = CoverScenario::manifold_cover;
    else if (scenario == "orbilens" || scenario == "orbilens_cover") sc = CoverScenario::orbilens_cover;
    else throw ParseError("unknown scenario '" + scenario + "'");
    auto d = min_cover_degree(parse_cusp_type(cusp_text), sc, {has_4_loop, !no_dihedral_6});
    std::cout << d.to_string() << "\n" << d.rationale << "\n";
    return 0;
}

template <unsigned Bits>
int run_horoballs(const std::string& path, int depth, double min_diam, const std::string& svg_path, const std::string& window_text)
{
    auto group = parse_group<Bits>(read_json(path));
    OrbitOptions opts;
    opts.depth = depth;
    opts.min_diameter = min_diam;
    if (!window_text.empty()) {
        auto w = split(window_text, ',');
        if (w.size() != 4) throw ParseError("--window expects x0,y0,x1,y1");
        opts.window = Window{std::stod(w[0]), std::stod(w[1]), std::stod(w[2]), std::stod(w[3])};
    }
    auto d = orbit_horoballs(group, opts);
    for (const auto& b : d.balls)
        std::cout << "ball   " << format_complex(b.center, 12) << "  diameter " << format_fixed(b.diameter, 12) << "  " << b.word << "\n";
    for (const auto& s : d.isometric_spheres)
        std::cout << "sphere " << format_complex(s.center, 12) << "  radius   " << format_fixed(s.radius, 12) << "  " << s.word << "\n";
    for (const auto& w : d.warnings) std::cerr << "warning: non-discrete suspicion: " << w.message << " (" << w.first << ", " << w.second << ")\n";
    if (!svg_path.empty()) write_file(svg_path, render_svg(d));
    return 0;
}

template <unsigned Bits>
int run_verify(const std::string& which, bool all, const std::string& json_path)
{
    std::vector<VerificationReport> reports;
    if (all) reports = verify_all<Bits>();
    else if (which == "lemma51") reports.push_back(verify_lemma51<Bits>());
    else if (which == "lemma53") reports.push_back(verify_lemma53<Bits>());
    else if (which == "thm2") reports.push_back(verify_thm2<Bits>());
    else throw ParseError("unknown case '" + which + "'");
    bool ok = true;
    nlohmann::ordered_json j;
    j["precision"] = Bits;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        std::cout << r.to_text();
        ok = ok && r.pass();
        j["reports"].push_back(r.to_json());
    }
    j["pass"] = ok;
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

template <class F128, class F256>
int with_precision(int bits, F128 f128, F256 f256)
{
    if (bits == 128) return f128();
    if (bits == 256) return f256();
    throw ParseError("--precision must be 128 or 256");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"orbikit: computations for cusped hyperbolic 3-orbifolds"};
    app.require_subcommand(1);
    int precision = 128;
    app.add_option("--precision", precision, "working precision in bits (128 or 256)")->check(CLI::IsMember({128, 256}));

    auto* ck = app.add_subcommand("cuspkill", "apply the cusp-killing rewriting to an isotropy graph");
    std::string ck_graph, ck_trace;
    std::optional<std::uint64_t> ck_seed;
    ck->add_option("graph", ck_graph, "isotropy graph JSON")->required();
    ck->add_option("--trace", ck_trace, "write the rewrite trace as JSON");
    ck->add_option("--seed", ck_seed, "random rule order seed");

    auto* ab = app.add_subcommand("abelianize", "invariant factors of the abelianized orbifold group");
    std::string ab_graph;
    ab->add_option("graph", ab_graph, "isotropy graph JSON")->required();

    auto* an = app.add_subcommand("angles", "angles between rotation axes of a finite SO(3) subgroup");
    int an_a = 0, an_b = 0, an_c = 0;
    an->add_option("a", an_a)->required();
    an->add_option("b", an_b)->required();
    an->add_option("c", an_c)->required();

    auto* sl = app.add_subcommand("slopes", "primitive slopes of translation length at most a bound");
    std::string sl_lat, sl_c = "1", sl_bound = "6";
    sl->add_option("--lat", sl_lat, "lattice generators \"re1,im1;re2,im2\"")->required();
    sl->add_option("--c", sl_c, "reciprocal height of the maximal horoball");
    sl->add_option("--bound", sl_bound, "length bound");

    auto* cl = app.add_subcommand("classify", "classify a maximal rigid cusp volume");
    std::string cl_cusp, cl_volume;
    cl->add_option("--cusp", cl_cusp, "244, 236 or 333")->required();
    cl->add_option("--volume", cl_volume, "cusp volume, e.g. sqrt(21)/24")->required();

    auto* dg = app.add_subcommand("degree", "covering degree constraint");
    std::string dg_cusp, dg_scenario;
    bool dg_loop = false, dg_no_d6 = false;
    dg->add_option("--cusp", dg_cusp)->required();
    dg->add_option("--scenario", dg_scenario, "manifold or orbilens")->required();
    dg->add_flag("--has-4-loop", dg_loop);
    dg->add_flag("--no-dihedral-6", dg_no_d6);

    auto* hb = app.add_subcommand("horoballs", "horoball diagram from a group");
    std::string hb_group, hb_svg, hb_window;
    int hb_depth = 4;
    double hb_min = 0.1;
    hb->add_option("group", hb_group, "group JSON")->required();
    hb->add_option("--depth", hb_depth);
    hb->add_option("--min-diam", hb_min);
    hb->add_option("--svg", hb_svg);
    hb->add_option("--window", hb_window, "x0,y0,x1,y1");

    auto* vf = app.add_subcommand("verify", "run the scripted verification cases");
    std::string vf_case, vf_json;
    bool vf_all = false;
    auto* vf_case_opt = vf->add_option("--case", vf_case, "lemma51, lemma53 or thm2");
    auto* vf_all_opt = vf->add_flag("--all", vf_all);
    vf_case_opt->excludes(vf_all_opt);
    vf->add_option("--json", vf_json, "write the reports as JSON");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_invalid;
    }

    try {
        if (ck->parsed()) return run_cuspkill(ck_graph, ck_trace, ck_seed);
        if (ab->parsed()) return run_abelianize(ab_graph);
        if (an->parsed()) return run_angles(an_a, an_b, an_c);
        if (sl->parsed())
            return with_precision(precision, [&] { return run_slopes<128>(sl_lat, sl_c, sl_bound); },
                                  [&] { return run_slopes<256>(sl_lat, sl_c, sl_bound); });
        if (cl->parsed()) return run_classify(cl_cusp, cl_volume);
        if (dg->parsed()) return run_degree(dg_cusp, dg_scenario, dg_loop, dg_no_d6);
        if (hb->parsed())
            return with_precision(precision, [&] { return run_horoballs<128>(hb_group, hb_depth, hb_min, hb_svg, hb_window); },
                                  [&] { return run_horoballs<256>(hb_group, hb_depth, hb_min, hb_svg, hb_window); });
        if (vf->parsed()) {
            if (!vf_all && vf_case.empty()) throw ParseError("verify needs --case or --all");
            return with_precision(precision, [&] { return run_verify<128>(vf_case, vf_all, vf_json); },
                                  [&] { return run_verify<256>(vf_case, vf_all, vf_json); });
        }
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
