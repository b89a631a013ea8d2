#include <CLI11.hpp>

#include <iostream>

#include "csurg/json_io.hpp"

namespace {

using namespace csurg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSurvivors = 2;
constexpr int kExitOutOfScope = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSchema = 65;
constexpr int kExitCompute = 70;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, dots));
        r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw io::SchemaError("bad range " + s);
    return r;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // table: one "key: value" line per top-level entry, stable order
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

json annulus_family_report(const kirby::AnnulusPresentation& pres, int n) {
    auto d = kirby::annulus_twist_family(pres, n);
    json r = io::report_to_json(d);
    r["n"] = n;
    auto g = surgery::generalized_linking_matrix(d);
    json topo = json::array();
    for (size_t i = 0; i < g.p.size(); ++i)
        topo.push_back(rat_str(make_rat(g.p[i], g.q[i])));
    r["topological"] = topo;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contact surgery diagram toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    std::string in_path, script_path, out_path;
    std::string range_str = "0..0", branch = "all", side = "G";
    std::string cls = "unknot", slope_str = "-1";
    long long tb = -1, rot = 0;
    int n_param = 0, grid = 30;
    long long m_param = 1;

    auto* c_inv = app.add_subcommand("invariants", "homology, euler and d3 of a diagram");
    c_inv->add_option("input", in_path)->required();

    auto* c_hom = app.add_subcommand("homology", "first homology of a diagram");
    c_hom->add_option("input", in_path)->required();

    auto* c_eul = app.add_subcommand("euler", "euler class branches of a diagram");
    c_eul->add_option("input", in_path)->required();

    auto* c_d3 = app.add_subcommand("d3", "d3 branches of a diagram");
    c_d3->add_option("input", in_path)->required();
    c_d3->add_option("--n", range_str, "annulus family range A..B when input is a family");

    auto* c_norm = app.add_subcommand("normalize", "+-1 presentations of a diagram");
    c_norm->add_option("input", in_path)->required();
    c_norm->add_option("--branch", branch, "all or a branch index");

    auto* c_replay = app.add_subcommand("replay", "apply a move script to a diagram");
    c_replay->add_option("input", in_path)->required();
    c_replay->add_option("script", script_path)->required();

    auto* c_family = app.add_subcommand("family", "built-in families");
    auto* f_ann = c_family->add_subcommand("annulus", "annulus twist family diagrams");
    f_ann->add_option("--n", range_str);
    f_ann->add_option("--passes", m_param, "intersections of the band knot with the annulus");
    auto* f_rgb = c_family->add_subcommand("rgb", "RGB link resolutions");
    f_rgb->add_option("--n", range_str);
    f_rgb->add_option("--side", side)->check(CLI::IsMember({"G", "B"}));
    auto* f_star = c_family->add_subcommand("star-n", "star moves on the annulus presentation");
    f_star->add_option("--m", m_param);

    auto* c_homfly = app.add_subcommand("homfly", "HOMFLY polynomial of a PD code");
    c_homfly->add_option("input", in_path)->required();

    auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial of a PD code");
    c_alex->add_option("input", in_path)->required();

    auto* c_check = app.add_subcommand("check-slope", "characterizing slope pipeline");
    c_check->add_option("--class", cls);
    c_check->add_option("--tb", tb)->required();
    c_check->add_option("--rot", rot)->required();
    c_check->add_option("--slope", slope_str)->required();

    auto* c_sweep = app.add_subcommand("sweep", "check-slope over a tb range");
    c_sweep->add_option("--class", cls);
    c_sweep->add_option("--tb", range_str, "tb range A..B")->required();
    c_sweep->add_option("--slope", slope_str)->required();
    c_sweep->add_option("--grid", grid);

    auto* c_front = app.add_subcommand("front", "classical invariants and PD of a front");
    c_front->add_option("input", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_inv || *c_hom || *c_eul || *c_d3) {
            json j = io::load_file(in_path);
            auto d = io::diagram_from_json(j);
            json rep = io::report_to_json(d);
            if (*c_hom) rep = json{{"h1", rep["h1"]}};
            if (*c_eul) rep = json{{"euler", rep["euler"]}};
            if (*c_d3) rep = json{{"d3", rep["d3"]}};
            emit(rep, format);
        } else if (*c_norm) {
            json j = io::load_file(in_path);
            auto d = io::diagram_from_json(j);
            auto branches = surgery::normalize(d);
            json out = json::array();
            for (size_t b = 0; b < branches.size(); ++b) {
                if (branch != "all" && std::stoul(branch) != b) continue;
                out.push_back(io::diagram_to_json(branches[b].diagram));
            }
            emit(json{{"branches", out}, {"count", branches.size()}}, format);
        } else if (*c_replay) {
            auto d = io::diagram_from_json(io::load_file(in_path));
            auto script = io::moves_from_json(io::load_file(script_path));
            auto out = kirby::replay(d, script);
            emit(json{{"diagram", io::diagram_to_json(out)}, {"report", io::report_to_json(out)}},
                 format);
        } else if (*f_ann) {
            Range r = parse_range(range_str);
            kirby::AnnulusPresentation pres;
            pres.passes = m_param == 1 ? 0 : m_param;
            json out = json::array();
            for (int n = r.lo; n <= r.hi; ++n) out.push_back(annulus_family_report(pres, n));
            emit(json{{"family", out}}, format);
        } else if (*f_rgb) {
            Range r = parse_range(range_str);
            json out = json::array();
            for (int n = r.lo; n <= r.hi; ++n) {
                auto data = kirby::RGBData::family(n);
                auto comp = kirby::rgb_resolve(data, side[0]);
                auto diag = kirby::rgb_resolved_diagram(data, side[0]);
                out.push_back(json{{"n", n},
                                   {"tb", comp.tb},
                                   {"rot", comp.rot_signed},
                                   {"report", io::report_to_json(diag)}});
            }
            emit(json{{"family", out}}, format);
        } else if (*f_star) {
            kirby::AnnulusPresentation pres;
            std::vector<int> signs(size_t(m_param), +1);
            auto d = kirby::star_n_move(pres, int(m_param), signs);
            emit(json{{"tb", d.component(0).tb}, {"report", io::report_to_json(d)}}, format);
        } else if (*c_homfly || *c_alex) {
            auto p = io::pd_from_json(io::load_file(in_path));
            if (*c_homfly) {
                auto h = poly::homfly(p);
                emit(json{{"homfly", io::poly_to_json(h, {"l", "m"})},
                          {"pretty", h.str({"l", "m"})}},
                     format);
            } else {
                auto a = poly::alexander(p);
                emit(json{{"alexander", io::poly_to_json(a, {"t2"})},
                          {"pretty", a.str({"t^1/2"})}},
                     format);
            }
        } else if (*c_check) {
            auto k = slopes::KnotClass::get(
                cls == "unknot"       ? slopes::KnotTag::Unknot
                : cls == "rh_trefoil" ? slopes::KnotTag::RHTrefoil
                : cls == "lh_trefoil" ? slopes::KnotTag::LHTrefoil
                : cls == "fig8"       ? slopes::KnotTag::Fig8
                                      : slopes::KnotTag::Custom);
            auto rep = slopes::check_characterizing(k, tb, rot, parse_rat(slope_str));
            emit(io::obstruction_to_json(rep), format);
            if (rep.verdict == slopes::Verdict::Survives) return kExitSurvivors;
            if (rep.verdict == slopes::Verdict::OutOfScope) return kExitOutOfScope;
        } else if (*c_sweep) {
            auto k = slopes::KnotClass::get(
                cls == "unknot"       ? slopes::KnotTag::Unknot
                : cls == "rh_trefoil" ? slopes::KnotTag::RHTrefoil
                : cls == "lh_trefoil" ? slopes::KnotTag::LHTrefoil
                : cls == "fig8"       ? slopes::KnotTag::Fig8
                                      : slopes::KnotTag::Custom);
            Range r = parse_range(range_str);
            Rat slope = parse_rat(slope_str);
            bool any_survivor = false;
            for (long long t = r.lo; t <= r.hi; ++t) {
                for (long long rr : k.rots_at(t)) {
                    if (rr < 0) continue;
                    auto rep = slopes::check_characterizing(k, t, rr, slope);
                    std::cout << io::obstruction_to_json(rep).dump() << "\n";
                    if (rep.verdict == slopes::Verdict::Survives) any_survivor = true;
                }
            }
            return any_survivor ? kExitSurvivors : kExitOk;
        } else if (*c_front) {
            auto f = io::front_from_json(io::load_file(in_path));
            json comps = json::array();
            for (int c = 0; c < f.component_count(); ++c) {
                auto inv = front::classical_invariants(f, c);
                comps.push_back(json{{"tb", inv.tb},
                                     {"rot", inv.rot},
                                     {"writhe", inv.writhe},
                                     {"cusps_up", inv.cusps_up},
                                     {"cusps_down", inv.cusps_down}});
            }
            emit(json{{"components", comps}, {"pd", io::pd_to_json(front::front_to_pd(f))}},
                 format);
        }
    } catch (const io::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}
