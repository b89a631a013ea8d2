#include "csurg/json_io.hpp"

#include <fstream>

namespace csurg::io {

front::LegendrianFront front_from_json(const json& j) {
    if (!j.contains("events") || !j["events"].is_array())
        throw SchemaError("front: missing events array");
    std::vector<front::FrontEvent> ev;
    for (const auto& e : j["events"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
            throw SchemaError("front: events are [\"lcusp\"|\"rcusp\"|\"cross\", i]");
        std::string k = e[0].get<std::string>();
        int pos = e[1].get<int>();
        if (k == "lcusp") ev.push_back(front::lcusp(pos));
        else if (k == "rcusp") ev.push_back(front::rcusp(pos));
        else if (k == "cross") ev.push_back(front::cross(pos));
        else throw SchemaError("front: unknown event kind " + k);
    }
    std::vector<int> orient;
    if (j.contains("orientation")) {
        for (const auto& o : j["orientation"]) {
            int v = o.get<int>();
            if (v != 1 && v != -1) throw SchemaError("front: orientation entries are +-1");
            orient.push_back(v);
        }
    }
    return front::validate_front(ev, orient);
}

json front_to_json(const front::LegendrianFront& f) {
    json ev = json::array();
    for (const auto& e : f.events()) {
        const char* k = e.kind == front::EventKind::LeftCusp    ? "lcusp"
                        : e.kind == front::EventKind::RightCusp ? "rcusp"
                                                                : "cross";
        ev.push_back(json::array({k, e.pos}));
    }
    return json{{"events", ev}, {"orientation", f.orientation()}};
}

pd::PDCode pd_from_json(const json& j) {
    pd::PDCode p;
    if (!j.contains("crossings") || !j["crossings"].is_array())
        throw SchemaError("pd: missing crossings array");
    for (const auto& c : j["crossings"]) {
        if (!c.is_array() || c.size() != 4) throw SchemaError("pd: crossings are 4-tuples");
        p.crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(), c[3].get<int>()});
    }
    if (j.contains("unknots")) p.unknots = j["unknots"].get<int>();
    return p;
}

json pd_to_json(const pd::PDCode& p) {
    json cr = json::array();
    for (const auto& c : p.crossings) cr.push_back(json::array({c[0], c[1], c[2], c[3]}));
    json out{{"crossings", cr}};
    if (p.unknots > 0) out["unknots"] = p.unknots;
    return out;
}

surgery::SurgeryDiagram diagram_from_json(const json& j) {
    if (!j.contains("components") || !j.contains("linking"))
        throw SchemaError("diagram: needs components and linking");
    std::vector<surgery::SurgeryComponent> comps;
    for (const auto& c : j["components"]) {
        Rat coeff = parse_rat(c.at("coeff").get<std::string>());
        if (c.contains("front")) {
            auto f = front_from_json(c["front"]);
            comps.push_back(surgery::SurgeryComponent::from_front(std::move(f), coeff));
            if (c.contains("tb") && comps.back().tb != c["tb"].get<long long>())
                throw SchemaError("diagram: tb disagrees with the component front");
            if (c.contains("rot") &&
                std::llabs(comps.back().rot_signed) != std::llabs(c["rot"].get<long long>()))
                throw SchemaError("diagram: rot disagrees with the component front");
        } else {
            std::string tag = "";
            if (c.contains("abstract") && c["abstract"].contains("tag"))
                tag = c["abstract"]["tag"].get<std::string>();
            comps.push_back(surgery::SurgeryComponent::abstract(
                tag, c.at("tb").get<long long>(), c.at("rot").get<long long>(), coeff));
        }
    }
    const auto& lk = j["linking"];
    int n = int(comps.size());
    if (int(lk.size()) != n) throw SchemaError("diagram: linking matrix size mismatch");
    IMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (int(lk[i].size()) != n) throw SchemaError("diagram: linking matrix not square");
        for (int k = 0; k < n; ++k) m.at(i, k) = int_of(lk[i][k].get<long long>());
    }
    return surgery::SurgeryDiagram(std::move(comps), std::move(m));
}

json diagram_to_json(const surgery::SurgeryDiagram& d) {
    json comps = json::array();
    for (int i = 0; i < d.size(); ++i) {
        const auto& c = d.component(i);
        json jc{{"tb", c.tb}, {"rot", c.rot_signed}, {"coeff", rat_str(c.coeff)}};
        if (c.geometry) jc["front"] = front_to_json(*c.geometry);
        else jc["abstract"] = json{{"tag", c.tag}};
        comps.push_back(std::move(jc));
    }
    json lk = json::array();
    for (int i = 0; i < d.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < d.size(); ++k) row.push_back(d.linking(i, k).get_si());
        lk.push_back(std::move(row));
    }
    return json{{"components", comps}, {"linking", lk}};
}

std::vector<kirby::Move> moves_from_json(const json& j) {
    if (!j.contains("moves")) throw SchemaError("script: missing moves");
    std::vector<kirby::Move> out;
    for (const auto& m : j["moves"]) {
        if (!m.is_array() || m.empty()) throw SchemaError("script: moves are arrays");
        std::string kind = m[0].get<std::string>();
        kirby::Move mv;
        if (kind == "cancel") {
            mv.kind = kirby::Move::Kind::Cancel;
            mv.i = m.at(1).get<int>();
            mv.j = m.at(2).get<int>();
        } else if (kind == "slide") {
            mv.kind = kirby::Move::Kind::Slide;
            mv.i = m.at(1).get<int>();
            mv.j = m.at(2).get<int>();
            mv.eps = m.at(3).get<std::string>() == "+" ? +1 : -1;
        } else if (kind == "rolfsen") {
            mv.kind = kirby::Move::Kind::Rolfsen;
            mv.i = m.at(1).get<int>();
            for (const auto& s : m.at(2)) mv.signs.push_back(s.get<std::string>() == "+" ? +1 : -1);
        } else if (kind == "introduce") {
            mv.kind = kirby::Move::Kind::Introduce;
            const auto& sp = m.at(1);
            kirby::CancellingPairSpec spec;
            spec.knot = surgery::SurgeryComponent::abstract(
                sp.value("tag", std::string("pair")), sp.at("tb").get<long long>(),
                sp.at("rot").get<long long>(), parse_rat(sp.at("coeff").get<std::string>()));
            for (const auto& v : sp.at("linking")) spec.linking_row.push_back(int_of(v.get<long long>()));
            mv.spec = std::move(spec);
        } else {
            throw SchemaError("script: unknown move " + kind);
        }
        out.push_back(std::move(mv));
    }
    return out;
}

json poly_to_json(const poly::LaurentPoly& p, const std::vector<std::string>& names) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        for (size_t i = 0; i < names.size(); ++i) t[names[i]] = e[i];
        t["c"] = c.get_str();
        out.push_back(std::move(t));
    }
    return out;
}

json report_to_json(const surgery::SurgeryDiagram& d) {
    auto h = invariants::first_homology(d);
    json factors = json::array();
    for (const auto& f : h.invariant_factors) factors.push_back(f.get_str());
    json euler = json::array();
    for (const auto& e : invariants::euler_class(d)) {
        json coords = json::array();
        for (const auto& c : e.coords) coords.push_back(c.get_str());
        euler.push_back(std::move(coords));
    }
    json d3s = json::array();
    for (const auto& v : invariants::d3(d))
        d3s.push_back(v.torsion ? rat_str(v.value) : std::string("nontorsion"));
    return json{{"h1", factors}, {"euler", euler}, {"d3", d3s}};
}

json obstruction_to_json(const slopes::ObstructionReport& r) {
    json chain = json::array();
    for (const auto& s : r.chain)
        chain.push_back(json{{"step", s.name}, {"outcome", s.outcome}, {"detail", s.detail}});
    json survivors = json::array();
    for (const auto& s : r.survivors) survivors.push_back(json{{"tb", s.tb}, {"rot", s.rot}});
    const char* verdict = r.verdict == slopes::Verdict::Certified ? "characterizing_certified"
                          : r.verdict == slopes::Verdict::Survives
                              ? "candidate_survives"
                              : "out_of_method_scope";
    return json{{"query",
                 {{"class", r.class_name}, {"tb", r.tb}, {"rot", r.rot}, {"slope", rat_str(r.slope)}}},
                {"chain", chain},
                {"verdict", verdict},
                {"survivors", survivors}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

}  // namespace csurg::io
