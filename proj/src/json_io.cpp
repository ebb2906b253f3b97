#include "skewcc/json_io.hpp"

namespace skewcc {

namespace {

std::vector<std::uint32_t> uint_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<std::uint32_t> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_unsigned())
            throw std::invalid_argument(std::string(what) + " entries must be nonnegative integers");
        out.push_back(e.get<std::uint32_t>());
    }
    return out;
}

}  // namespace

FieldSpec field_spec_from_json(const json& j) {
    FieldSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.s = j.value("s", 1u);
    if (j.contains("modulus")) spec.modulus = uint_array(j.at("modulus"), "modulus");
    return spec;
}

json field_spec_to_json(const FieldSpec& spec) {
    return {{"p", spec.p}, {"s", spec.s}, {"modulus", spec.modulus}};
}

Ring ring_from_json(const json& j) {
    RingSpec spec;
    spec.field = field_spec_from_json(j.at("field"));
    spec.f_roots = uint_array(j.at("f_roots"), "f_roots");
    spec.g_roots = uint_array(j.at("g_roots"), "g_roots");
    return Ring(spec);
}

json ring_to_json(const Ring& ring) {
    return {{"field", field_spec_to_json(ring.field().spec())},
            {"f_roots", ring.spec().f_roots},
            {"g_roots", ring.spec().g_roots}};
}

Autom autom_from_json(const json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "id") return Autom::id();
        if (name == "psi") return Autom::make_psi();
        throw std::invalid_argument("automorphism must be \"id\", \"psi\" or {\"theta\": t}");
    }
    if (j.is_object() && j.contains("theta"))
        return Autom::make_theta(j.at("theta").get<std::uint32_t>());
    throw std::invalid_argument("automorphism must be \"id\", \"psi\" or {\"theta\": t}");
}

json autom_to_json(const Autom& a) {
    switch (a.kind) {
        case Autom::Kind::identity: return "id";
        case Autom::Kind::psi: return "psi";
        case Autom::Kind::theta: return {{"theta", a.t}};
    }
    return "id";
}

RingElement ring_element_from_json(const Ring& ring, const json& j) {
    if (j.is_number_unsigned()) {
        std::uint32_t ix = j.get<std::uint32_t>();
        if (ix >= ring.field().size())
            throw std::invalid_argument("element value exceeds the field size");
        return ring.constant(ring.field().element(ix));
    }
    std::vector<std::uint32_t> crt = uint_array(j, "ring element");
    if (crt.size() != ring.comps())
        throw std::invalid_argument("ring element needs one entry per CRT coordinate");
    return ring.element(std::move(crt));
}

json ring_element_to_json(const RingElement& e) { return e.crt(); }

SkewPoly skew_poly_from_json(const Ring& ring, const json& j) {
    Autom autom = autom_from_json(j.at("autom"));
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
    std::vector<RingElement> out;
    out.reserve(coeffs.size());
    for (const json& c : coeffs) out.push_back(ring_element_from_json(ring, c));
    return SkewPoly(autom, std::move(out));
}

json skew_poly_to_json(const SkewPoly& f) {
    json coeffs = json::array();
    for (const RingElement& c : f.coeffs()) coeffs.push_back(ring_element_to_json(c));
    return {{"autom", autom_to_json(f.autom())}, {"coeffs", coeffs}};
}

FieldPoly field_poly_from_json(const Field& field, Autom autom, const json& j) {
    std::vector<std::uint32_t> raw = uint_array(j, "polynomial");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(raw.size());
    for (std::uint32_t ix : raw) {
        if (ix >= field.size())
            throw std::invalid_argument("coefficient value exceeds the field size");
        coeffs.push_back(field.element(ix));
    }
    return FieldPoly(autom, std::move(coeffs));
}

json field_poly_to_json(const FieldPoly& f) {
    json out = json::array();
    for (const FieldElement& c : f.coeffs()) out.push_back(c.index());
    return out;
}

CodeConfig code_config_from_json(const json& j) {
    CodeConfig cfg;
    cfg.ring = ring_from_json(j.at("ring"));
    cfg.n = j.at("n").get<std::size_t>();
    cfg.autom = j.contains("autom") ? autom_from_json(j.at("autom")) : Autom::id();
    cfg.alpha = j.contains("alpha") ? ring_element_from_json(cfg.ring, j.at("alpha"))
                                    : cfg.ring.one();

    if (j.contains("components")) {
        const json& comps = j.at("components");
        if (!comps.is_array() || comps.empty())
            throw std::invalid_argument("components must be a nonempty array");
        for (const json& c : comps) {
            std::size_t i = c.at("i").get<std::size_t>();
            std::size_t jj = c.at("j").get<std::size_t>();
            if (i < 1 || i > cfg.ring.k() || jj < 1 || jj > cfg.ring.l())
                throw std::invalid_argument("component index out of range (indices are 1-based)");
            cfg.comp_index.emplace_back(i - 1, jj - 1);
            cfg.comp_gens.push_back(field_poly_from_json(cfg.ring.field(), cfg.autom, c.at("gen")));
        }
        cfg.has_components = true;
    }
    if (j.contains("gen")) {
        const json& g = j.at("gen");
        cfg.gen = g.is_array() ? SkewPoly(cfg.autom, [&] {
            std::vector<RingElement> coeffs;
            for (const json& c : g) coeffs.push_back(ring_element_from_json(cfg.ring, c));
            return coeffs;
        }())
                               : skew_poly_from_json(cfg.ring, g);
        if (cfg.gen.autom() != cfg.autom)
            throw std::invalid_argument("generator and config disagree on the automorphism");
        cfg.has_gen = true;
    }
    if (!cfg.has_components && !cfg.has_gen)
        throw std::invalid_argument("config needs \"components\" or \"gen\"");
    return cfg;
}

Code code_from_json(const json& j) {
    CodeConfig cfg = code_config_from_json(j);
    if (cfg.has_components) {
        std::size_t m = cfg.ring.comps();
        std::vector<FieldPoly> gens(m, FieldPoly::zero(cfg.autom));
        std::vector<bool> seen(m, false);
        for (std::size_t e = 0; e < cfg.comp_index.size(); ++e) {
            auto [i, jj] = cfg.comp_index[e];
            std::size_t c = i * cfg.ring.l() + jj;
            if (seen[c])
                throw std::invalid_argument("component (" + std::to_string(i + 1) + "," +
                                            std::to_string(jj + 1) + ") listed twice");
            seen[c] = true;
            gens[c] = cfg.comp_gens[e];
        }
        for (std::size_t c = 0; c < m; ++c)
            if (!seen[c])
                throw std::invalid_argument("component (" + std::to_string(c / cfg.ring.l() + 1) +
                                            "," + std::to_string(c % cfg.ring.l() + 1) +
                                            ") missing");
        std::vector<FieldElement> alphas;
        alphas.reserve(m);
        for (std::size_t c = 0; c < m; ++c) alphas.push_back(cfg.alpha.comp(c));
        return Code::from_components(cfg.ring, cfg.n, cfg.autom, std::move(alphas),
                                     std::move(gens));
    }
    return Code::from_generator(cfg.ring, cfg.n, cfg.autom, cfg.alpha, cfg.gen);
}

json classification_to_json(const ShiftClass& c) {
    const char* kind = "";
    switch (c.kind) {
        case ShiftClass::Kind::cyclic: kind = "cyclic"; break;
        case ShiftClass::Kind::constacyclic: kind = "constacyclic"; break;
        case ShiftClass::Kind::quasi_cyclic: kind = "quasi-cyclic"; break;
        case ShiftClass::Kind::quasi_twisted: kind = "quasi-twisted"; break;
    }
    return {{"kind", kind}, {"index", c.index}};
}

json code_report(const Code& code) {
    json comps = json::array();
    for (const ComponentCode& cc : code.components()) {
        comps.push_back({{"i", cc.i + 1},
                         {"j", cc.j + 1},
                         {"alpha", cc.alpha.index()},
                         {"gen", field_poly_to_json(cc.gen)},
                         {"gen_pretty", poly_to_string(cc.gen)},
                         {"dim", cc.dim}});
    }
    auto [q, e] = code.size();
    return {{"ring", ring_to_json(code.ring())},
            {"n", code.length()},
            {"autom", autom_to_json(code.autom())},
            {"alpha", ring_element_to_json(code.alpha())},
            {"alpha_pretty", to_pretty(code.alpha())},
            {"gen", skew_poly_to_json(code.gen())},
            {"gen_pretty", poly_to_string(code.gen())},
            {"components", comps},
            {"size", {{"q", q}, {"exponent", e}}},
            {"classification", classification_to_json(code.classify())}};
}

}  // namespace skewcc
