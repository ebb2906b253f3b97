// Python extension: the same constructions and checks as the command line
// tool, with JSON strings crossing the boundary. The skewcc package wraps
// every call so Python callers see plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewcc/codes.hpp"
#include "skewcc/errors.hpp"
#include "skewcc/examples.hpp"
#include "skewcc/gf.hpp"
#include "skewcc/gray.hpp"
#include "skewcc/json_io.hpp"
#include "skewcc/oracle.hpp"
#include "skewcc/oracle_bridge.hpp"

namespace py = pybind11;

namespace {

using skewcc::json;

skewcc::Code code_from_text(const std::string& cfg) {
    return skewcc::code_from_json(json::parse(cfg));
}

std::string build_report(const std::string& cfg) {
    return skewcc::code_report(code_from_text(cfg)).dump();
}

std::string dual_report(const std::string& cfg) {
    return skewcc::code_report(code_from_text(cfg).dual()).dump();
}

std::string idempotent_report(const std::string& cfg) {
    skewcc::Code code = code_from_text(cfg);
    skewcc::SkewPoly e = code.idempotent_generator();
    json rep{{"n", code.length()},
             {"autom", skewcc::autom_to_json(code.autom())},
             {"alpha", skewcc::ring_element_to_json(code.alpha())},
             {"idempotent", skewcc::skew_poly_to_json(e)},
             {"idempotent_pretty", skewcc::poly_to_string(e)}};
    return rep.dump();
}

std::string gray_report(const std::string& cfg, std::uint64_t seed) {
    skewcc::Code code = code_from_text(cfg);
    std::mt19937_64 rng(seed);
    skewcc::GrayParams gp = skewcc::gray_image_params(code, rng);
    json rep{{"n", gp.n}, {"k_dim", gp.k_dim}, {"d", gp.d ? json(*gp.d) : json()}};
    return rep.dump();
}

std::string component_distance_report(const std::string& cfg) {
    skewcc::Code code = code_from_text(cfg);
    std::vector<std::optional<std::size_t>> dists = skewcc::component_hamming_distances(code);
    const std::vector<skewcc::ComponentCode>& comps = code.components();
    json table = json::array();
    std::optional<std::size_t> best;
    for (std::size_t idx = 0; idx < comps.size(); ++idx) {
        table.push_back({{"i", comps[idx].i + 1},
                         {"j", comps[idx].j + 1},
                         {"d", dists[idx] ? json(*dists[idx]) : json()}});
        if (dists[idx] && (!best || *dists[idx] < *best)) best = *dists[idx];
    }
    json rep{{"per_component", std::move(table)}, {"d", best ? json(*best) : json()}};
    return rep.dump();
}

std::string classify_report(const std::string& cfg) {
    skewcc::Code code = code_from_text(cfg);
    auto [q, e] = code.size();
    json rep{{"n", code.length()},
             {"classification", skewcc::classification_to_json(code.classify())},
             {"size", {{"q", q}, {"exponent", e}}}};
    return rep.dump();
}

std::string verify_generator_report(const std::string& cfg) {
    skewcc::CodeConfig cc = skewcc::code_config_from_json(json::parse(cfg));
    if (!cc.has_gen)
        throw std::invalid_argument("verify_generator needs a ring-level \"gen\"");
    if (cc.gen.is_zero()) throw std::invalid_argument("generator must be nonzero");
    if (!cc.gen.leading().is_unit())
        throw std::domain_error("generator needs a unit leading coefficient for division");

    skewcc::SkewPoly modulus = skewcc::x_pow_minus(cc.ring, cc.autom, cc.n, cc.alpha);
    skewcc::SkewPoly rem = skewcc::right_divrem(modulus, cc.gen).second;
    json rep{{"divides", rem.is_zero()}};
    if (!rem.is_zero()) {
        rep["remainder"] = skewcc::skew_poly_to_json(rem);
        rep["remainder_pretty"] = skewcc::poly_to_string(rem);
    } else {
        skewcc::Code code =
            skewcc::Code::from_generator(cc.ring, cc.n, cc.autom, cc.alpha, cc.gen);
        auto [q, e] = code.size();
        rep["gen_pretty"] = skewcc::poly_to_string(cc.gen);
        rep["size"] = {{"q", q}, {"exponent", e}};
        rep["classification"] = skewcc::classification_to_json(code.classify());
    }
    return rep.dump();
}

std::string examples_report_text(std::uint64_t seed) {
    return skewcc::examples_report(skewcc::run_all_examples(seed)).dump();
}

std::string bundled_config_text(const std::string& id) {
    return skewcc::bundled_config(id).dump();
}

std::uint64_t enumerated_size(const std::string& cfg) {
    return skewcc::enumerate_code_words(code_from_text(cfg)).size();
}

bool dual_matches(const std::string& cfg) {
    skewcc::Code code = code_from_text(cfg);
    skewcc::oracle::CodewordSet cw = skewcc::enumerate_code_words(code);
    skewcc::oracle::CodewordSet dw = skewcc::enumerate_code_words(code.dual());
    skewcc::oracle::CodewordSet bd =
        skewcc::oracle::brute_dual(cw, skewcc::oracle::InnerProduct::blocked);
    return dw.size() == bd.size() && dw.same_span(bd);
}

}  // namespace

PYBIND11_MODULE(_skewcc, m) {
    m.doc() =
        "constructions and checks for skew constacyclic codes over "
        "F_q[u,v]/(f(u), g(v), uv-vu); every config and report is a JSON string";

    py::register_exception<skewcc::enumeration_limit_error>(m, "EnumerationLimitError");
    py::register_exception<skewcc::verification_error>(m, "VerificationError");

    m.def("build", &build_report, py::arg("config"),
          "build a code from a JSON config and report ring, generator, "
          "components, size and classification");
    m.def("dual", &dual_report, py::arg("config"), "report of the dual code");
    m.def("idempotent", &idempotent_report, py::arg("config"),
          "idempotent generator of the code");
    m.def("gray", &gray_report, py::arg("config"), py::arg("seed") = 12345,
          "length, dimension and minimum distance of the Gray image");
    m.def("component_distances", &component_distance_report, py::arg("config"),
          "exhaustive per-component minimum Hamming distances");
    m.def("classify", &classify_report, py::arg("config"),
          "shift class and cardinality of the code");
    m.def("verify_generator", &verify_generator_report, py::arg("config"),
          "divide x^n - alpha by the configured ring-level generator");
    m.def("examples", &examples_report_text, py::arg("seed") = 12345,
          "replay the bundled worked examples");
    m.def("bundled_ids", &skewcc::bundled_config_ids,
          "ids of the bundled configurations");
    m.def("bundled_config", &bundled_config_text, py::arg("id"),
          "configuration JSON for one bundled id");
    m.def("enumerated_size", &enumerated_size, py::arg("config"),
          "exact codeword count by enumeration (capped at 2^20)");
    m.def("dual_matches", &dual_matches, py::arg("config"),
          "compare the dual construction against the brute-force dual");
    m.def("smallest_irreducible", &skewcc::smallest_irreducible, py::arg("p"),
          py::arg("s"),
          "ascending coefficients of the default modulus for F_(p^s)");

    m.attr("__version__") = "0.1.0";
}
