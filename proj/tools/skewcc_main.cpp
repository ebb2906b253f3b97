// Command line front end: reads one JSON configuration, runs a single
// construction or check, and reports in text or JSON.
//
// Exit codes: 0 success, 2 malformed configuration, 3 violated mathematical
// precondition, 4 enumeration above the oracle cap, 5 failed assertion.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skewcc/codes.hpp"
#include "skewcc/errors.hpp"
#include "skewcc/examples.hpp"
#include "skewcc/gray.hpp"
#include "skewcc/json_io.hpp"
#include "skewcc/oracle.hpp"
#include "skewcc/oracle_bridge.hpp"

namespace {

using skewcc::json;

json load_config(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    return json::parse(in);
}

std::string classification_line(const json& cls) {
    std::string kind = cls.at("kind").get<std::string>();
    if (kind == "quasi-cyclic" || kind == "quasi-twisted")
        return kind + " of index " + std::to_string(cls.at("index").get<std::size_t>());
    return kind;
}

std::string autom_line(const json& a) {
    if (a.is_string()) return a.get<std::string>();
    return "theta^" + std::to_string(a.at("theta").get<std::uint32_t>());
}

std::uint64_t checked_pow(std::uint64_t q, std::int64_t e, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        out *= q;
        if (out > cap) return 0;  // 0 marks "beyond cap", never a real size
    }
    return out;
}

// ---------------------------------------------------------------------- //

json cmd_verify_generator(const json& cfg) {
    skewcc::CodeConfig cc = skewcc::code_config_from_json(cfg);
    if (!cc.has_gen)
        throw std::invalid_argument("verify-generator needs a ring-level \"gen\"");
    if (cc.gen.is_zero()) throw std::invalid_argument("generator must be nonzero");

    const skewcc::Ring& ring = cc.ring;
    skewcc::SkewPoly modulus = skewcc::x_pow_minus(ring, cc.autom, cc.n, cc.alpha);
    skewcc::SkewPoly rem(cc.autom, {});
    if (cc.gen.leading().is_unit()) {
        rem = skewcc::right_divrem(modulus, cc.gen).second;
    } else if (cc.autom.is_componentwise()) {
        // Division happens per CRT component; a zero slice divides nothing,
        // so its remainder is the whole component modulus.
        std::size_t m = ring.comps();
        std::vector<skewcc::FieldPoly> rems;
        int deg = -1;
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<skewcc::FieldElement> gs, ms;
            for (const skewcc::RingElement& e : cc.gen.coeffs()) gs.push_back(e.comp(c));
            for (const skewcc::RingElement& e : modulus.coeffs()) ms.push_back(e.comp(c));
            skewcc::FieldPoly g(cc.autom, std::move(gs));
            skewcc::FieldPoly mc(cc.autom, std::move(ms));
            skewcc::FieldPoly rc = g.is_zero() ? mc : skewcc::right_divrem(mc, g).second;
            deg = std::max(deg, rc.degree());
            rems.push_back(std::move(rc));
        }
        std::vector<skewcc::RingElement> coeffs;
        for (int d = 0; d <= deg; ++d) {
            std::vector<std::uint32_t> crt(m, 0);
            for (std::size_t c = 0; c < m; ++c)
                if (d <= rems[c].degree()) crt[c] = rems[c].coeffs()[static_cast<std::size_t>(d)].index();
            coeffs.push_back(ring.element(std::move(crt)));
        }
        rem = skewcc::SkewPoly(cc.autom, std::move(coeffs));
    } else {
        throw std::domain_error(
            "a psi-twisted generator needs a unit leading coefficient for division");
    }

    json rep{{"divides", rem.is_zero()}};
    if (!rem.is_zero()) {
        rep["remainder"] = skewcc::skew_poly_to_json(rem);
        rep["remainder_pretty"] = skewcc::poly_to_string(rem);
    } else {
        skewcc::Code code =
            skewcc::Code::from_generator(ring, cc.n, cc.autom, cc.alpha, cc.gen);
        auto [q, e] = code.size();
        rep["gen_pretty"] = skewcc::poly_to_string(cc.gen);
        rep["size"] = {{"q", q}, {"exponent", e}};
        rep["classification"] = skewcc::classification_to_json(code.classify());
    }
    return rep;
}

json cmd_build(const json& cfg, bool verify) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    json rep = skewcc::code_report(code);
    if (verify) {
        skewcc::oracle::CodewordSet cs = skewcc::enumerate_code_words(code);
        auto [q, e] = code.size();
        std::uint64_t expected = checked_pow(q, e, 1u << 20);
        if (expected == 0 || cs.size() != expected)
            throw skewcc::verification_error(
                "enumerated codeword count disagrees with the size formula");
        rep["verify"] = {{"mode", "oracle"}, {"enumerated_words", cs.size()}};
    }
    return rep;
}

json cmd_decompose(const json& cfg) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    return skewcc::code_report(code);
}

json cmd_dual(const json& cfg, bool verify) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    skewcc::Code dual = code.dual();
    json rep = skewcc::code_report(dual);
    if (verify) {
        skewcc::oracle::CodewordSet cw = skewcc::enumerate_code_words(code);
        skewcc::oracle::CodewordSet dw = skewcc::enumerate_code_words(dual);
        skewcc::oracle::CodewordSet bd =
            skewcc::oracle::brute_dual(cw, skewcc::oracle::InnerProduct::blocked);
        if (!dw.same_span(bd))
            throw skewcc::verification_error("dual disagrees with the brute-force dual");
        rep["verify"] = {{"mode", "oracle"}, {"enumerated_words", dw.size()}};
    }
    return rep;
}

json cmd_idempotent(const json& cfg, bool verify) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    skewcc::SkewPoly e = code.idempotent_generator();
    json rep{{"n", code.length()},
             {"autom", skewcc::autom_to_json(code.autom())},
             {"alpha", skewcc::ring_element_to_json(code.alpha())},
             {"idempotent", skewcc::skew_poly_to_json(e)},
             {"idempotent_pretty", skewcc::poly_to_string(e)}};
    if (verify) {
        skewcc::oracle::CodewordSet a = skewcc::enumerate_code_words(code);
        skewcc::oracle::CodewordSet b = skewcc::enumerate_generated_words(code, e);
        if (!a.same_span(b))
            throw skewcc::verification_error(
                "idempotent generates a different codeword set");
        rep["verify"] = {{"mode", "oracle"}, {"enumerated_words", a.size()}};
    }
    return rep;
}

json cmd_gray(const json& cfg, bool verify, std::uint64_t seed) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    std::mt19937_64 rng(seed);
    skewcc::GrayParams gp = skewcc::gray_image_params(code, rng);
    json rep{{"n", gp.n},
             {"k_dim", gp.k_dim},
             {"d", gp.d ? json(*gp.d) : json()}};
    if (verify) {
        skewcc::oracle::CodewordSet cs = skewcc::enumerate_code_words(code);
        std::optional<std::size_t> bd =
            skewcc::oracle::brute_min_distance(cs, skewcc::oracle::Metric::gray);
        if (bd != gp.d)
            throw skewcc::verification_error(
                "gray minimum distance disagrees with full enumeration");
        rep["verify"] = {{"mode", "oracle"}, {"enumerated_words", cs.size()}};
    }
    return rep;
}

json cmd_mindist(const json& cfg, bool verify) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    std::vector<std::optional<std::size_t>> dists =
        skewcc::component_hamming_distances(code);
    const std::vector<skewcc::ComponentCode>& comps = code.components();
    json table = json::array();
    std::optional<std::size_t> best;
    for (std::size_t idx = 0; idx < comps.size(); ++idx) {
        table.push_back({{"i", comps[idx].i + 1},
                         {"j", comps[idx].j + 1},
                         {"d", dists[idx] ? json(*dists[idx]) : json()}});
        if (dists[idx] && (!best || *dists[idx] < *best)) best = *dists[idx];
    }
    json rep{{"per_component", std::move(table)},
             {"d", best ? json(*best) : json()}};
    if (verify) {
        for (std::size_t idx = 0; idx < comps.size(); ++idx) {
            skewcc::oracle::CodewordSet ws =
                skewcc::enumerate_component_words(code, comps[idx].i, comps[idx].j);
            std::optional<std::size_t> bd =
                skewcc::oracle::brute_min_distance(ws, skewcc::oracle::Metric::hamming);
            if (bd != dists[idx])
                throw skewcc::verification_error(
                    "component distance disagrees with raw enumeration");
        }
        rep["verify"] = {{"mode", "oracle"}, {"components", comps.size()}};
    }
    return rep;
}

json cmd_classify(const json& cfg, bool verify) {
    skewcc::Code code = skewcc::code_from_json(cfg);
    skewcc::ShiftClass cls = code.classify();
    auto [q, e] = code.size();
    json rep{{"n", code.length()},
             {"classification", skewcc::classification_to_json(cls)},
             {"size", {{"q", q}, {"exponent", e}}}};
    if (verify) {
        // The classification claims closure under an untwisted shift; check
        // it on the enumerated words.
        skewcc::oracle::CodewordSet cs = skewcc::enumerate_code_words(code);
        std::size_t order =
            code.autom().order(code.ring().field().extension_degree(), code.ring().l());
        std::size_t r = std::gcd(code.length(), order);
        skewcc::oracle::ShiftSpec op;
        op.twist = skewcc::oracle::Twist::identity;
        skewcc::oracle::Word alpha_word(code.alpha().crt().begin(), code.alpha().crt().end());
        bool alpha_one = code.alpha().is_one();
        if (r == 1) {
            op.kind = alpha_one ? skewcc::oracle::ShiftSpec::Kind::cyclic
                                : skewcc::oracle::ShiftSpec::Kind::constacyclic;
        } else {
            op.kind = alpha_one ? skewcc::oracle::ShiftSpec::Kind::block_cyclic
                                : skewcc::oracle::ShiftSpec::Kind::block_twisted;
            op.blocks = code.length() / r;
        }
        op.alpha = std::move(alpha_word);
        if (!skewcc::oracle::closure_check(cs, op))
            throw skewcc::verification_error(
                "codeword set is not closed under the classified shift");
        rep["verify"] = {{"mode", "oracle"}, {"enumerated_words", cs.size()}};
    }
    return rep;
}

json cmd_examples(std::uint64_t seed) {
    return skewcc::examples_report(skewcc::run_all_examples(seed));
}

// ---------------------------------------------------------------------- //

void show_code_report(const json& rep) {
    const json& ring = rep.at("ring");
    std::cout << "ring: q=" << rep.at("size").at("q").get<std::uint64_t>()
              << ", k=" << ring.at("f_roots").size()
              << ", l=" << ring.at("g_roots").size() << "\n"
              << "n=" << rep.at("n").get<std::size_t>()
              << "  autom=" << autom_line(rep.at("autom"))
              << "  alpha=" << rep.at("alpha_pretty").get<std::string>() << "\n"
              << "generator: " << rep.at("gen_pretty").get<std::string>() << "\n"
              << "size: " << rep.at("size").at("q").get<std::uint64_t>() << "^"
              << rep.at("size").at("exponent").get<std::int64_t>() << "\n"
              << "classification: " << classification_line(rep.at("classification"))
              << "\n";
    std::cout << "components:\n";
    for (const json& c : rep.at("components"))
        std::cout << "  (" << c.at("i").get<std::size_t>() << ","
                  << c.at("j").get<std::size_t>() << ")  dim="
                  << c.at("dim").get<std::size_t>() << "  gen "
                  << c.at("gen_pretty").get<std::string>() << "\n";
}

void show_verify(const json& rep) {
    if (rep.contains("verify"))
        std::cout << "oracle check: ok" << "\n";
}

void show_verify_generator(const json& rep) {
    if (rep.at("divides").get<bool>()) {
        std::cout << "divides: yes\n"
                  << "size: " << rep.at("size").at("q").get<std::uint64_t>() << "^"
                  << rep.at("size").at("exponent").get<std::int64_t>() << "\n"
                  << "classification: "
                  << classification_line(rep.at("classification")) << "\n";
    } else {
        std::cout << "divides: no\n"
                  << "remainder: " << rep.at("remainder_pretty").get<std::string>()
                  << "\n";
    }
}

void show_gray(const json& rep) {
    std::cout << "gray image length: " << rep.at("n").get<std::size_t>() << "\n"
              << "dimension: " << rep.at("k_dim").get<std::size_t>() << "\n";
    if (rep.at("d").is_null())
        std::cout << "minimum distance: undefined (zero code)\n";
    else
        std::cout << "minimum distance: " << rep.at("d").get<std::size_t>() << "\n";
    show_verify(rep);
}

void show_mindist(const json& rep) {
    for (const json& c : rep.at("per_component")) {
        std::cout << "  (" << c.at("i").get<std::size_t>() << ","
                  << c.at("j").get<std::size_t>() << ")  d=";
        if (c.at("d").is_null())
            std::cout << "-\n";
        else
            std::cout << c.at("d").get<std::size_t>() << "\n";
    }
    if (rep.at("d").is_null())
        std::cout << "minimum component distance: undefined (zero code)\n";
    else
        std::cout << "minimum component distance: " << rep.at("d").get<std::size_t>()
                  << "\n";
    show_verify(rep);
}

void show_idempotent(const json& rep) {
    std::cout << "idempotent generator: "
              << rep.at("idempotent_pretty").get<std::string>() << "\n";
    show_verify(rep);
}

void show_classify(const json& rep) {
    std::cout << "classification: " << classification_line(rep.at("classification"))
              << "\n"
              << "size: " << rep.at("size").at("q").get<std::uint64_t>() << "^"
              << rep.at("size").at("exponent").get<std::int64_t>() << "\n";
    show_verify(rep);
}

void show_examples(const json& rep) {
    for (const json& ex : rep.at("examples")) {
        std::cout << ex.at("id").get<std::string>() << ": "
                  << (ex.at("pass").get<bool>() ? "pass" : "FAIL") << "\n";
        for (const json& c : ex.at("checks")) {
            if (c.at("pass").get<bool>()) continue;
            std::cout << "    failed: " << c.at("name").get<std::string>();
            if (c.contains("detail"))
                std::cout << " (" << c.at("detail").get<std::string>() << ")";
            std::cout << "\n";
        }
    }
    std::cout << "overall: " << (rep.at("pass").get<bool>() ? "pass" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "constructions and checks for skew constacyclic codes over "
        "F_q[u,v]/(f(u), g(v), uv-vu)"};
    app.require_subcommand(1);

    bool json_out = false;
    std::string verify_mode;
    std::uint64_t seed = 12345;
    std::string cfg_path;
    app.add_flag("--json", json_out, "emit the report as JSON");
    app.add_option("--verify", verify_mode,
                   "cross-check the result against the brute-force oracle "
                   "(accepted value: oracle)");
    app.add_option("--seed", seed, "seed for randomized sampling")
        ->capture_default_str();

    const char* kCfgHelp = "configuration file (`-` or omitted reads stdin)";
    CLI::App* sub_vg = app.add_subcommand(
        "verify-generator", "divide x^n - alpha by the configured generator");
    sub_vg->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_build =
        app.add_subcommand("build", "build a code and report its parameters");
    sub_build->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_dec = app.add_subcommand(
        "decompose", "report the component codes of a configured code");
    sub_dec->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_dual = app.add_subcommand("dual", "generator of the dual code");
    sub_dual->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_idem =
        app.add_subcommand("idempotent", "idempotent generator of the code");
    sub_idem->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_gray =
        app.add_subcommand("gray", "parameters of the Gray image over F_q");
    sub_gray->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_md = app.add_subcommand(
        "mindist", "exhaustive component minimum distances");
    sub_md->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_cls = app.add_subcommand(
        "classify", "untwisted shift class of the configured code");
    sub_cls->add_option("config", cfg_path, kCfgHelp);
    CLI::App* sub_ex = app.add_subcommand(
        "examples", "replay the bundled worked examples");
    for (CLI::App* s : app.get_subcommands(nullptr)) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!verify_mode.empty() && verify_mode != "oracle")
            throw std::invalid_argument("unknown verify mode: " + verify_mode);
        bool verify = verify_mode == "oracle";
        if (verify && (sub_vg->parsed() || sub_dec->parsed() || sub_ex->parsed()))
            throw std::invalid_argument(
                "--verify oracle is not available for this subcommand");

        json rep;
        int rc = 0;
        if (sub_vg->parsed()) {
            rep = cmd_verify_generator(load_config(cfg_path));
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_verify_generator(rep);
        } else if (sub_build->parsed()) {
            rep = cmd_build(load_config(cfg_path), verify);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else { show_code_report(rep); show_verify(rep); }
        } else if (sub_dec->parsed()) {
            rep = cmd_decompose(load_config(cfg_path));
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_code_report(rep);
        } else if (sub_dual->parsed()) {
            rep = cmd_dual(load_config(cfg_path), verify);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else { show_code_report(rep); show_verify(rep); }
        } else if (sub_idem->parsed()) {
            rep = cmd_idempotent(load_config(cfg_path), verify);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_idempotent(rep);
        } else if (sub_gray->parsed()) {
            rep = cmd_gray(load_config(cfg_path), verify, seed);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_gray(rep);
        } else if (sub_md->parsed()) {
            rep = cmd_mindist(load_config(cfg_path), verify);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_mindist(rep);
        } else if (sub_cls->parsed()) {
            rep = cmd_classify(load_config(cfg_path), verify);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_classify(rep);
        } else if (sub_ex->parsed()) {
            rep = cmd_examples(seed);
            if (json_out) std::cout << rep.dump(2) << "\n";
            else show_examples(rep);
            if (!rep.at("pass").get<bool>()) rc = 5;
        }
        return rc;
    } catch (const skewcc::enumeration_limit_error& e) {
        std::cerr << "error (enumeration cap): " << e.what() << "\n";
        return 4;
    } catch (const skewcc::verification_error& e) {
        std::cerr << "error (assertion): " << e.what() << "\n";
        return 5;
    } catch (const json::exception& e) {
        std::cerr << "error (config): " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (config): " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
