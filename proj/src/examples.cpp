#include "skewcc/examples.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "skewcc/codes.hpp"
#include "skewcc/errors.hpp"
#include "skewcc/gray.hpp"
#include "skewcc/oracle_bridge.hpp"

namespace skewcc {

namespace {

struct NamedConfig {
    const char* id;
    const char* text;
};

// Every bundled instance, in display order.  The first eight replay the
// worked constructions; the aux-* entries are deliberately tiny so that the
// exhaustive cross-checks (enumeration, brute-force duals, Gray images) stay
// far below the enumeration cap.
const NamedConfig kConfigs[] = {
    {"ex1", R"({
  "ring": {"field": {"p": 2, "s": 2}, "f_roots": [0, 1, 2], "g_roots": [0, 1]},
  "n": 12,
  "autom": "psi",
  "alpha": 1,
  "gen": [[1,1,1,1,1,1],
          [1,0,1,0,1,0],
          [1,1,1,1,1,1],
          [1,1,1,1,1,1],
          [1,1,1,1,1,1],
          [0,1,0,1,0,1],
          [1,1,1,1,1,1]]
})"},
    {"ex2", R"({
  "ring": {"field": {"p": 2, "s": 3, "modulus": [1, 1, 0, 1]},
           "f_roots": [0, 1], "g_roots": [0, 1, 2, 4]},
  "n": 8,
  "autom": "psi",
  "alpha": 1,
  "gen": [[1,1,1,1,1,1,1,1],
          [0,0,0,0,1,0,1,0],
          [0,0,0,0,0,0,0,0],
          [0,0,0,0,1,0,1,0],
          [1,1,1,1,1,1,1,1]]
})"},
    {"ex3", R"({
  "ring": {"field": {"p": 5, "s": 1}, "f_roots": [0, 1], "g_roots": [0, 1]},
  "n": 9,
  "autom": "psi",
  "alpha": 1,
  "gen": [1, 0, 0, 1, 0, 0, 1]
})"},
    {"ex4", R"({
  "ring": {"field": {"p": 7, "s": 1}, "f_roots": [0, 1, 2, 4], "g_roots": [0]},
  "n": 3,
  "autom": "id",
  "alpha": [1, 6, 6, 6],
  "components": [
    {"i": 1, "j": 1, "gen": [1, 1, 1]},
    {"i": 2, "j": 1, "gen": [1, 6, 1]},
    {"i": 3, "j": 1, "gen": [1, 6, 1]},
    {"i": 4, "j": 1, "gen": [1, 0, 0, 1]}
  ]
})"},
    {"ex5", R"({
  "ring": {"field": {"p": 3, "s": 2, "modulus": [2, 1, 1]},
           "f_roots": [0, 1, 2], "g_roots": [1, 2]},
  "n": 7,
  "autom": {"theta": 1},
  "alpha": [1, 1, 2, 1, 2, 1],
  "gen": [1, [1,1,2,1,2,1], 1, [1,1,2,1,2,1], 1, [1,1,2,1,2,1], 1]
})"},
    {"ex6", R"({
  "ring": {"field": {"p": 5, "s": 2, "modulus": [2, 4, 1]},
           "f_roots": [0, 1, 4], "g_roots": [0, 1]},
  "n": 6,
  "autom": {"theta": 1},
  "alpha": [1, 1, 4, 1, 4, 1],
  "components": [
    {"i": 1, "j": 1, "gen": [1, 1, 1]},
    {"i": 1, "j": 2, "gen": [1, 1, 1]},
    {"i": 2, "j": 1, "gen": [4, 3, 1]},
    {"i": 2, "j": 2, "gen": [1, 1, 1]},
    {"i": 3, "j": 1, "gen": [4, 3, 1]},
    {"i": 3, "j": 2, "gen": [1, 1, 1]}
  ]
})"},
    {"ex7a", R"({
  "ring": {"field": {"p": 2, "s": 2}, "f_roots": [0, 1], "g_roots": [0, 1, 2]},
  "n": 6,
  "autom": {"theta": 1},
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [2, 3, 3, 1]},
    {"i": 1, "j": 2, "gen": [2, 3, 3, 1]},
    {"i": 1, "j": 3, "gen": [2, 3, 3, 1]},
    {"i": 2, "j": 1, "gen": [2, 3, 3, 1]},
    {"i": 2, "j": 2, "gen": [2, 3, 3, 1]},
    {"i": 2, "j": 3, "gen": [2, 3, 3, 1]}
  ]
})"},
    {"ex7b", R"({
  "ring": {"field": {"p": 2, "s": 2}, "f_roots": [0, 1], "g_roots": [0, 1, 2]},
  "n": 6,
  "autom": {"theta": 1},
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [1, 0, 1, 0, 1]},
    {"i": 1, "j": 2, "gen": [3, 0, 2, 0, 1]},
    {"i": 1, "j": 3, "gen": [1, 0, 1, 0, 1]},
    {"i": 2, "j": 1, "gen": [3, 0, 2, 0, 1]},
    {"i": 2, "j": 2, "gen": [2, 0, 3, 0, 1]},
    {"i": 2, "j": 3, "gen": [2, 0, 3, 0, 1]}
  ]
})"},
    {"aux-dual-a", R"({
  "ring": {"field": {"p": 2, "s": 2}, "f_roots": [0, 1], "g_roots": [0]},
  "n": 4,
  "autom": {"theta": 1},
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [1, 0, 1]},
    {"i": 2, "j": 1, "gen": [1, 1]}
  ]
})"},
    {"aux-dual-b", R"({
  "ring": {"field": {"p": 3, "s": 2}, "f_roots": [0, 1], "g_roots": [0]},
  "n": 2,
  "autom": {"theta": 1},
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [2, 1]},
    {"i": 2, "j": 1, "gen": [6, 1]}
  ]
})"},
    {"aux-dual-c", R"({
  "ring": {"field": {"p": 2, "s": 1}, "f_roots": [0, 1], "g_roots": [0, 1]},
  "n": 2,
  "autom": "id",
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [1, 0, 1]},
    {"i": 1, "j": 2, "gen": [1, 1]},
    {"i": 2, "j": 1, "gen": [1]},
    {"i": 2, "j": 2, "gen": [1, 1]}
  ]
})"},
    {"aux-idem", R"({
  "ring": {"field": {"p": 5, "s": 1}, "f_roots": [0, 1], "g_roots": [2, 3]},
  "n": 3,
  "autom": "id",
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [4, 1]},
    {"i": 1, "j": 2, "gen": [1, 1, 1]},
    {"i": 2, "j": 1, "gen": [1]},
    {"i": 2, "j": 2, "gen": [4, 1]}
  ]
})"},
    {"aux-twisted", R"({
  "ring": {"field": {"p": 3, "s": 2}, "f_roots": [0, 1], "g_roots": [0]},
  "n": 4,
  "autom": {"theta": 1},
  "alpha": [1, 2],
  "components": [
    {"i": 1, "j": 1, "gen": [2, 0, 1]},
    {"i": 2, "j": 1, "gen": [3, 0, 1]}
  ]
})"},
    {"aux-psi-mini", R"({
  "ring": {"field": {"p": 2, "s": 1}, "f_roots": [0], "g_roots": [0, 1]},
  "n": 4,
  "autom": "psi",
  "alpha": 1,
  "gen": [1, 1]
})"},
    {"aux-flat-gray", R"({
  "ring": {"field": {"p": 3, "s": 2}, "f_roots": [0, 1, 2], "g_roots": [0]},
  "n": 2,
  "autom": {"theta": 1},
  "alpha": 1,
  "components": [
    {"i": 1, "j": 1, "gen": [2, 1]},
    {"i": 2, "j": 1, "gen": [2, 1]},
    {"i": 3, "j": 1, "gen": [2, 1]}
  ]
})"},
};

/// Collects named pass/fail assertions; exceptions become failures.
class Checker {
public:
    explicit Checker(std::string id) : result_{std::move(id), {}} {}

    void expect(const std::string& name, bool ok, const std::string& detail = "") {
        result_.checks.push_back({name, ok, ok ? "" : detail});
    }

    template <class Fn>
    void step(const std::string& name, Fn&& fn) {
        try {
            fn();
            result_.checks.push_back({name, true, ""});
        } catch (const std::exception& e) {
            result_.checks.push_back({name, false, e.what()});
        }
    }

    ExampleResult take() { return std::move(result_); }

private:
    ExampleResult result_;
};

Code build_config(const std::string& id) {
    return code_from_json(bundled_config(id));
}

std::string describe(const ShiftClass& cls) { return to_string(cls); }

void check_classification(Checker& ck, const Code& code, ShiftClass::Kind kind,
                          std::size_t index, const char* label) {
    ShiftClass cls = code.classify();
    std::ostringstream os;
    os << "got " << describe(cls);
    ck.expect(label, cls.kind == kind && cls.index == index, os.str());
}

void check_divides(Checker& ck, const Code& code, const char* label) {
    SkewPoly modulus =
        x_pow_minus(code.ring(), code.autom(), code.length(), code.alpha());
    ck.expect(label, is_right_divisor(code.gen(), modulus),
              "generator does not right-divide the modulus");
}

// ---------------------------------------------------------------------------

ExampleResult run_ex1(std::uint64_t) {
    Checker ck("ex1");
    try {
        Code code = build_config("ex1");
        const Ring& ring = code.ring();
        RingElement v = ring.element({0, 1, 0, 1, 0, 1});
        RingElement one_minus_v = ring.element({1, 0, 1, 0, 1, 0});
        ck.expect("psi swaps v and 1-v", one_minus_v.psi() == v && v.psi() == one_minus_v,
                  "rotation of the v-coordinate disagrees");
        check_divides(ck, code, "generator divides x^12 - 1");
        check_classification(ck, code, ShiftClass::Kind::quasi_cyclic, 6,
                             "code is quasi-cyclic of index 6");
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex2(std::uint64_t) {
    Checker ck("ex2");
    try {
        Code code = build_config("ex2");
        const Ring& ring = code.ring();
        ck.expect("psi has order 4", code.autom().order(3, ring.l()) == 4, "");
        // gamma_1 is the idempotent supported on the v-root column j=0.
        RingElement gamma1 = ring.element({1, 0, 0, 0, 1, 0, 0, 0});
        RingElement gamma2 = ring.element({0, 1, 0, 0, 0, 1, 0, 0});
        ck.expect("psi advances the gamma idempotents", gamma1.psi() == gamma2,
                  "psi(gamma_1) != gamma_2");
        check_divides(ck, code, "generator divides x^8 - 1");
        check_classification(ck, code, ShiftClass::Kind::quasi_cyclic, 2,
                             "code is quasi-cyclic of index 2");
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex3(std::uint64_t) {
    Checker ck("ex3");
    try {
        Code code = build_config("ex3");
        check_divides(ck, code, "generator divides x^9 - 1");
        ShiftClass cls = code.classify();
        ck.expect("code is cyclic", cls.kind == ShiftClass::Kind::cyclic,
                  "got " + describe(cls));
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex4(std::uint64_t) {
    Checker ck("ex4");
    try {
        Code code = build_config("ex4");
        const Ring& ring = code.ring();
        ck.expect("alpha equals 1 - 2u^3",
                  code.alpha() == ring.from_uv({{1}, {0}, {0}, {5}}),
                  "unit disagrees with its u,v form");
        ck.expect("alpha is 1 on the first component and -1 on the rest",
                  code.alpha().crt() == std::vector<std::uint32_t>{1, 6, 6, 6}, "");
        // The assembled generator mixes component degrees (its lead is not a
        // unit), so divisibility is the component-level statement: cyclic on
        // the first component, negacyclic on the other three.
        ck.step("components divide x^3 - alpha_i", [&] {
            const Field& F = ring.field();
            for (const ComponentCode& cc : code.components()) {
                FieldPoly modulus = x_pow_minus(F, code.autom(), 3, cc.alpha);
                if (!is_right_divisor(cc.gen, modulus))
                    throw verification_error("component generator fails to divide");
            }
        });
        auto [q, exponent] = code.size();
        ck.expect("code has 7^3 codewords", q == 7 && exponent == 3,
                  "size exponent mismatch");
        check_classification(ck, code, ShiftClass::Kind::constacyclic, 3,
                             "code is constacyclic");
        ck.step("idempotent generator passes its self-check",
                [&] { (void)code.idempotent_generator(); });
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex5(std::uint64_t) {
    Checker ck("ex5");
    try {
        Code code = build_config("ex5");
        const Ring& ring = code.ring();
        ck.expect("alpha equals 1 - u^2 - u^2 v",
                  code.alpha() == ring.from_uv({{1, 0}, {0, 0}, {2, 2}}),
                  "unit disagrees with its u,v form");
        ck.expect("alpha is fixed by theta",
                  apply_autom(code.autom(), code.alpha()) == code.alpha(), "");
        check_divides(ck, code, "generator divides x^7 - alpha");
        check_classification(ck, code, ShiftClass::Kind::constacyclic, 7,
                             "code is constacyclic");
        ck.step("idempotent generator passes its self-check",
                [&] { (void)code.idempotent_generator(); });
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex6(std::uint64_t) {
    Checker ck("ex6");
    try {
        Code code = build_config("ex6");
        const Ring& ring = code.ring();
        const Field& fld = ring.field();
        Autom theta = code.autom();

        auto fpoly = [&](std::vector<std::uint16_t> ix) {
            std::vector<FieldElement> cs;
            for (std::uint16_t c : ix) cs.push_back(fld.element(c));
            return FieldPoly(theta, std::move(cs));
        };
        FieldPoly lhs_minus =
            fpoly({4, 0, 1}) * fpoly({1, 4, 1}) * fpoly({1, 1, 1});
        ck.expect("x^6 - 1 factors as (x^2-1)(x^2-x+1)(x^2+x+1)",
                  lhs_minus == fpoly({4, 0, 0, 0, 0, 0, 1}),
                  "product mismatch");
        FieldPoly lhs_plus =
            fpoly({1, 0, 1}) * fpoly({4, 2, 1}) * fpoly({4, 3, 1});
        ck.expect("x^6 + 1 factors as (x^2+1)(x^2+2x-1)(x^2+3x-1)",
                  lhs_plus == fpoly({1, 0, 0, 0, 0, 0, 1}),
                  "product mismatch");

        ck.expect("alpha equals 1 - 2u^2 + 2u^2 v",
                  code.alpha() == ring.from_uv({{1, 0}, {0, 0}, {3, 2}}),
                  "unit disagrees with its u,v form");
        check_divides(ck, code, "generator divides x^6 - alpha");
        const SkewPoly& gen = code.gen();
        ck.expect("generator degree is 2", gen.degree() == 2, "");
        if (gen.degree() == 2) {
            ck.expect("generator constant term equals alpha",
                      gen[0] == code.alpha(), "");
            ck.expect("generator x-coefficient equals 1 + 2u^2 - 2u^2 v",
                      gen[1] == ring.from_uv({{1, 0}, {0, 0}, {2, 3}}),
                      "coefficient disagrees with its u,v form");
        }
        check_classification(ck, code, ShiftClass::Kind::quasi_twisted, 3,
                             "code is quasi-twisted of index 3");
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

ExampleResult run_ex7(std::uint64_t seed) {
    Checker ck("ex7");
    try {
        Code code_a = build_config("ex7a");
        Code code_b = build_config("ex7b");
        const Ring& ring = code_a.ring();
        const Field& fld = ring.field();
        Autom theta = code_a.autom();

        auto fpoly = [&](std::vector<std::uint16_t> ix) {
            std::vector<FieldElement> cs;
            for (std::uint16_t c : ix) cs.push_back(fld.element(c));
            return FieldPoly(theta, std::move(cs));
        };
        FieldPoly target = fpoly({1, 0, 0, 0, 0, 0, 1});  // x^6 - 1, char 2
        struct Fact {
            const char* name;
            FieldPoly lhs;
        };
        std::vector<Fact> facts;
        facts.push_back({"(x^2-1)(x^4+x^2+1)",
                         fpoly({1, 0, 1}) * fpoly({1, 0, 1, 0, 1})});
        facts.push_back({"(x^2-b)(x^4+bx^2+b^2)",
                         fpoly({2, 0, 1}) * fpoly({3, 0, 2, 0, 1})});
        facts.push_back({"(x^2-b^2)(x^4+b^2x^2+b)",
                         fpoly({3, 0, 1}) * fpoly({2, 0, 3, 0, 1})});
        facts.push_back({"(x^3+bx^2+b^2x-b^2)(x^3+b^2x^2+b^2x+b)",
                         fpoly({3, 3, 2, 1}) * fpoly({2, 3, 3, 1})});
        for (const Fact& f : facts) {
            ck.expect(std::string("x^6 - 1 = ") + f.name + " in the twisted ring",
                      f.lhs == target, "product mismatch");
        }

        std::mt19937_64 rng_a(seed);
        GrayParams pa = gray_image_params(code_a, rng_a);
        ck.expect("first code has Gray parameters [36, 18, 4]",
                  pa.n == 36 && pa.k_dim == 18 && pa.d && *pa.d == 4,
                  "got different parameters");
        std::mt19937_64 rng_b(seed + 1);
        GrayParams pb = gray_image_params(code_b, rng_b);
        ck.expect("second code has Gray parameters [36, 12, 3]",
                  pb.n == 36 && pb.k_dim == 12 && pb.d && *pb.d == 3,
                  "got different parameters");

        // Cross-check the component minimum distances by raw enumeration:
        // 4^3 = 64 words per component of the first code, 4^2 = 16 per
        // component of the second.
        ck.step("component enumerations agree (64 and 16 words)", [&] {
            for (std::size_t c = 0; c < 6; ++c) {
                std::size_t i = c / ring.l(), j = c % ring.l();
                oracle::CodewordSet wa = enumerate_component_words(code_a, i, j);
                if (wa.size() != 64) throw verification_error("expected 64 words");
                auto da = oracle::brute_min_distance(wa, oracle::Metric::hamming);
                if (!da || *da != 4) throw verification_error("first code component distance != 4");
                oracle::CodewordSet wb = enumerate_component_words(code_b, i, j);
                if (wb.size() != 16) throw verification_error("expected 16 words");
                auto db = oracle::brute_min_distance(wb, oracle::Metric::hamming);
                if (!db || *db != 3) throw verification_error("second code component distance != 3");
            }
        });

        const SkewPoly& gen_b = code_b.gen();
        ck.expect("second generator degree is 4", gen_b.degree() == 4, "");
        if (gen_b.degree() == 4) {
            ck.expect("second generator x^2-coefficient matches its u,v form",
                      gen_b[2] == ring.from_uv({{1, 2, 1}, {3, 0, 2}}),
                      "coefficient disagrees");
            ck.expect("second generator constant term matches its u,v form",
                      gen_b[0] == ring.from_uv({{1, 1, 3}, {2, 3, 0}}),
                      "coefficient disagrees");
            ck.expect("second generator odd coefficients vanish",
                      gen_b[1].is_zero() && gen_b[3].is_zero(), "");
        }
    } catch (const std::exception& e) {
        ck.expect("construction", false, e.what());
    }
    return ck.take();
}

}  // namespace

const std::vector<std::string>& bundled_config_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const NamedConfig& c : kConfigs) v.push_back(c.id);
        return v;
    }();
    return ids;
}

json bundled_config(const std::string& id) {
    for (const NamedConfig& c : kConfigs)
        if (id == c.id) return json::parse(c.text);
    throw std::invalid_argument("unknown bundled configuration: " + id);
}

const std::vector<std::string>& paper_example_ids() {
    static const std::vector<std::string> ids = {"ex1", "ex2", "ex3", "ex4",
                                                 "ex5", "ex6", "ex7"};
    return ids;
}

ExampleResult run_example(const std::string& id, std::uint64_t seed) {
    if (id == "ex1") return run_ex1(seed);
    if (id == "ex2") return run_ex2(seed);
    if (id == "ex3") return run_ex3(seed);
    if (id == "ex4") return run_ex4(seed);
    if (id == "ex5") return run_ex5(seed);
    if (id == "ex6") return run_ex6(seed);
    if (id == "ex7") return run_ex7(seed);
    throw std::invalid_argument("unknown example: " + id);
}

std::vector<ExampleResult> run_all_examples(std::uint64_t seed) {
    std::vector<ExampleResult> out;
    for (const std::string& id : paper_example_ids())
        out.push_back(run_example(id, seed));
    return out;
}

json examples_report(const std::vector<ExampleResult>& results) {
    json arr = json::array();
    bool all = true;
    for (const ExampleResult& r : results) {
        json checks = json::array();
        for (const ExampleCheck& c : r.checks) {
            json e = {{"name", c.name}, {"pass", c.pass}};
            if (!c.pass && !c.detail.empty()) e["detail"] = c.detail;
            checks.push_back(std::move(e));
        }
        all = all && r.passed();
        arr.push_back(
            {{"id", r.id}, {"pass", r.passed()}, {"checks", std::move(checks)}});
    }
    return {{"examples", std::move(arr)}, {"pass", all}};
}

}  // namespace skewcc
