#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secsheaf/errors.hpp"
#include "secsheaf/generator.hpp"
#include "secsheaf/runner.hpp"

using namespace secsheaf;

namespace {

json canonical_doc() {
    return json::parse(R"({
      "ring": {"kind": "zmod", "n": 6},
      "modules": {
        "M": {"kind": "natural"},
        "N": {"kind": "natural"},
        "K": {"kind": "submodule", "of": "M", "generators": [3]}
      }
    })");
}

}  // namespace

TEST_CASE("document parsing and validation") {
    InstanceDocument doc = parse_document(canonical_doc());
    CHECK(doc.ring->order() == 6);
    CHECK(doc.module_named("M")->order() == 6);
    CHECK(doc.submodule_named("K").elements().elements() == std::vector<int>{0, 3});

    // Unknown kinds, bad references and malformed tables carry their paths.
    try {
        parse_document(json::parse(R"({"ring": {"kind": "gf"}})"));
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("/ring") != std::string::npos);
    }
    try {
        parse_document(json::parse(
            R"({"ring": {"kind":"zmod","n":6},
                "modules": {"K": {"kind":"submodule","of":"M","generators":[0]}}})"));
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("unknown module") != std::string::npos);
    }
    try {
        parse_document(json::parse(
            R"({"ring": {"kind":"zmod","n":6},
                "modules": {"M": {"kind":"cyclic-product","orders":[4]}}})"));
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("/modules/M") != std::string::npos);
    }
}

TEST_CASE("spectrum command") {
    RunOutcome out = run_command("spectrum", canonical_doc());
    CHECK(out.exit_code == kExitOk);
    CHECK(out.report["results"]["points"].size() == 2);
    CHECK(out.report["results"]["faithful"] == true);
    CHECK(out.report["results"]["secondful"] == true);
}

TEST_CASE("topology command") {
    RunOutcome out = run_command("topology", canonical_doc());
    CHECK(out.exit_code == kExitOk);
    const auto& topo = out.report["results"]["topology"];
    CHECK(topo["t0"]["t0"] == true);
    CHECK(topo["base_verified"] == true);
    CHECK(topo["opens"].size() == 4);
}

TEST_CASE("sections and stalks commands") {
    RunOutcome sections = run_command("sections", canonical_doc());
    CHECK(sections.exit_code == kExitOk);
    CHECK(sections.report["results"]["cross_validation"]["discrepancies"] == 0);

    RunOutcome stalks = run_command("stalks", canonical_doc());
    CHECK(stalks.exit_code == kExitOk);
    for (const auto& s : stalks.report["results"]["stalks"])
        CHECK(s["isomorphic"] == true);
}

TEST_CASE("verify command passes on the canonical instance") {
    RunOutcome out = run_command("verify", canonical_doc());
    CHECK(out.exit_code == kExitOk);
    CHECK(out.report["status"] == "pass");
    CHECK(out.report["results"]["axioms"]["all_passed"] == true);
    CHECK(out.report["results"]["suite"]["failed"] == 0);
}

TEST_CASE("scheme and export-dot commands") {
    RunOutcome scheme = run_command("scheme", canonical_doc());
    CHECK(scheme.exit_code == kExitOk);
    CHECK(scheme.report["results"]["hypotheses_hold"] == true);

    RunOutcome dot = run_command("export-dot", canonical_doc());
    CHECK(dot.exit_code == kExitOk);
    CHECK(dot.dot.find("digraph") != std::string::npos);
}

TEST_CASE("morphism command via the document block") {
    json doc = canonical_doc();
    doc["morphism"] = json{{"kind", "module-hom"},
                           {"source", "N"},
                           {"target", "N"},
                           {"values", json::array({0, 5, 4, 3, 2, 1})}};  // multiplication by 5
    RunOutcome out = run_command("morphism", doc);
    CHECK(out.exit_code == kExitOk);

    json mono = canonical_doc();
    mono["modules"]["L"] = json{{"kind", "cyclic-product"}, {"orders", json::array({2})}};
    mono["morphism"] = json{{"kind", "module-mono"},
                            {"source", "L"},
                            {"target", "M"},
                            {"values", json::array({0, 3})}};
    RunOutcome mout = run_command("morphism", mono);
    CHECK(mout.exit_code == kExitOk);

    json rhom = canonical_doc();
    rhom["morphism"] = json{{"kind", "ring-hom"},
                            {"target_ring", json{{"kind", "zmod"}, {"n", 2}}},
                            {"values", json::array({0, 1, 0, 1, 0, 1})}};
    RunOutcome rout = run_command("morphism", rhom);
    CHECK(rout.exit_code == kExitOk);
}

TEST_CASE("product-ring documents run end to end") {
    json doc = json::parse(R"({
      "ring": {"kind": "product",
               "factors": [{"kind": "zmod", "n": 4}, {"kind": "zmod", "n": 3}]},
      "modules": {
        "M": {"kind": "natural"},
        "N": {"kind": "natural"},
        "K": {"kind": "submodule", "of": "M", "generators": [5]}
      }
    })");
    RunOutcome out = run_command("verify", doc);
    CHECK(out.exit_code == kExitOk);
    CHECK(out.report["results"]["spectrum"]["points"].size() == 2);
    CHECK(run_command("scheme", doc).exit_code == kExitOk);
}

TEST_CASE("the zero ring degenerates gracefully") {
    json doc = json::parse(R"({
      "ring": {"kind": "zmod", "n": 1},
      "modules": {
        "M": {"kind": "natural"},
        "N": {"kind": "natural"},
        "K": {"kind": "submodule", "of": "M", "generators": []}
      }
    })");
    RunOutcome out = run_command("verify", doc);
    CHECK(out.exit_code == kExitOk);
    CHECK(out.report["results"]["spectrum"]["points"].empty());
}

TEST_CASE("morphism blocks with invalid values are input errors") {
    json doc = canonical_doc();
    doc["morphism"] = json{{"kind", "module-hom"},
                           {"source", "N"},
                           {"target", "N"},
                           {"values", json::array({0, 1, 1, 1, 1, 1})}};  // not additive
    RunOutcome out = run_command("morphism", doc);
    CHECK(out.exit_code == kExitInputError);
}

TEST_CASE("missing modules exit with an input error naming the module") {
    json doc = canonical_doc();
    doc["modules"].erase("N");
    RunOutcome out = run_command("sections", doc);
    CHECK(out.exit_code == kExitInputError);
    CHECK(out.report["error"].get<std::string>().find("\"N\"") != std::string::npos);
}

TEST_CASE("guard trips exit with the guard status") {
    json doc = canonical_doc();
    doc["guards"] = json{{"families", 2}};
    RunOutcome out = run_command("sections", doc);
    CHECK(out.exit_code == kExitGuardTripped);
    CHECK(out.report["status"] == "guard-tripped");
}

TEST_CASE("unknown commands are input errors") {
    CHECK(run_command("fooberize", canonical_doc()).exit_code == kExitInputError);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* cmd : {"spectrum", "topology", "sections", "stalks", "verify", "scheme"}) {
        RunOutcome a = run_command(cmd, canonical_doc());
        RunOutcome b = run_command(cmd, canonical_doc());
        CHECK(a.report.dump(2) == b.report.dump(2));
    }
}

TEST_CASE("generated documents are reproducible and runnable") {
    GeneratorOptions opt;
    opt.max_ring = 8;
    opt.max_module = 16;
    json doc1 = generate_document(7, opt);
    json doc2 = generate_document(7, opt);
    CHECK(doc1.dump() == doc2.dump());
    CHECK(doc1.dump() != generate_document(8, opt).dump());

    RunOutcome out = run_command("verify", doc1);
    CHECK(out.exit_code == kExitOk);
    RunOutcome again = run_command("verify", doc1);
    CHECK(out.report.dump(2) == again.report.dump(2));
}

TEST_CASE("random instances satisfy their size bounds") {
    GeneratorOptions opt;
    opt.max_ring = 12;
    opt.max_module = 36;
    for (uint64_t seed = 0; seed < 30; ++seed) {
        RandomInstance inst = random_instance(seed, opt);
        CHECK(inst.ring->order() >= 2);
        CHECK(inst.ring->order() <= 12);
        CHECK(inst.m->order() <= 36);
        CHECK(inst.n->order() <= 36);
        CHECK(inst.k().parent() == inst.m);
    }
}
