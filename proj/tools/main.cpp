#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "secsheaf/generator.hpp"
#include "secsheaf/runner.hpp"

namespace {

using secsheaf::json;

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open input file: " << path << "\n";
        std::exit(secsheaf::kExitInputError);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        std::cerr << "input is not valid JSON: " << e.what() << "\n";
        std::exit(secsheaf::kExitInputError);
    }
}

void apply_env_guards(json& doc) {
    auto apply = [&doc](const char* env, const char* key) {
        if (const char* v = std::getenv(env)) {
            if (!doc.contains("guards")) doc["guards"] = json::object();
            doc["guards"][key] = std::stoll(v);
        }
    };
    apply("SECSHEAF_GUARD_FAMILIES", "families");
    apply("SECSHEAF_GUARD_HOM", "hom");
    apply("SECSHEAF_GUARD_SUBMODULES", "submodules");
    apply("SECSHEAF_GUARD_RING", "ring");
    apply("SECSHEAF_GUARD_COVERS", "covers");
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"second spectra of finite modules: dual Zariski topology, section sheaves, "
                 "and the verification suite"};
    app.require_subcommand(1);

    std::string input, out_path, dot_path;
    long long guard_families = -1, guard_hom = -1;
    uint64_t seed = 0;
    bool timings = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* opt = sub->add_option("--input", input, "instance document (JSON)");
        if (needs_input) opt->required();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--guard-families", guard_families, "cap on candidate section families");
        sub->add_option("--guard-hom", guard_hom, "cap on hom-search candidates");
        sub->add_option("--seed", seed, "seed recorded into the document");
        sub->add_flag("--timings", timings, "include wall-clock timings in the report");
    };

    for (const char* name : {"spectrum", "topology", "sections", "stalks", "verify", "scheme",
                             "morphism"})
        add_common(app.add_subcommand(name), true);

    auto* dot_cmd = app.add_subcommand("export-dot");
    add_common(dot_cmd, true);
    dot_cmd->add_option("--dot", dot_path, "write the DOT graph here");

    auto* gen = app.add_subcommand("generate", "emit a randomized small instance document");
    int max_ring = 36, max_module = 64;
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--max-ring", max_ring, "maximum ring order");
    gen->add_option("--max-module", max_module, "maximum module order");
    gen->add_option("--out", out_path, "write the document here instead of stdout");

    CLI11_PARSE(app, argc, argv);
    auto* sub = app.get_subcommands().front();

    if (sub->get_name() == "generate") {
        secsheaf::GeneratorOptions opt;
        opt.max_ring = max_ring;
        opt.max_module = max_module;
        write_or_print(out_path, secsheaf::generate_document(seed, opt).dump(2));
        return secsheaf::kExitOk;
    }

    json doc = read_document(input);
    apply_env_guards(doc);
    if (guard_families >= 0) doc["guards"]["families"] = guard_families;
    if (guard_hom >= 0) doc["guards"]["hom"] = guard_hom;
    if (sub->count("--seed")) doc["seed"] = seed;

    secsheaf::RunOutcome outcome = secsheaf::run_command(sub->get_name(), doc, timings);
    if (sub->get_name() == "export-dot" && !dot_path.empty())
        write_or_print(dot_path, outcome.dot);
    write_or_print(out_path, outcome.report.dump(2));
    return outcome.exit_code;
}
