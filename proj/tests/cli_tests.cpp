// End-to-end checks of the command line tool: verdicts, exit codes,
// deterministic output, file round trips and the JSON report shape.

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "helpers.hpp"

using json = nlohmann::json;
using namespace sq;

namespace {

int failures = 0;

#define REQUIRE_MSG(cond, msg)                                             \
    do {                                                                   \
        if (!(cond)) {                                                     \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " \
                      << msg << "\n";                                      \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Minimal structural validation against the shipped schema: the envelope
// plus the per-command required keys listed in the allOf clauses.
void validate_against_schema(const json& schema, const json& report) {
    REQUIRE_MSG(report.contains("schema") && report["schema"] == schema["properties"]["schema"]["const"],
                "schema tag missing or wrong");
    REQUIRE_MSG(report.contains("command"), "command missing");
    bool known = false;
    for (const auto& e : schema["properties"]["command"]["enum"]) known = known || e == report["command"];
    REQUIRE_MSG(known, "unknown command value");
    for (const auto& clause : schema["allOf"]) {
        if (clause["if"]["properties"]["command"]["const"] != report["command"]) continue;
        for (const auto& key : clause["then"]["required"])
            REQUIRE_MSG(report.contains(key.get<std::string>()),
                        "missing required key " + key.get<std::string>() + " for " + report["command"].get<std::string>());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: cli_tests <sq-binary> <data-dir> <schema-file>\n";
        return 2;
    }
    std::string bin = argv[1], data = argv[2], schema_path = argv[3];
    std::string tri = data + "/triangle.quiver";
    std::string sqr = data + "/square.quiver";
    std::string a2 = data + "/a2.quiver";
    std::string a3 = data + "/a3.quiver";

    auto r = run(bin + " check --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3'");
    REQUIRE_MSG(r.code == 0, "check golden exit code");
    REQUIRE_MSG(contains(r.out, "reduced: yes"), "check golden reduced line");
    REQUIRE_MSG(contains(r.out, "blocks: 1 2 3 | 1 2 | 1"), "check golden blocks line");

    r = run(bin + " check --quiver " + tri + " --word '1 1'");
    REQUIRE_MSG(r.code == 1, "non-reduced word exits 1");
    REQUIRE_MSG(contains(r.out, "reduced: no"), "non-reduced verdict text");

    r = run(bin + " check --quiver " + data + "/missing.quiver --word '1'");
    REQUIRE_MSG(r.code == 2, "missing file exits 2");

    // deterministic output
    std::string layers_cmd = bin + " layers --quiver " + tri + " --word '1 2 3 1 2 1'";
    auto l1 = run(layers_cmd);
    auto l2 = run(layers_cmd);
    REQUIRE_MSG(l1.code == 0 && l1.out == l2.out, "layers output is byte identical across runs");
    REQUIRE_MSG(contains(l1.out, "layer 6: (1,0,1)"), "layer listing content");

    r = run(bin + " layers --quiver " + tri + " --word '1 1'");
    REQUIRE_MSG(r.code == 1, "layers on non-reduced word exits 1");

    r = run(bin + " chain --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3'");
    REQUIRE_MSG(r.code == 0 && contains(r.out, "U == T: yes"), "chain cross check");

    r = run(bin + " chain --quiver " + sqr + " --word '1 2 3 4 1 1' --coxeter '1 2 3 4'");
    REQUIRE_MSG(r.code == 0, "chain tolerates a non-reduced tail");
    REQUIRE_MSG(contains(r.out, "sortable-shape-nonreduced"), "chain status line");
    REQUIRE_MSG(contains(r.out, "(zero module)"), "zero tail is flagged");

    r = run(bin + " chain --quiver " + tri + " --word '2 1' --coxeter '1 2 3'");
    REQUIRE_MSG(r.code == 2, "non block-form word exits 2");

    std::string twfile = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/sq_cli_tw.mod";
    r = run(bin + " subcat --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3' --bound 12 --dump-tw " + twfile);
    REQUIRE_MSG(r.code == 0, "subcat golden exit");
    REQUIRE_MSG(contains(r.out, "closure size: 6"), "subcat closure size");
    REQUIRE_MSG(contains(r.out, "matches chain members: yes"), "subcat equality verdict");

    r = run(bin + " recover --quiver " + tri + " --coxeter '1 2 3' --modules " + twfile);
    REQUIRE_MSG(r.code == 0 && contains(r.out, "word: 1 2 3 1 2 1"), "recover round trip");

    // non-tilting module file is a negative verdict (the pair has a
    // nonvanishing extension)
    std::string badfile = twfile + ".bad";
    Quiver h = reversed(triangle_quiver());
    write_file(badfile, serialize_modules(triangle_quiver(), {simple_rep(h, 1), simple_rep(h, 3)}));
    r = run(bin + " recover --quiver " + tri + " --coxeter '1 2 3' --modules " + badfile);
    REQUIRE_MSG(r.code == 1 && contains(r.out, "not"), "recover rejects non-tilting input with exit 1");

    r = run(bin + " explore --quiver " + sqr + " --word '1 2 3 4 3 1 4'");
    REQUIRE_MSG(r.code == 0 && contains(r.out, "classification: monotilting"), "explore monotilting");

    r = run(bin + " explore --quiver " + tri + " --word '1 2 3 2 1 2'");
    REQUIRE_MSG(r.code == 0 && contains(r.out, "classification: tilting-not-monotilting"), "explore mixed walk");
    REQUIRE_MSG(contains(r.out, "right epi -> (2,2,1)"), "explore right step detail");

    r = run(bin + " explore --quiver " + tri + " --word '2 1 3 1'");
    REQUIRE_MSG(r.code == 2, "explore without a leading admissible Coxeter element exits 2");

    r = run(bin + " count --quiver " + a2 + " --coxeter '1 2'");
    REQUIRE_MSG(r.code == 0 && contains(r.out, "sortable elements: 5"), "count a2");

    r = run(bin + " count --quiver " + tri + " --coxeter '1 2 3'");
    REQUIRE_MSG(r.code == 2, "count on a non-Dynkin quiver exits 2");

    r = run(bin + " verify");
    REQUIRE_MSG(r.code == 0 && contains(r.out, "17/17 passed"), "verify corpus all green");

    // JSON reports validate against the shipped schema
    json schema = json::parse(read_file(schema_path));
    for (const std::string& cmd : {
             bin + " check --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3' --json",
             bin + " layers --quiver " + tri + " --word '1 2 3 1 2 1' --json",
             bin + " chain --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3' --json",
             bin + " subcat --quiver " + tri + " --word '1 2 3 1 2 1' --coxeter '1 2 3' --bound 12 --json",
             bin + " recover --quiver " + tri + " --coxeter '1 2 3' --modules " + twfile + " --json",
             bin + " explore --quiver " + sqr + " --word '1 2 3 4 3 1 4' --json",
             bin + " count --quiver " + a3 + " --coxeter '1 2 3' --json",
             bin + " verify --json",
         }) {
        auto jr = run(cmd);
        json parsed;
        try {
            parsed = json::parse(jr.out);
        } catch (...) {
            REQUIRE_MSG(false, "output is not valid JSON for: " + cmd);
            continue;
        }
        validate_against_schema(schema, parsed);
    }
    // text and JSON agree on the numeric verdict
    {
        auto text = run(bin + " count --quiver " + a3 + " --coxeter '1 2 3'");
        auto j = json::parse(run(bin + " count --quiver " + a3 + " --coxeter '1 2 3' --json").out);
        REQUIRE_MSG(contains(text.out, "sortable elements: 14") && j["sortable_count"] == 14,
                    "text and JSON reports agree");
    }

    if (failures == 0) std::cout << "cli_tests: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
