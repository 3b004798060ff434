// Command line front end: quiver words, module series, torsionfree-class
// enumeration and the bundled example corpus.  Exit codes: 0 positive
// verdict, 1 negative verdict, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sq/chains.hpp"
#include "sq/corpus.hpp"
#include "sq/io.hpp"

using json = nlohmann::json;
using namespace sq;

namespace {

constexpr const char* kSchema = "sq-report/1";

bool verbose() {
    const char* v = std::getenv("SQ_LOG");
    return v && *v;
}

void log_note(const std::string& msg) {
    if (verbose()) std::cerr << "[sq] " << msg << "\n";
}

std::string root_str(const RootVector& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

json root_json(const RootVector& v) {
    json a = json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

struct Cli {
    std::string quiver_path, word_text, coxeter_text, modules_path, dump_path, engine = "both";
    long long bound = 24;
    bool as_json = false;
};

Quiver load_quiver(const Cli& cli) {
    log_note("reading quiver from " + cli.quiver_path);
    return parse_quiver(read_file(cli.quiver_path));
}

int emit(const json& j, const std::string& text, bool as_json, int code) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

int cmd_check(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word w = parse_word(cli.word_text, q.n);
    bool reduced = is_reduced(q, w);
    json j{{"schema", kSchema}, {"command", "check"}, {"reduced", reduced}};
    std::ostringstream out;
    out << "reduced: " << (reduced ? "yes" : "no") << "\n";
    bool negative = !reduced;
    if (!cli.coxeter_text.empty()) {
        Word c = parse_word(cli.coxeter_text, q.n);
        if (!is_admissible_coxeter(q, c)) throw std::invalid_argument("coxeter word is not admissible for this quiver");
        if (reduced) {
            auto d = sortable_decompose(q, c, w);
            j["sortable"] = d.has_value();
            out << "sortable: " << (d ? "yes" : "no") << "\n";
            if (d) {
                json blocks = json::array();
                std::ostringstream bs;
                for (size_t t = 0; t < d->blocks.size(); ++t) {
                    if (t) bs << " | ";
                    json b = json::array();
                    for (size_t i = 0; i < d->blocks[t].size(); ++i) {
                        if (i) bs << ' ';
                        bs << d->blocks[t][i];
                        b.push_back(d->blocks[t][i]);
                    }
                    blocks.push_back(b);
                }
                j["blocks"] = blocks;
                out << "blocks: " << bs.str() << "\n";
            } else {
                negative = true;
            }
        } else {
            j["sortable"] = false;
            out << "sortable: no (word is not reduced)\n";
        }
    }
    return emit(j, out.str(), cli.as_json, negative ? 1 : 0);
}

int cmd_layers(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word w = parse_word(cli.word_text, q.n);
    if (!is_reduced(q, w)) {
        std::cout << "word is not reduced; layer vectors are undefined\n";
        return 1;
    }
    auto roots = layer_roots(q, w);
    json j{{"schema", kSchema}, {"command", "layers"}};
    json arr = json::array();
    std::ostringstream out;
    for (size_t i = 0; i < roots.size(); ++i) {
        out << "layer " << (i + 1) << ": " << root_str(roots[i]) << "\n";
        arr.push_back(root_json(roots[i]));
    }
    j["layers"] = arr;
    return emit(j, out.str(), cli.as_json, 0);
}

const char* status_name(ChainStatus s) {
    switch (s) {
        case ChainStatus::ReducedSortable: return "reduced-sortable";
        case ChainStatus::SortableShapeNonreduced: return "sortable-shape-nonreduced";
        default: return "failed";
    }
}

int cmd_chain(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word w = parse_word(cli.word_text, q.n);
    Word c = parse_word(cli.coxeter_text, q.n);
    json j{{"schema", kSchema}, {"command", "chain"}, {"engine", cli.engine}};
    std::ostringstream out;
    bool zero_member = false;
    auto print_chain = [&](const ChainResult& r, bool with_flags) {
        out << "status: " << status_name(r.status) << "\n";
        j["status"] = status_name(r.status);
        json steps = json::array();
        for (size_t i = 0; i < r.dim_vectors.size(); ++i) {
            out << "step " << (i + 1) << ": dim " << root_str(r.dim_vectors[i]);
            json s{{"dim", root_json(r.dim_vectors[i])}};
            if (with_flags && i < r.step_flags.size()) {
                out << " mono " << (r.step_flags[i] ? "yes" : "no");
                s["mono"] = static_cast<bool>(r.step_flags[i]);
            }
            bool zero = total_dim(r.modules[i]) == 0;
            zero_member = zero_member || zero;
            if (zero) out << "  (zero module)";
            out << "\n";
            steps.push_back(s);
        }
        j["steps"] = steps;
    };
    if (cli.engine == "u") {
        print_chain(u_chain(q, c, w), false);
    } else if (cli.engine == "t") {
        print_chain(t_chain(q, c, w), true);
    } else {
        ChainResult u = u_chain(q, c, w);
        ChainResult t = t_chain(q, c, w);
        print_chain(t, true);
        bool same = chains_isomorphic(u, t);
        out << "U == T: " << (same ? "yes" : "no") << "\n";
        j["series_isomorphic"] = same;
        if (!same) return emit(j, out.str(), cli.as_json, 1);
    }
    if (zero_member) out << "note: zero members can appear only at a non-reduced tail\n";
    return emit(j, out.str(), cli.as_json, 0);
}

int cmd_subcat(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word w = parse_word(cli.word_text, q.n);
    Word c = parse_word(cli.coxeter_text, q.n);
    log_note("building chain and tilting member");
    auto tw = t_w(q, c, w);
    auto chain = t_chain(q, c, w);
    bool tilting = is_tilting(tw);
    log_note("enumerating submodule closure");
    auto en = sub_enumerate(tw, cli.bound);
    json j{{"schema", kSchema}, {"command", "subcat"}, {"tilting", tilting}, {"complete", en.complete},
           {"bound", cli.bound}};
    std::ostringstream out;
    out << "summands:";
    json summands = json::array();
    for (const auto& m : tw) {
        out << ' ' << root_str(dim_vector(m));
        summands.push_back(root_json(dim_vector(m)));
    }
    out << "\n";
    j["summands"] = summands;
    out << "tilting: " << (tilting ? "yes" : "no") << "\n";
    out << "closure size: " << en.modules.size() << "\n";
    out << "complete: " << (en.complete ? "yes" : "no (bounded search)") << "\n";
    json members = json::array();
    for (const auto& m : en.modules) {
        out << "  " << root_str(dim_vector(m)) << "\n";
        members.push_back(root_json(dim_vector(m)));
    }
    j["members"] = members;
    // Compare against the chain member set, up to isomorphism.
    bool equal = true;
    {
        std::vector<Representation> uniq;
        for (const auto& m : chain.modules) {
            bool dup = false;
            for (const auto& u : uniq) dup = dup || is_isomorphic(m, u);
            if (!dup && total_dim(m) > 0) uniq.push_back(m);
        }
        equal = uniq.size() == en.modules.size();
        for (size_t i = 0; i < en.modules.size() && equal; ++i) {
            bool found = false;
            for (const auto& m : uniq) found = found || is_isomorphic(en.modules[i], m);
            equal = found;
        }
    }
    out << "matches chain members: " << (equal ? "yes" : "no") << "\n";
    j["matches_chain"] = equal;
    if (!cli.dump_path.empty()) {
        write_file(cli.dump_path, serialize_modules(q, tw));
        out << "modules written to " << cli.dump_path << "\n";
    }
    return emit(j, out.str(), cli.as_json, (tilting && equal) ? 0 : 1);
}

int cmd_recover(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word c = parse_word(cli.coxeter_text, q.n);
    auto mods = parse_modules(q, read_file(cli.modules_path));
    json j{{"schema", kSchema}, {"command", "recover"}};
    if (!is_tilting(mods)) {
        j["error"] = "not tilting";
        return emit(j, "input modules do not form a basic tilting module\n", cli.as_json, 1);
    }
    log_note("searching for the matching word");
    auto word = recover_word(q, c, mods, cli.bound);
    if (!word) {
        j["found"] = false;
        return emit(j, "no word found at this bound; the closure may be unbounded\n", cli.as_json, 1);
    }
    j["found"] = true;
    json wj = json::array();
    for (int u : *word) wj.push_back(u);
    j["word"] = wj;
    return emit(j, "word: " + word_str(*word) + "\n", cli.as_json, 0);
}

int cmd_explore(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word w = parse_word(cli.word_text, q.n);
    auto rep = explore_word(q, w);
    json j{{"schema", kSchema}, {"command", "explore"}};
    std::ostringstream out;
    json steps = json::array();
    for (size_t i = 0; i < rep.steps.size(); ++i) {
        const auto& s = rep.steps[i];
        out << "step " << (q.n + i + 1) << ": vertex " << s.vertex << ' ' << (s.left ? "left" : "right") << ' '
            << (s.map_ok ? (s.left ? "mono" : "epi") : "failed");
        if (s.map_ok) out << " -> " << root_str(dim_vector(s.new_summand));
        out << "\n";
        steps.push_back({{"vertex", s.vertex},
                         {"side", s.left ? "left" : "right"},
                         {"ok", s.map_ok},
                         {"new_summand", root_json(dim_vector(s.new_summand))}});
    }
    j["steps"] = steps;
    const char* cls = rep.classification == WordClass::Monotilting
                          ? "monotilting"
                          : (rep.classification == WordClass::TiltingNotMonotilting ? "tilting-not-monotilting"
                                                                                    : "not-tilting");
    out << "classification: " << cls << "\n";
    j["classification"] = cls;
    if (rep.final_tilting) {
        out << "tilting module:";
        json f = json::array();
        for (const auto& m : *rep.final_tilting) {
            out << ' ' << root_str(dim_vector(m));
            f.push_back(root_json(dim_vector(m)));
        }
        out << "\n";
        j["tilting_module"] = f;
        if (!cli.dump_path.empty()) {
            write_file(cli.dump_path, serialize_modules(q, *rep.final_tilting));
            out << "modules written to " << cli.dump_path << "\n";
        }
    }
    return emit(j, out.str(), cli.as_json, rep.classification == WordClass::NotTilting ? 1 : 0);
}

int cmd_count(const Cli& cli) {
    Quiver q = load_quiver(cli);
    Word c = parse_word(cli.coxeter_text, q.n);
    auto r = count_bijection(q, c);
    json j{{"schema", kSchema},
           {"command", "count"},
           {"sortable_count", r.sortable_count},
           {"torsionfree_count", r.torsionfree_count},
           {"matches", r.matches}};
    std::ostringstream out;
    out << "sortable elements: " << r.sortable_count << "\n";
    out << "torsionfree classes: " << r.torsionfree_count << "\n";
    out << "match: " << (r.matches ? "yes" : "no") << "\n";
    return emit(j, out.str(), cli.as_json, r.matches ? 0 : 1);
}

int cmd_verify(const Cli& cli) {
    auto cases = run_corpus();
    json j{{"schema", kSchema}, {"command", "verify"}};
    json arr = json::array();
    std::ostringstream out;
    int passed = 0;
    for (const auto& c : cases) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << "  -- " << c.detail;
        out << "\n";
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (c.pass) ++passed;
    }
    out << "summary: " << passed << "/" << cases.size() << " passed\n";
    j["cases"] = arr;
    j["passed"] = passed;
    j["total"] = cases.size();
    return emit(j, out.str(), cli.as_json, passed == static_cast<int>(cases.size()) ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with quiver words, module series and torsionfree classes"};
    app.require_subcommand(1);
    Cli cli;

    auto add_quiver = [&](CLI::App* sub) { sub->add_option("--quiver", cli.quiver_path, "quiver file")->required(); };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("--word", cli.word_text, "space separated vertex indices")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cli.as_json, "machine readable report"); };

    auto* check = app.add_subcommand("check", "reducedness and sortable block structure");
    add_quiver(check);
    add_word(check);
    check->add_option("--coxeter", cli.coxeter_text, "Coxeter word for the sortable test");
    add_json(check);

    auto* layers = app.add_subcommand("layers", "layer dimension vectors of a reduced word");
    add_quiver(layers);
    add_word(layers);
    add_json(layers);

    auto* chain = app.add_subcommand("chain", "module series of a nested-block word");
    add_quiver(chain);
    add_word(chain);
    chain->add_option("--coxeter", cli.coxeter_text, "admissible Coxeter word")->required();
    chain->add_option("--engine", cli.engine, "u, t or both")->check(CLI::IsMember({"u", "t", "both"}));
    add_json(chain);

    auto* subcat = app.add_subcommand("subcat", "tilting member and its submodule closure");
    add_quiver(subcat);
    add_word(subcat);
    subcat->add_option("--coxeter", cli.coxeter_text, "admissible Coxeter word")->required();
    subcat->add_option("--bound", cli.bound, "dimension bound for the enumeration");
    subcat->add_option("--dump-tw", cli.dump_path, "write the tilting summands to a module file");
    add_json(subcat);

    auto* recover = app.add_subcommand("recover", "find the word matching a tilting module");
    add_quiver(recover);
    recover->add_option("--coxeter", cli.coxeter_text, "admissible Coxeter word")->required();
    recover->add_option("--modules", cli.modules_path, "module file with the tilting summands")->required();
    recover->add_option("--bound", cli.bound, "dimension bound for the enumeration");
    add_json(recover);

    auto* explore = app.add_subcommand("explore", "summand exchange walk along a word");
    add_quiver(explore);
    add_word(explore);
    explore->add_option("--dump-tw", cli.dump_path, "write the final tilting summands to a module file");
    add_json(explore);

    auto* count = app.add_subcommand("count", "sortable elements vs torsionfree classes (Dynkin)");
    add_quiver(count);
    count->add_option("--coxeter", cli.coxeter_text, "admissible Coxeter word")->required();
    add_json(count);

    auto* verify = app.add_subcommand("verify", "run the bundled worked-example corpus");
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(cli);
        if (layers->parsed()) return cmd_layers(cli);
        if (chain->parsed()) return cmd_chain(cli);
        if (subcat->parsed()) return cmd_subcat(cli);
        if (recover->parsed()) return cmd_recover(cli);
        if (explore->parsed()) return cmd_explore(cli);
        if (count->parsed()) return cmd_count(cli);
        if (verify->parsed()) return cmd_verify(cli);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
