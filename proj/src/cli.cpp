#include "sofic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sofic/corpus.hpp"
#include "sofic/covers.hpp"
#include "sofic/decisions.hpp"
#include "sofic/error.hpp"
#include "sofic/io.hpp"
#include "sofic/language.hpp"
#include "sofic/moves.hpp"
#include "sofic/structure.hpp"
#include "sofic/suite.hpp"

namespace sofic::cli {
namespace {

Presentation load(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::input, "cannot read '" + path + "'");
        buffer << in.rdbuf();
    }
    return parse_presentation(buffer.str());
}

CoverKind kind_option(const std::string& s) {
    auto k = parse_cover_kind(s);
    if (!k) throw Error(ErrorKind::input, "unknown cover kind '" + s + "'");
    return *k;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sofic shift presentations: covers, decisions, structure and flow moves", "sofic"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false, as_dot = false;

    auto* inspect_cmd = app.add_subcommand("inspect", "Decision report for a presentation");
    inspect_cmd->add_option("file", file, "Presentation document ('-' for stdin)")->required();
    inspect_cmd->add_flag("--json", as_json, "JSON instead of a table");

    std::string kind = "krieger";
    auto* cover_cmd = app.add_subcommand("cover", "Build a cover");
    cover_cmd->add_option("file", file)->required();
    cover_cmd->add_option("--kind", kind, "krieger, past-set, fischer-left, fischer-right, krieger-right")->required();
    auto* cover_dot = cover_cmd->add_flag("--dot", as_dot, "Graphviz output");
    cover_cmd->add_flag("--json", as_json, "JSON output (default)")->excludes(cover_dot);

    std::string of_cover;
    auto* pc_cmd = app.add_subcommand("pc", "Proper communication graph");
    pc_cmd->add_option("file", file)->required();
    pc_cmd->add_option("--of-cover", of_cover, "Use this cover of the input instead of the input");
    pc_cmd->add_flag("--dot", as_dot, "Graphviz output");

    std::string symbol, star = "*";
    auto* expand_cmd = app.add_subcommand("expand", "Symbol expansion");
    expand_cmd->add_option("file", file)->required();
    expand_cmd->add_option("--symbol", symbol, "Symbol to expand")->required();
    expand_cmd->add_option("--new", star, "Inserted symbol");

    std::size_t order = 2;
    auto* higher_cmd = app.add_subcommand("higher-block", "Higher block recoding");
    higher_cmd->add_option("file", file)->required();
    higher_cmd->add_option("-n", order, "Block length")->check(CLI::Range(2, 16));

    std::string word;
    auto* word_cmd = app.add_subcommand("word", "Membership and intrinsic synchronisation of a word");
    word_cmd->add_option("file", file)->required();
    word_cmd->add_option("word", word, "Word, e.g. 1001 or 'a b'")->required();

    bool use_corpus = false;
    std::size_t random_count = 0;
    std::uint64_t seed = 1;
    auto* check_cmd = app.add_subcommand("check", "Property suite");
    auto* check_file = check_cmd->add_option("file", file);
    auto* check_corpus_flag = check_cmd->add_flag("--corpus", use_corpus, "Built-in corpus with expectations");
    auto* check_random_opt = check_cmd->add_option("--random", random_count, "Number of random presentations");
    check_cmd->add_option("--seed", seed, "First random seed");
    RandomSpec shape;
    check_cmd->add_option("--max-vertices", shape.max_vertices, "Random graph size bound")->check(CLI::Range(1, 12));
    check_cmd->add_option("--max-symbols", shape.max_symbols, "Random alphabet size bound")->check(CLI::Range(1, 8));
    check_cmd->add_option("--density", shape.edge_density, "Random edge probability")->check(CLI::Range(0.01, 1.0));
    check_cmd->add_flag("--left-resolving", shape.left_resolving, "Draw left-resolving random graphs");
    check_file->excludes(check_corpus_flag)->excludes(check_random_opt);
    check_corpus_flag->excludes(check_random_opt);

    bool list = false;
    std::string show;
    auto* corpus_cmd = app.add_subcommand("corpus", "Built-in examples");
    auto* list_flag = corpus_cmd->add_flag("--list", list, "Names and descriptions");
    corpus_cmd->add_option("--show", show, "Print an entry as a presentation document")->excludes(list_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*inspect_cmd) {
            auto p = load(file);
            auto report = inspect(p);
            if (as_json) {
                print(out, report_to_json(p, report));
            } else {
                out << report_to_table(report);
            }
        } else if (*cover_cmd) {
            auto c = build_cover(trim_essential(load(file)), kind_option(kind));
            if (as_dot) {
                out << cover_to_dot(c);
            } else {
                print(out, cover_to_json(c));
            }
        } else if (*pc_cmd) {
            auto p = trim_essential(load(file));
            if (!of_cover.empty()) p = build_cover(p, kind_option(of_cover)).graph;
            auto g = pc_graph(p);
            if (as_dot) {
                out << pc_to_dot(p, g);
            } else {
                print(out, pc_to_json(p, g));
            }
        } else if (*expand_cmd) {
            out << to_json_text(symbol_expand(load(file), symbol, star));
        } else if (*higher_cmd) {
            out << to_json_text(higher_block(trim_essential(load(file)), order));
        } else if (*word_cmd) {
            auto p = trim_essential(load(file));
            auto w = p.alphabet().parse_word(word);
            Json j{{"word", word}, {"block", contains_word(p, w)}};
            j["intrinsically_synchronising"] = j["block"].get<bool>() ? Json(is_intrinsically_synchronising(p, w))
                                                                      : Json(nullptr);
            print(out, j);
        } else if (*check_cmd) {
            CheckReport report;
            if (use_corpus) {
                report = check_corpus();
            } else if (random_count > 0) {
                report = check_random(random_count, seed, {}, shape);
            } else if (!file.empty()) {
                report = check_presentation(load(file), file);
            } else {
                err << "check: give a FILE, --corpus or --random N\n";
                return input_error;
            }
            print(out, check_report_to_json(report));
            if (!report.ok()) return violation;
        } else if (*corpus_cmd) {
            if (!show.empty()) {
                auto e = corpus_entry(show);
                if (!e) throw Error(ErrorKind::input, "no corpus entry '" + show + "'");
                out << to_json_text(e->presentation);
            } else {
                for (const auto& e : corpus()) {
                    out << e.name << "\t" << e.description << "\n";
                }
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::input:
            case ErrorKind::precondition: return input_error;
            case ErrorKind::resource_cap: return resource_cap;
            case ErrorKind::internal: return violation;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}

}  // namespace sofic::cli
