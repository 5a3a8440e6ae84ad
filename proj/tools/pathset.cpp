// Command-line front end for the path set algebra library.
//
// Exit codes: 0 on success (and for predicates answering true), 1 for
// predicates answering false, 2 for usage, parse, or validation errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathsets/decimation.hpp"
#include "pathsets/errors.hpp"
#include "pathsets/factorization.hpp"
#include "pathsets/graph_io.hpp"
#include "pathsets/interleaving.hpp"
#include "pathsets/oracle.hpp"
#include "pathsets/path_set.hpp"

using nlohmann::json;

namespace {

pathsets::Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pathsets::Error("cannot open '" + path + "'");
    return pathsets::parse_graph_file(in);
}

pathsets::PathSet load_path_set(const std::string& path) {
    return pathsets::minimize(load_presentation(path));
}

json graph_json(const pathsets::Presentation& p) {
    json edges = json::array();
    for (const pathsets::Edge& e : p.edges())
        edges.push_back({p.vertex_name(e.src), p.alphabet().name(e.sym), p.vertex_name(e.dst)});
    json out;
    out["alphabet"] = p.alphabet().names();
    out["vertices"] = p.vertex_names();
    out["initial"] = p.is_empty() ? json(nullptr) : json(p.vertex_name(p.initial()));
    out["edges"] = std::move(edges);
    return out;
}

void emit_json(const std::string& op, json result) {
    json out;
    out["op"] = op;
    out["result"] = std::move(result);
    std::cout << out.dump(2) << '\n';
}

void emit_graph(const std::string& op, const pathsets::Presentation& p, bool as_json) {
    if (as_json)
        emit_json(op, graph_json(p));
    else
        std::cout << pathsets::print_graph_file(p);
}

void emit_graph_list(const std::string& op, const std::vector<pathsets::PathSet>& sets, bool as_json) {
    if (as_json) {
        json list = json::array();
        for (const pathsets::PathSet& s : sets) list.push_back(graph_json(s.presentation()));
        emit_json(op, std::move(list));
        return;
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) std::cout << "---\n";
        std::cout << "# " << i << '\n' << pathsets::print_graph_file(sets[i].presentation());
    }
}

int emit_bool(const std::string& op, bool value, bool as_json) {
    if (as_json)
        emit_json(op, value);
    else
        std::cout << (value ? "true" : "false") << '\n';
    return value ? 0 : 1;
}

std::string format_symbol_sets(const std::vector<std::set<pathsets::Symbol>>& sets,
                               const pathsets::Alphabet& alphabet) {
    std::string out = "[";
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) out += " ";
        out += "{";
        bool first = true;
        for (pathsets::Symbol a : sets[i]) {
            if (!first) out += ",";
            first = false;
            out += alphabet.name(a);
        }
        out += "}";
    }
    out += "]";
    return out;
}

json symbol_sets_json(const std::vector<std::set<pathsets::Symbol>>& sets, const pathsets::Alphabet& alphabet) {
    json out = json::array();
    for (const auto& s : sets) {
        json names = json::array();
        for (pathsets::Symbol a : s) names.push_back(alphabet.name(a));
        out.push_back(std::move(names));
    }
    return out;
}

void print_tree(const pathsets::FactorizationTree& node, int indent) {
    std::cout << std::string(static_cast<size_t>(indent) * 2, ' ');
    const int m = node.value.vertex_count();
    switch (node.status) {
        case pathsets::FactorizationTree::Status::Factored:
            std::cout << "factored n=" << node.n << " (" << m << " vertices)\n";
            break;
        case pathsets::FactorizationTree::Status::Indecomposable:
            std::cout << "indecomposable (" << m << " vertices)\n";
            break;
        case pathsets::FactorizationTree::Status::FrozenLeveled:
            std::cout << "leveled (" << m << " vertices) preperiod="
                      << format_symbol_sets(node.profile->preperiod, node.value.alphabet()) << " period="
                      << format_symbol_sets(node.profile->period, node.value.alphabet()) << '\n';
            break;
    }
    for (const pathsets::FactorizationTree& child : node.children) print_tree(child, indent + 1);
}

json tree_json(const pathsets::FactorizationTree& node) {
    json out;
    out["vertices"] = node.value.vertex_count();
    switch (node.status) {
        case pathsets::FactorizationTree::Status::Factored: {
            out["status"] = "factored";
            out["n"] = node.n;
            json children = json::array();
            for (const pathsets::FactorizationTree& child : node.children) children.push_back(tree_json(child));
            out["children"] = std::move(children);
            break;
        }
        case pathsets::FactorizationTree::Status::Indecomposable:
            out["status"] = "indecomposable";
            break;
        case pathsets::FactorizationTree::Status::FrozenLeveled:
            out["status"] = "leveled";
            out["preperiod"] = symbol_sets_json(node.profile->preperiod, node.value.alphabet());
            out["period"] = symbol_sets_json(node.profile->period, node.value.alphabet());
            break;
    }
    return out;
}

std::vector<pathsets::WordBlock> sorted_blocks(const std::set<pathsets::WordBlock>& blocks) {
    std::vector<pathsets::WordBlock> out(blocks.begin(), blocks.end());
    std::stable_sort(out.begin(), out.end(), [](const pathsets::WordBlock& a, const pathsets::WordBlock& b) {
        return a.size() < b.size();
    });
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra of path sets: minimization, decimation, interleaving, factorization"};
    app.require_subcommand(1);

    bool json_out = false;
    std::string file_a;
    std::string file_b;
    std::vector<std::string> files;
    int arg_j = 0;
    int arg_n = 0;
    int arg_depth = 0;
    int exit_code = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_out, "emit a JSON object instead of text");
        return sub;
    };
    auto need_file = [&](CLI::App* sub) {
        sub->add_option("file", file_a, "graph file")->required();
        return sub;
    };

    CLI::App* c_minimize = need_file(common(app.add_subcommand("minimize", "canonical minimal presentation")));
    c_minimize->callback([&] { emit_graph("minimize", load_path_set(file_a).presentation(), json_out); });

    CLI::App* c_eq = common(app.add_subcommand("eq", "language equality of two graph files"));
    c_eq->add_option("a", file_a, "first graph file")->required();
    c_eq->add_option("b", file_b, "second graph file")->required();
    c_eq->callback([&] {
        exit_code = emit_bool("eq", pathsets::equals(load_path_set(file_a), load_path_set(file_b)), json_out);
    });

    CLI::App* c_blocks = need_file(common(app.add_subcommand("blocks", "initial blocks up to a depth")));
    c_blocks->add_option("-L,--depth", arg_depth, "maximum block length")->required()->check(CLI::NonNegativeNumber);
    c_blocks->callback([&] {
        pathsets::Presentation p = load_presentation(file_a);
        auto blocks = sorted_blocks(pathsets::initial_blocks(p, arg_depth));
        if (json_out) {
            json list = json::array();
            for (const pathsets::WordBlock& w : blocks) {
                json word = json::array();
                for (pathsets::Symbol a : w) word.push_back(p.alphabet().name(a));
                list.push_back(std::move(word));
            }
            emit_json("blocks", std::move(list));
            return;
        }
        for (const pathsets::WordBlock& w : blocks) {
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << p.alphabet().name(w[i]);
            }
            std::cout << '\n';
        }
    });

    CLI::App* c_shift = need_file(common(app.add_subcommand("shift", "shift S^j")));
    c_shift->add_option("-j,--steps", arg_j, "shift amount")->required()->check(CLI::NonNegativeNumber);
    c_shift->callback(
        [&] { emit_graph("shift", pathsets::shift(load_path_set(file_a), arg_j).presentation(), json_out); });

    CLI::App* c_decimate = need_file(common(app.add_subcommand("decimate", "decimation psi_{j,n}")));
    c_decimate->add_option("-j,--offset", arg_j, "position offset (default 0)")->check(CLI::NonNegativeNumber);
    c_decimate->add_option("-n,--level", arg_n, "decimation level")->required()->check(CLI::PositiveNumber);
    c_decimate->callback([&] {
        emit_graph("decimate",
                   pathsets::decimate(load_path_set(file_a), pathsets::DecimationIndex{arg_j, arg_n}).presentation(),
                   json_out);
    });

    CLI::App* c_decset = need_file(common(app.add_subcommand("decset", "full decimation set")));
    c_decset->callback(
        [&] { emit_graph_list("decset", pathsets::full_decimation_set(load_path_set(file_a)), json_out); });

    CLI::App* c_kernel = need_file(common(app.add_subcommand("kernel", "n-kernel")));
    c_kernel->add_option("-n,--level", arg_n, "kernel level (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
    c_kernel->callback(
        [&] { emit_graph_list("kernel", pathsets::kernel(load_path_set(file_a), arg_n), json_out); });

    CLI::App* c_interleave = common(app.add_subcommand("interleave", "n-fold interleaving of graph files"));
    c_interleave->add_option("files", files, "component graph files")->required()->expected(-1);
    c_interleave->callback([&] {
        std::vector<pathsets::PathSet> components;
        components.reserve(files.size());
        for (const std::string& f : files) components.push_back(load_path_set(f));
        emit_graph("interleave", pathsets::interleave(components).presentation(), json_out);
    });

    CLI::App* c_closure = need_file(common(app.add_subcommand("closure", "n-fold interleaving closure")));
    c_closure->add_option("-n,--level", arg_n, "closure level")->required()->check(CLI::PositiveNumber);
    c_closure->callback([&] {
        emit_graph("closure", pathsets::interleaving_closure(load_path_set(file_a), arg_n).presentation(), json_out);
    });

    CLI::App* c_factorizable = need_file(common(app.add_subcommand("factorizable", "n-factorizability predicate")));
    c_factorizable->add_option("-n,--level", arg_n, "level")->required()->check(CLI::PositiveNumber);
    c_factorizable->callback([&] {
        exit_code = emit_bool("factorizable", pathsets::is_n_factorizable(load_path_set(file_a), arg_n), json_out);
    });

    CLI::App* c_factors = need_file(common(app.add_subcommand("factors", "interleaving factors")));
    c_factors->add_option("-n,--level", arg_n, "factor at one level (otherwise the whole factor set)")
        ->check(CLI::PositiveNumber);
    c_factors->callback([&] {
        pathsets::PathSet p = load_path_set(file_a);
        if (arg_n > 0)
            emit_graph_list("factors", pathsets::interleaving_factors(p, arg_n), json_out);
        else
            emit_graph_list("factors", pathsets::factor_set(p), json_out);
    });

    CLI::App* c_exponent = need_file(common(app.add_subcommand("exponent", "factorization exponent")));
    c_exponent->callback([&] {
        pathsets::FactorizationExponent e = pathsets::factorization_exponent(load_path_set(file_a));
        if (json_out)
            emit_json("exponent", e.infinite ? json("infinite") : json(e.f));
        else
            std::cout << (e.infinite ? std::string("infinite") : std::to_string(e.f)) << '\n';
    });

    CLI::App* c_envelope = need_file(common(app.add_subcommand("envelope", "leveled envelope")));
    c_envelope->callback(
        [&] { emit_graph("envelope", pathsets::leveled_envelope(load_path_set(file_a)).presentation(), json_out); });

    CLI::App* c_leveled = need_file(common(app.add_subcommand("leveled", "leveledness predicate")));
    c_leveled->callback(
        [&] { exit_code = emit_bool("leveled", pathsets::is_leveled(load_path_set(file_a)), json_out); });

    CLI::App* c_missing = need_file(common(app.add_subcommand("missing", "smallest missing configuration")));
    c_missing->callback([&] {
        pathsets::PathSet p = load_path_set(file_a);
        auto cert = pathsets::missing_configuration(p);
        if (json_out) {
            if (!cert) {
                emit_json("missing", nullptr);
                return;
            }
            json block = json::array();
            for (pathsets::Symbol a : cert->block) block.push_back(p.alphabet().name(a));
            json result;
            result["k"] = cert->k;
            result["l"] = cert->l;
            result["block"] = std::move(block);
            emit_json("missing", std::move(result));
            return;
        }
        if (!cert) {
            std::cout << "none\n";
            return;
        }
        std::cout << "k=" << cert->k << " l=" << cert->l << " block=";
        for (size_t i = 0; i < cert->block.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << p.alphabet().name(cert->block[i]);
        }
        std::cout << '\n';
    });

    CLI::App* c_tree = need_file(common(app.add_subcommand("tree", "complete factorization tree")));
    c_tree->callback([&] {
        pathsets::FactorizationTree t = pathsets::complete_factorization(load_path_set(file_a));
        if (json_out)
            emit_json("tree", tree_json(t));
        else
            print_tree(t, 0);
    });

    CLI::App* c_selfloop = need_file(common(app.add_subcommand("selfloop", "initial self-loop predicate")));
    c_selfloop->callback(
        [&] { exit_code = emit_bool("selfloop", pathsets::self_loop_criterion(load_path_set(file_a)), json_out); });

    CLI::App* c_dot = need_file(common(app.add_subcommand("dot", "DOT rendering of the graph file as given")));
    c_dot->callback([&] {
        pathsets::Presentation p = load_presentation(file_a);
        if (json_out)
            emit_json("dot", pathsets::to_dot(p));
        else
            std::cout << pathsets::to_dot(p);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const pathsets::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
