#include "pathsets/graph_io.hpp"

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pathsets/errors.hpp"

namespace pathsets {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Presentation parse_graph_file(std::istream& in) {
    bool saw_alphabet = false;
    bool saw_vertices = false;
    bool saw_initial = false;
    std::vector<std::string> alphabet_names;
    std::vector<std::string> vertex_names;
    std::string initial_name;
    bool has_initial_name = false;
    std::vector<std::tuple<std::string, std::string, std::string>> edge_triples;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens.front();
        auto rest = [&] { return std::vector<std::string>(tokens.begin() + 1, tokens.end()); };
        if (head == "alphabet:") {
            if (saw_alphabet)
                throw ValidationError("Parse", "line " + std::to_string(lineno) + ": repeated alphabet: line");
            saw_alphabet = true;
            alphabet_names = rest();
        } else if (head == "vertices:") {
            if (saw_vertices)
                throw ValidationError("Parse", "line " + std::to_string(lineno) + ": repeated vertices: line");
            saw_vertices = true;
            vertex_names = rest();
        } else if (head == "initial:") {
            if (saw_initial)
                throw ValidationError("Parse", "line " + std::to_string(lineno) + ": repeated initial: line");
            saw_initial = true;
            auto names = rest();
            if (names.size() > 1)
                throw ValidationError("Parse",
                                      "line " + std::to_string(lineno) + ": initial: takes at most one vertex");
            if (!names.empty()) {
                initial_name = names.front();
                has_initial_name = true;
            }
        } else if (head == "edge:") {
            if (tokens.size() != 4)
                throw ValidationError("Parse", "line " + std::to_string(lineno) +
                                                   ": edge: takes source, symbol, destination");
            edge_triples.emplace_back(tokens[1], tokens[2], tokens[3]);
        } else {
            throw ValidationError("Parse", "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
        }
    }
    if (!saw_alphabet) throw ValidationError("Parse", "missing alphabet: line");
    if (!saw_vertices) throw ValidationError("Parse", "missing vertices: line");
    if (!saw_initial) throw ValidationError("Parse", "missing initial: line");
    if (!has_initial_name && !vertex_names.empty())
        throw ValidationError("Parse", "initial: names no vertex but vertices are declared");

    Alphabet alphabet(alphabet_names);
    return validate(alphabet, vertex_names, edge_triples, has_initial_name ? initial_name : std::string());
}

Presentation parse_graph_file_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

std::string print_graph_file(const Presentation& p) {
    std::ostringstream out;
    out << "alphabet:";
    for (Symbol a = 0; a < p.alphabet().size(); ++a) out << ' ' << p.alphabet().name(a);
    out << '\n';
    out << "vertices:";
    for (const std::string& name : p.vertex_names()) out << ' ' << name;
    out << '\n';
    out << "initial:";
    if (!p.is_empty()) out << ' ' << p.vertex_name(p.initial());
    out << '\n';
    for (const Edge& e : p.edges())
        out << "edge: " << p.vertex_name(e.src) << ' ' << p.alphabet().name(e.sym) << ' ' << p.vertex_name(e.dst)
            << '\n';
    return out.str();
}

std::string to_dot(const Presentation& p) {
    std::ostringstream out;
    out << "digraph pathset {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < p.vertex_count(); ++v) {
        out << "  \"" << escape_dot(p.vertex_name(v)) << "\"";
        if (v == p.initial()) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const Edge& e : p.edges())
        out << "  \"" << escape_dot(p.vertex_name(e.src)) << "\" -> \"" << escape_dot(p.vertex_name(e.dst))
            << "\" [label=\"" << escape_dot(p.alphabet().name(e.sym)) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace pathsets
