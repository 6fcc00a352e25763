#include "sofic/io.hpp"

#include <map>
#include <sstream>

#include "sofic/error.hpp"

namespace sofic {
namespace {

const Json& member(const Json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(ErrorKind::input, std::string("malformed document: missing \"") + key + "\"");
    }
    return *it;
}

std::string string_of(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw Error(ErrorKind::input, std::string("malformed document: ") + what + " must be a string");
    }
    return j.get<std::string>();
}

}  // namespace

Presentation presentation_from_json(const Json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::input, "malformed document: expected an object");
    }
    std::vector<std::string> symbols;
    const auto& alphabet = member(doc, "alphabet");
    if (!alphabet.is_array()) {
        throw Error(ErrorKind::input, "malformed document: alphabet must be an array");
    }
    for (const auto& s : alphabet) {
        symbols.push_back(string_of(s, "symbol"));
    }
    Alphabet sigma(std::move(symbols));

    auto sidedness = Sidedness::two_sided;
    if (auto it = doc.find("sidedness"); it != doc.end()) {
        auto s = string_of(*it, "sidedness");
        if (s == "one-sided") {
            sidedness = Sidedness::one_sided;
        } else if (s != "two-sided") {
            throw Error(ErrorKind::input, "malformed document: unknown sidedness '" + s + "'");
        }
    }

    std::vector<std::string> vertices;
    const auto& vs = member(doc, "vertices");
    if (!vs.is_array()) {
        throw Error(ErrorKind::input, "malformed document: vertices must be an array");
    }
    for (const auto& v : vs) {
        vertices.push_back(string_of(v, "vertex"));
    }
    std::map<std::string, VertexId> ids;
    for (VertexId i = 0; i < vertices.size(); ++i) {
        if (!ids.emplace(vertices[i], i).second) {
            throw Error(ErrorKind::input, "duplicate vertex name '" + vertices[i] + "'");
        }
    }
    auto vertex = [&](const Json& j) {
        auto name = string_of(j, "edge endpoint");
        auto it = ids.find(name);
        if (it == ids.end()) {
            throw Error(ErrorKind::input, "unknown vertex '" + name + "'");
        }
        return it->second;
    };

    std::vector<Edge> edges;
    const auto& es = member(doc, "edges");
    if (!es.is_array()) {
        throw Error(ErrorKind::input, "malformed document: edges must be an array");
    }
    for (const auto& e : es) {
        if (!e.is_object()) {
            throw Error(ErrorKind::input, "malformed document: edge must be an object");
        }
        auto src = vertex(member(e, "src"));
        auto dst = vertex(member(e, "dst"));
        auto label = sigma.index(string_of(member(e, "label"), "label"));
        edges.push_back({src, dst, label});
    }
    return Presentation(std::move(sigma), std::move(vertices), std::move(edges), sidedness);
}

Presentation parse_presentation(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::input, std::string("malformed document: ") + e.what());
    }
    return presentation_from_json(doc);
}

Json to_json(const Presentation& p) {
    Json doc;
    doc["alphabet"] = p.alphabet().symbols();
    doc["sidedness"] = to_string(p.sidedness());
    doc["vertices"] = p.vertex_names();
    Json edges = Json::array();
    for (const auto& e : p.edges()) {
        edges.push_back({{"src", p.vertex_name(e.src)},
                         {"dst", p.vertex_name(e.dst)},
                         {"label", p.alphabet().name(e.label)}});
    }
    doc["edges"] = std::move(edges);
    return doc;
}

std::string to_json_text(const Presentation& p) { return to_json(p).dump(2) + "\n"; }

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string to_dot(const Presentation& p, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph " << dot_quote(graph_name) << " {\n";
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        out << "  n" << v << " [label=" << dot_quote(p.vertex_name(v)) << "];\n";
    }
    for (const auto& e : p.edges()) {
        out << "  n" << e.src << " -> n" << e.dst << " [label=" << dot_quote(p.alphabet().name(e.label))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sofic
