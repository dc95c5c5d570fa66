#include <homlab/io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homlab {

FiniteGraph read_dimacs(std::istream & in)
{
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream iss{line};
        std::string kind;
        iss >> kind;
        if (kind == "p") {
            std::string fmt;
            int m;
            iss >> fmt >> n >> m;
            if (!iss || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw std::invalid_argument{"dimacs: bad header at line " + std::to_string(ln)};
        }
        else if (kind == "e") {
            int u, v;
            iss >> u >> v;
            if (!iss || n < 0)
                throw std::invalid_argument{"dimacs: bad edge at line " + std::to_string(ln)};
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0)
        throw std::invalid_argument{"dimacs: missing problem line"};
    return FiniteGraph{n, std::move(edges)};
}

FiniteGraph read_dimacs_file(const std::string & path)
{
    std::ifstream in{path};
    if (!in)
        throw std::runtime_error{"cannot open " + path};
    return read_dimacs(in);
}

void write_dimacs(std::ostream & out, const FiniteGraph & g)
{
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto & [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

namespace {
    void add_roles(nlohmann::json & j, const RoleMap & roles)
    {
        if (!roles.empty())
            j["roles"] = roles;
    }
}

nlohmann::json graph_to_json(const FiniteGraph & g, const RoleMap & roles)
{
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto & [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    add_roles(j, roles);
    return j;
}

nlohmann::json graph_to_json(const EdgeLabeledGraph & g, const RoleMap & roles)
{
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["delta"] = g.delta();
    auto edges = nlohmann::json::array();
    for (const auto & e : g.labeled_edges())
        edges.push_back({e.u, e.v, e.label});
    j["edges"] = std::move(edges);
    add_roles(j, roles);
    return j;
}

FiniteGraph graph_from_json(const nlohmann::json & j)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto & e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return FiniteGraph{j.at("n").get<int>(), std::move(edges)};
}

EdgeLabeledGraph labeled_graph_from_json(const nlohmann::json & j)
{
    std::vector<LabeledEdge> edges;
    for (const auto & e : j.at("edges")) {
        if (e.size() < 3)
            throw std::invalid_argument{"labelled graph JSON requires [u,v,label] edges"};
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    }
    return EdgeLabeledGraph{j.at("n").get<int>(), j.at("delta").get<int>(), std::move(edges)};
}

namespace {
    void write_dot_impl(std::ostream & out, int n, const std::vector<LabeledEdge> & edges,
        bool labelled, const std::map<int, std::string> & vertex_annot)
    {
        out << "graph G {\n";
        for (int v = 0; v < n; ++v) {
            auto it = vertex_annot.find(v);
            if (it != vertex_annot.end())
                out << "  " << v << " [label=\"" << it->second << "\"];\n";
            else
                out << "  " << v << ";\n";
        }
        for (const auto & e : edges) {
            out << "  " << e.u << " -- " << e.v;
            if (labelled)
                out << " [label=\"" << e.label << "\"]";
            out << ";\n";
        }
        out << "}\n";
    }
}

void write_dot(std::ostream & out, const FiniteGraph & g, const std::map<int, std::string> & vertex_annot)
{
    std::vector<LabeledEdge> edges;
    for (const auto & [u, v] : g.edges())
        edges.push_back({u, v, 0});
    write_dot_impl(out, g.vertex_count(), edges, false, vertex_annot);
}

void write_dot(std::ostream & out, const EdgeLabeledGraph & g, const std::map<int, std::string> & vertex_annot)
{
    write_dot_impl(out, g.vertex_count(), g.labeled_edges(), true, vertex_annot);
}

namespace {
    bool has_suffix(const std::string & s, const std::string & suf)
    {
        return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
    }

    nlohmann::json load_json(const std::string & path)
    {
        std::ifstream in{path};
        if (!in)
            throw std::runtime_error{"cannot open " + path};
        return nlohmann::json::parse(in);
    }
}

FiniteGraph load_graph(const std::string & path)
{
    if (has_suffix(path, ".json"))
        return graph_from_json(load_json(path));
    return read_dimacs_file(path);
}

EdgeLabeledGraph load_labeled_graph(const std::string & path)
{
    if (!has_suffix(path, ".json"))
        throw std::invalid_argument{"labelled graphs are stored as JSON: " + path};
    return labeled_graph_from_json(load_json(path));
}

}
