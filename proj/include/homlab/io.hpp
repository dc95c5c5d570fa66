#pragma once

#include <homlab/labeled_graph.hpp>

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace homlab {

using RoleMap = std::map<std::string, std::vector<int>>;

// DIMACS .col (unlabelled, 1-indexed "e u v" lines)
FiniteGraph read_dimacs(std::istream & in);
FiniteGraph read_dimacs_file(const std::string & path);
void write_dimacs(std::ostream & out, const FiniteGraph & g);

// compact JSON schema: {"n": .., "edges": [[u,v] or [u,v,label]],
// "delta"?: .., "roles"?: {name: [ids]}}
nlohmann::json graph_to_json(const FiniteGraph & g, const RoleMap & roles = {});
nlohmann::json graph_to_json(const EdgeLabeledGraph & g, const RoleMap & roles = {});
FiniteGraph graph_from_json(const nlohmann::json & j);
EdgeLabeledGraph labeled_graph_from_json(const nlohmann::json & j);

// DOT; edge labels become edge attributes, vertex annotations optional
void write_dot(std::ostream & out, const FiniteGraph & g,
    const std::map<int, std::string> & vertex_annot = {});
void write_dot(std::ostream & out, const EdgeLabeledGraph & g,
    const std::map<int, std::string> & vertex_annot = {});

// loads either a .col file or a .json file by extension
FiniteGraph load_graph(const std::string & path);
EdgeLabeledGraph load_labeled_graph(const std::string & path);

}
