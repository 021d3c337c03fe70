// Copyright 2026 The graphdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphdiag/graph_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace graphdiag {

namespace {

int parse_int(const std::string &text, const std::string &context) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("graph spec '" + context + "': '" + text + "' is not an integer");
    }
    return v;
}

}  // namespace

Graph graph_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("graph JSON is malformed: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw std::invalid_argument("graph JSON needs an integer field \"n\"");
    }
    int n = doc["n"].get<int>();
    if (n < 1 || n > MAX_BITS) {
        throw std::invalid_argument("graph JSON: \"n\" must lie in [1, 63]");
    }
    Graph g(n);
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
            throw std::invalid_argument("graph JSON: \"edges\" must be an array of [i, j] pairs");
        }
        for (const auto &e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                throw std::invalid_argument("graph JSON: every edge must be a pair of integers [i, j]");
            }
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    return g;
}

std::string graph_to_json(const Graph &g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.num_vertices();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto &[a, b] : g.edges()) {
        doc["edges"].push_back({a, b});
    }
    return doc.dump();
}

Graph parse_graph_spec(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string family = spec.substr(0, colon);
        std::string arg = spec.substr(colon + 1);
        if (family == "chain") {
            return Graph::chain(parse_int(arg, spec));
        }
        if (family == "ring") {
            return Graph::ring(parse_int(arg, spec));
        }
        if (family == "star") {
            return Graph::star(parse_int(arg, spec));
        }
        if (family == "lattice") {
            auto x = arg.find('x');
            if (x == std::string::npos) {
                throw std::invalid_argument("graph spec '" + spec + "': lattice needs MxK, e.g. lattice:3x3");
            }
            return Graph::lattice(parse_int(arg.substr(0, x), spec), parse_int(arg.substr(x + 1), spec));
        }
        if (family == "tree") {
            std::vector<int> parents;
            std::stringstream ss(arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                parents.push_back(parse_int(item, spec));
            }
            return Graph::tree(parents);
        }
        if (family != "json" && family.size() > 1) {
            throw std::invalid_argument("unknown graph family '" + family +
                                        "'; use chain:N, ring:N, star:N, lattice:MxK, tree:<parents> or a JSON file");
        }
    }
    std::ifstream in(spec);
    if (!in) {
        throw std::invalid_argument("graph '" + spec +
                                    "' is neither a known family (chain:N, ring:N, star:N, lattice:MxK, tree:<parents>) "
                                    "nor a readable JSON file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

void write_config_header(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &config) {
    for (const auto &[k, v] : config) {
        out << "# " << k << "=" << v << "\n";
    }
}

}  // namespace graphdiag
