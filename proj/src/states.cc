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

#include "graphdiag/states.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "graphdiag/walsh_hadamard.h"

namespace graphdiag {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_model(const Graph &g, NoiseModel &model) {
    int n = g.num_vertices();
    std::visit(
        Overloaded{
            [](const Thermal &m) {
                if (!(m.s >= 0 && m.s < 1)) {
                    throw std::invalid_argument("thermal s must lie in [0, 1)");
                }
            },
            [n](const ThermalInhomogeneous &m) {
                if ((int)m.s.size() != n) {
                    throw std::invalid_argument("inhomogeneous model needs one s per vertex");
                }
                for (double v : m.s) {
                    if (!(v >= 0 && v < 1)) {
                        throw std::invalid_argument("inhomogeneous s values must lie in [0, 1)");
                    }
                }
            },
            [](const GlobalDepolarised &m) {
                if (!(m.alpha >= 0) || std::isinf(m.alpha)) {
                    throw std::invalid_argument("global depolarised alpha must be finite and >= 0");
                }
            },
            [](const LocalDepolarised &m) {
                if (!(m.p >= 0 && m.p <= 1)) {
                    throw std::invalid_argument("local depolarising p must lie in [0, 1]");
                }
            },
            [n](Explicit &m) {
                if (n > 26) {
                    throw std::invalid_argument("explicit tables limited to 26 qubits");
                }
                if (m.table.size() != (size_t{1} << n)) {
                    throw std::invalid_argument("explicit table needs 2^N entries");
                }
                if (!(m.table[0] > 0)) {
                    throw std::invalid_argument("explicit table entry for y = 0 must be positive");
                }
                double s0 = m.table[0];
                for (double &v : m.table) {
                    v /= s0;
                }
            },
        },
        model);
}

}  // namespace

DiagonalState::DiagonalState(Graph graph, NoiseModel model) : graph_(std::move(graph)), model_(std::move(model)) {
    check_model(graph_, model_);
}

DiagonalState DiagonalState::thermal(Graph g, double s) {
    return DiagonalState(std::move(g), Thermal{s});
}
DiagonalState DiagonalState::inhomogeneous(Graph g, std::vector<double> s) {
    return DiagonalState(std::move(g), ThermalInhomogeneous{std::move(s)});
}
DiagonalState DiagonalState::global_depolarised(Graph g, double alpha) {
    return DiagonalState(std::move(g), GlobalDepolarised{alpha});
}
DiagonalState DiagonalState::local_depolarised(Graph g, double p) {
    return DiagonalState(std::move(g), LocalDepolarised{p});
}
DiagonalState DiagonalState::explicit_table(Graph g, std::vector<double> table) {
    return DiagonalState(std::move(g), Explicit{std::move(table)});
}

double DiagonalState::coefficient(uint64_t y) const {
    int n = num_qubits();
    return std::visit(
        Overloaded{
            [&](const Thermal &m) { return std::pow(m.s, popcount(y)); },
            [&](const ThermalInhomogeneous &m) {
                double v = 1;
                for (uint64_t r = y; r; r &= r - 1) {
                    v *= m.s[std::countr_zero(r)];
                }
                return v;
            },
            [&](const GlobalDepolarised &m) {
                double dim = std::ldexp(1.0, n);
                return y == 0 ? 1.0 : m.alpha / (dim + m.alpha);
            },
            [&](const LocalDepolarised &m) {
                // Number of sites on which K_y acts non-trivially.
                uint64_t ay = graph_.adjacency_times(y);
                int support = popcount(y) + popcount(ay) - popcount(y & ay);
                return std::pow(1 - m.p, support);
            },
            [&](const Explicit &m) { return m.table[y]; },
        },
        model_);
}

double DiagonalState::coefficient(const BitString &y) const {
    if (y.n != num_qubits()) {
        throw std::invalid_argument("coefficient: string length does not match the graph");
    }
    return coefficient(y.bits);
}

std::vector<double> DiagonalState::coefficient_table() const {
    int n = num_qubits();
    if (n > 26) {
        throw std::invalid_argument("coefficient_table limited to 26 qubits");
    }
    std::vector<double> out(size_t{1} << n);
    for (uint64_t y = 0; y < out.size(); y++) {
        out[y] = coefficient(y);
    }
    return out;
}

std::vector<double> DiagonalState::spectrum() const {
    auto t = coefficient_table();
    walsh_hadamard(t);
    return t;
}

bool DiagonalState::is_physical(double rel_tol) const {
    if (num_qubits() > 20) {
        throw std::invalid_argument("is_physical limited to 20 qubits");
    }
    auto t = coefficient_table();
    double scale = 0;
    for (double v : t) {
        scale += std::fabs(v);
    }
    walsh_hadamard(t);
    for (double v : t) {
        if (v < -rel_tol * scale) {
            return false;
        }
    }
    return true;
}

std::string DiagonalState::describe() const {
    std::ostringstream out;
    out.precision(12);
    std::visit(Overloaded{
                   [&](const Thermal &m) { out << "thermal s=" << m.s; },
                   [&](const ThermalInhomogeneous &m) {
                       out << "inhomogeneous s=";
                       for (size_t k = 0; k < m.s.size(); k++) {
                           out << (k ? ";" : "") << m.s[k];
                       }
                   },
                   [&](const GlobalDepolarised &m) { out << "global-depolarised alpha=" << m.alpha; },
                   [&](const LocalDepolarised &m) { out << "local-depolarised p=" << m.p; },
                   [&](const Explicit &) { out << "explicit"; },
               },
               model_);
    return out.str();
}

std::vector<double> read_explicit_table_csv(std::istream &in, int n) {
    if (n < 1 || n > 26) {
        throw std::invalid_argument("explicit tables need 1 <= n <= 26");
    }
    std::vector<double> table(size_t{1} << n, 0.0);
    std::vector<bool> seen(table.size(), false);
    std::string line;
    int line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("explicit table line " + std::to_string(line_no) + ": expected 'bits,value'");
        }
        std::string key = line.substr(first, comma - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) {
            key.pop_back();
        }
        bool header = first_row;
        first_row = false;
        if (key.find_first_not_of("01") != std::string::npos) {
            if (header) {
                continue;
            }
            throw std::invalid_argument("explicit table line " + std::to_string(line_no) + ": '" + key + "' is not a bit string");
        }
        if ((int)key.size() != n) {
            throw std::invalid_argument(
                "explicit table line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " bits");
        }
        uint64_t y = BitString::from_string(key).bits;
        if (seen[y]) {
            throw std::invalid_argument("explicit table line " + std::to_string(line_no) + ": duplicate string " + key);
        }
        seen[y] = true;
        try {
            size_t used = 0;
            std::string rest = line.substr(comma + 1);
            table[y] = std::stod(rest, &used);
            if (rest.find_first_not_of(" \t\r", used) != std::string::npos) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("explicit table line " + std::to_string(line_no) + ": bad numeric value");
        }
    }
    return table;
}

std::vector<double> load_explicit_table_csv(const std::string &path, int n) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open explicit table '" + path + "'");
    }
    return read_explicit_table_csv(in, n);
}

bool Temperature::infinite() const {
    return std::isinf(t_over_delta);
}

Temperature Temperature::from_s(double s) {
    if (!(s >= 0 && s < 1)) {
        throw std::invalid_argument("s must lie in [0, 1)");
    }
    Temperature t;
    t.s = s;
    t.beta_delta = 2 * std::atanh(s);
    t.t_over_delta = s == 0 ? std::numeric_limits<double>::infinity() : 1 / t.beta_delta;
    return t;
}

Temperature Temperature::from_beta_delta(double beta_delta) {
    if (!(beta_delta >= 0) || std::isinf(beta_delta)) {
        throw std::invalid_argument("beta*Delta must be finite and >= 0");
    }
    Temperature t;
    t.beta_delta = beta_delta;
    t.s = std::tanh(beta_delta / 2);
    if (t.s >= 1) {
        throw std::invalid_argument("beta*Delta too large: s rounds to 1");
    }
    t.t_over_delta = beta_delta == 0 ? std::numeric_limits<double>::infinity() : 1 / beta_delta;
    return t;
}

Temperature Temperature::from_t_over_delta(double t_over_delta) {
    if (!(t_over_delta > 0)) {
        throw std::invalid_argument("T/Delta must be > 0");
    }
    if (std::isinf(t_over_delta)) {
        return from_s(0);
    }
    Temperature t = from_beta_delta(1 / t_over_delta);
    t.t_over_delta = t_over_delta;
    return t;
}

}  // namespace graphdiag
