// Copyright 2026 The zzsim Authors
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

#include <fstream>
#include <sstream>

#include "zzsim/cli.h"
#include "zzsim/errors.h"

namespace zzsim::cli {

void validate(const Config &c) {
    if (!(c.tol > 0)) {
        throw ValidationError("config: tol must be positive");
    }
    for (auto [name, v] : {std::pair<const char *, int>{"lp_cap_n", c.lp_cap_n},
                           {"exact_coloring_edge_cap", c.exact_coloring_edge_cap},
                           {"sim_cap_diagonal", c.sim_cap_diagonal},
                           {"sim_cap_general", c.sim_cap_general}}) {
        if (v < 2) {
            throw ValidationError(std::string("config: ") + name + " must be at least 2");
        }
    }
}

Config parse_config(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("config: expected a JSON object");
    }
    Config c;
    for (const auto &[key, value] : j.items()) {
        try {
            if (key == "tol") {
                c.tol = value.get<double>();
            } else if (key == "lp_cap_n") {
                c.lp_cap_n = value.get<int>();
            } else if (key == "exact_coloring_edge_cap") {
                c.exact_coloring_edge_cap = value.get<int>();
            } else if (key == "sim_cap_diagonal") {
                c.sim_cap_diagonal = value.get<int>();
            } else if (key == "sim_cap_general") {
                c.sim_cap_general = value.get<int>();
            } else {
                throw ValidationError("config: unknown key \"" + key + "\"");
            }
        } catch (const Json::type_error &) {
            throw ValidationError("config: key \"" + key + "\" has the wrong type");
        }
    }
    validate(c);
    return c;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Config load_config(const std::string &path) {
    return parse_config(read_file(path));
}

}  // namespace zzsim::cli
