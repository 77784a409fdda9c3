// Copyright 2026 The Genie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "genie/llm/schema.hpp"

#include <algorithm>

namespace genie::llm {

using nlohmann::json;

namespace {

bool has_type(const json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "number") return v.is_number();
    if (type == "integer") return v.is_number_integer();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    return false;
}

std::optional<std::string> check(const json& v, const json& schema, const std::string& path) {
    if (auto t = schema.find("type"); t != schema.end() && !has_type(v, t->get<std::string>())) {
        return path + ": expected " + t->get<std::string>();
    }
    if (auto e = schema.find("enum"); e != schema.end()) {
        if (std::find(e->begin(), e->end(), v) == e->end()) return path + ": value not in enum";
    }
    if (v.is_number()) {
        const double d = v.get<double>();
        if (auto m = schema.find("minimum"); m != schema.end() && d < m->get<double>()) {
            return path + ": below minimum";
        }
        if (auto m = schema.find("maximum"); m != schema.end() && d > m->get<double>()) {
            return path + ": above maximum";
        }
    }
    if (v.is_object()) {
        if (auto r = schema.find("required"); r != schema.end()) {
            for (const auto& key : *r) {
                if (!v.contains(key.get<std::string>())) return path + ": missing " + key.get<std::string>();
            }
        }
        if (auto p = schema.find("properties"); p != schema.end()) {
            for (const auto& [key, sub] : p->items()) {
                if (auto it = v.find(key); it != v.end()) {
                    if (auto err = check(*it, sub, path + "." + key)) return err;
                }
            }
        }
    }
    if (v.is_array()) {
        if (auto m = schema.find("minItems"); m != schema.end() && v.size() < m->get<std::size_t>()) {
            return path + ": too few items";
        }
        if (auto items = schema.find("items"); items != schema.end()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (auto err = check(v[i], *items, path + "[" + std::to_string(i) + "]")) return err;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const json& value, const json& schema) {
    return check(value, schema, "$");
}

}  // namespace genie::llm
