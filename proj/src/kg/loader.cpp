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


#include "genie/kg/loader.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "genie/error.hpp"
#include "genie/kg/csv.hpp"

namespace genie::kg {

namespace {

const std::set<std::string, std::less<>> kMassNutrients = {
    "protein", "fat", "carbs", "sugar", "fiber", "sodium", "saturatedFat", "cholesterol", "potassium",
};

// "BlackPepper" -> "Black Pepper"
std::string label_from_id(std::string_view id) {
    std::string out;
    for (std::size_t i = 0; i < id.size(); ++i) {
        const char c = id[i];
        if (i > 0 && std::isupper(static_cast<unsigned char>(c)) &&
            std::islower(static_cast<unsigned char>(id[i - 1]))) {
            out.push_back(' ');
        }
        out.push_back(c == '_' ? ' ' : c);
    }
    return out;
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

struct PendingNode {
    EntityNode node;
    std::optional<NodeKind> kind_hint;
    bool has_label = false;
    std::size_t first_line = 0;
};

class Loader {
public:
    explicit Loader(const LoadOptions& options) : options_(options) {}

    LoadResult run(std::istream& triples, std::istream& attrs) {
        read_attrs(attrs);
        read_triples(triples);
        return finish();
    }

private:
    void reject(const char* source, std::size_t line, const std::string& reason,
                ErrorCode code = ErrorCode::malformed_row) {
        if (options_.strict) {
            throw Error(code, std::string(source) + " line " + std::to_string(line) + ": " + reason);
        }
        report_.rejected.push_back({source, line, reason});
    }

    PendingNode& pending(const std::string& id, std::size_t line) {
        auto [it, inserted] = nodes_.try_emplace(id);
        if (inserted) {
            it->second.node.id = id;
            it->second.first_line = line;
            order_.push_back(id);
        }
        return it->second;
    }

    void read_attrs(std::istream& in) {
        CsvReader reader(in);
        bool first = true;
        while (auto row = reader.next()) {
            auto& f = row->fields;
            if (first) {
                first = false;
                if (!f.empty() && f[0] == "node_id") continue;
                reject("attrs", row->line, "missing header");
                continue;
            }
            ++report_.attr_rows;
            if (f.size() > 6) {
                reject("attrs", row->line, "too many fields");
                continue;
            }
            f.resize(6);
            const auto& [id, attr, value, unit, kind_hint, label] =
                std::tie(f[0], f[1], f[2], f[3], f[4], f[5]);
            if (id.empty()) {
                reject("attrs", row->line, "empty node_id");
                continue;
            }
            std::optional<NodeKind> kind;
            if (!kind_hint.empty()) {
                kind = parse_node_kind(kind_hint);
                if (!kind) {
                    reject("attrs", row->line, "unknown kind_hint '" + kind_hint + "'");
                    continue;
                }
            }

            std::optional<Quantity> quantity;
            if (!attr.empty() && !unit.empty()) {
                const auto u = parse_unit(unit);
                if (!u) {
                    reject("attrs", row->line, "unknown unit '" + unit + "'");
                    continue;
                }
                const auto v = parse_double(value);
                if (!v || !std::isfinite(*v) || *v < 0.0) {
                    reject("attrs", row->line, "value must be a finite number >= 0");
                    continue;
                }
                const bool is_calories = attr == "calories";
                if (is_calories != (*u == Unit::kcal)) {
                    reject("attrs", row->line, "calories must be given in kcal (and only calories)");
                    continue;
                }
                if (kMassNutrients.contains(attr) && *u != Unit::g && *u != Unit::mg) {
                    reject("attrs", row->line, attr + " must be given in g or mg");
                    continue;
                }
                quantity = normalize({*v, *u});
            } else if (!attr.empty() && value.empty()) {
                reject("attrs", row->line, "empty value for attribute " + attr);
                continue;
            }

            auto& p = pending(id, row->line);
            if (kind) {
                if (p.kind_hint && *p.kind_hint != *kind) {
                    reject("attrs", row->line, "conflicting kind_hint for " + id);
                    continue;
                }
                p.kind_hint = kind;
            }
            if (!label.empty()) {
                p.node.label = label;
                p.has_label = true;
            }
            if (quantity) {
                p.node.numeric_attrs[attr] = *quantity;
            } else if (!attr.empty()) {
                p.node.categorical_attrs[attr] = value;
            }
            declared_.insert(id);
        }
    }

    void read_triples(std::istream& in) {
        CsvReader reader(in);
        bool first = true;
        std::set<Triple> seen;
        while (auto row = reader.next()) {
            auto& f = row->fields;
            if (first) {
                first = false;
                if (!f.empty() && f[0] == "subject") continue;
                reject("triples", row->line, "missing header");
                continue;
            }
            ++report_.triple_rows;
            if (f.size() < 3 || f.size() > 4) {
                reject("triples", row->line, "expected 3 or 4 fields");
                continue;
            }
            if (f[0].empty() || f[1].empty() || f[2].empty()) {
                reject("triples", row->line, "empty subject, relation or object");
                continue;
            }
            Provenance prov = Provenance::curated;
            if (f.size() == 4 && !f[3].empty()) {
                const auto p = parse_provenance(f[3]);
                if (!p) {
                    reject("triples", row->line, "unknown provenance '" + f[3] + "'");
                    continue;
                }
                prov = *p;
            }
            if (!options_.relations.contains(f[1])) {
                reject("triples", row->line, "unknown relation '" + f[1] + "'",
                       ErrorCode::unknown_relation);
                continue;
            }
            if (options_.strict) {
                for (const auto* end : {&f[0], &f[2]}) {
                    if (!declared_.contains(*end)) {
                        reject("triples", row->line, "undeclared node '" + *end + "'",
                               ErrorCode::dangling_reference);
                    }
                }
            }
            Triple t{f[0], f[1], f[2]};
            if (!seen.insert(t).second) {
                ++report_.duplicate_triples;
                continue;
            }
            pending(t.subject, row->line);
            pending(t.object, row->line);
            infer_kind(t);
            edges_.push_back({t.subject, t.relation, t.object, prov, 1});
        }
    }

    void infer_kind(const Triple& t) {
        auto vote = [this](const std::string& id, NodeKind k) { inferred_.try_emplace(id, k); };
        const std::string_view r = t.relation;
        if (r == rel::contains) {
            vote(t.subject, NodeKind::recipe);
            vote(t.object, NodeKind::ingredient);
        } else if (r == rel::belongs_to_cuisine) {
            vote(t.subject, NodeKind::recipe);
            vote(t.object, NodeKind::cuisine);
        } else if (r == rel::recommends_for) {
            vote(t.object, NodeKind::condition);
        } else if (r == "richIn") {
            vote(t.object, NodeKind::nutrient);
        } else if (r == "hasBenefit") {
            vote(t.object, NodeKind::benefit);
        } else if (r == "usesMethod") {
            vote(t.object, NodeKind::method);
        }
    }

    LoadResult finish() {
        std::vector<EntityNode> nodes;
        nodes.reserve(order_.size());
        std::set<std::string> recipes_with_contains;
        for (const auto& e : edges_) {
            if (e.relation == rel::contains) recipes_with_contains.insert(e.subject);
        }

        std::set<std::string> dropped;
        for (const auto& id : order_) {
            auto& p = nodes_.at(id);
            if (p.kind_hint) {
                p.node.kind = *p.kind_hint;
            } else if (auto it = inferred_.find(id); it != inferred_.end()) {
                p.node.kind = it->second;
            } else {
                p.node.kind = NodeKind::ingredient;
            }
            if (!p.has_label) p.node.label = label_from_id(id);
            if (p.node.kind == NodeKind::recipe && !recipes_with_contains.contains(id)) {
                reject("attrs", p.first_line, "recipe " + id + " has no contains edge");
                dropped.insert(id);
                continue;
            }
            nodes.push_back(std::move(p.node));
        }
        if (!dropped.empty()) {
            std::erase_if(edges_, [&](const RelationEdge& e) {
                return dropped.contains(e.subject) || dropped.contains(e.object);
            });
        }

        LoadResult result{
            GraphSnapshot::build(std::move(nodes), edges_, options_.relations, 1),
            std::move(report_),
        };
        return result;
    }

    const LoadOptions& options_;
    LoadReport report_;
    std::unordered_map<std::string, PendingNode> nodes_;
    std::vector<std::string> order_;
    std::set<std::string> declared_;
    std::unordered_map<std::string, NodeKind> inferred_;
    std::vector<RelationEdge> edges_;
};

}  // namespace

LoadResult load_triples(std::istream& triples, std::istream& attrs, const LoadOptions& options) {
    return Loader(options).run(triples, attrs);
}

void export_triples(const GraphSnapshot& snapshot, std::ostream& out) {
    out << kTriplesHeader << '\n';
    for (const auto& e : snapshot.edges()) {
        const std::string fields[] = {e.subject, e.relation, e.object,
                                      std::string(to_string(e.provenance))};
        write_csv_row(out, fields);
    }
}

void export_attrs(const GraphSnapshot& snapshot, std::ostream& out) {
    out << kAttrsHeader << '\n';
    for (const auto* n : snapshot.nodes()) {
        const std::string decl[] = {n->id, "", "", "", std::string(to_string(n->kind)), n->label};
        write_csv_row(out, decl);
        for (const auto& [name, q] : n->numeric_attrs) {
            const std::string row[] = {n->id, name, format_number(q.value),
                                       std::string(to_string(q.unit)), "", ""};
            write_csv_row(out, row);
        }
        for (const auto& [name, value] : n->categorical_attrs) {
            const std::string row[] = {n->id, name, value, "", "", ""};
            write_csv_row(out, row);
        }
    }
}

}  // namespace genie::kg
