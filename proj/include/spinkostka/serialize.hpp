#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinkostka/partition.hpp"
#include "spinkostka/symfunc.hpp"
#include "spinkostka/tableaux.hpp"

namespace spinkostka {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }
inline json to_json(const StrictPartition& p) { return json(p.parts()); }

/// Reads a JSON array of integers as a partition; validity (positive,
/// weakly decreasing) is re-checked by the constructor.
inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected array");
    std::vector<int> parts;
    for (auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument("partition_from_json: expected integers");
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

/// Strictness is re-validated on read.
inline StrictPartition strict_partition_from_json(const json& j) {
    return StrictPartition(partition_from_json(j).parts());
}

/// Row-list encoding of a semistandard tableau.
inline json to_json(const SSYT& t) {
    json rows = json::array();
    for (auto& r : t.rows) rows.push_back(r);
    return json{{"shape", to_json(t.shape)}, {"rows", rows}};
}

/// Row-list encoding of a marked shifted tableau; a marked letter k' is
/// stored as -k.
inline json to_json(const MarkedShiftedTableau& t) {
    json rows = json::array();
    for (auto& r : t.rows) rows.push_back(r);
    return json{{"shape", to_json(t.shape)}, {"rows", rows}};
}

inline MarkedShiftedTableau marked_shifted_from_json(const json& j) {
    MarkedShiftedTableau t;
    t.shape = strict_partition_from_json(j.at("shape"));
    for (auto& r : j.at("rows")) {
        std::vector<int> row;
        for (auto& e : r) {
            int v = e.get<int>();
            if (v == 0) throw std::invalid_argument("marked tableau: zero entry");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// {degree, basis, coeffs: [[partition, coefficient-string], ...]} in
/// canonical partition order.
template <class C>
json to_json(const SymFunc<C>& f) {
    json coeffs = json::array();
    for (auto& p : partitions_of(f.degree)) {
        auto it = f.coeffs.find(p);
        if (it == f.coeffs.end()) continue;
        coeffs.push_back(json::array({to_json(p), it->second.str()}));
    }
    return json{{"degree", f.degree},
                {"basis", std::string(1, basis_letter(f.basis))},
                {"coeffs", coeffs}};
}

} // namespace spinkostka
