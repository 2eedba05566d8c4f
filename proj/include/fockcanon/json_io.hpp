#pragma once
// JSON encodings: partitions as arrays, Laurent polynomials as [exponent,
// coefficient] pairs in ascending exponent order, vectors as descending-lex
// entry lists.  Coefficients ride as numbers while they fit 64 bits and as
// decimal strings beyond that.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "core_profile.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace fockcanon {

using Json = nlohmann::json;

inline Json int_to_json(const Int& value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) return Json(value.convert_to<std::int64_t>());
    return Json(value.str());
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    std::vector<int> parts;
    for (const Json& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

inline Json laurent_to_json(const Laurent& p) {
    Json arr = Json::array();
    for (const auto& [exp, coeff] : p.terms()) arr.push_back(Json::array({exp, int_to_json(coeff)}));
    return arr;
}

inline Laurent laurent_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [exp, coeff]");
    Laurent p;
    for (const Json& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("polynomial term must be [exp, coeff]");
        p.add_term(term[0].get<int>(), int_from_json(term[1]));
    }
    return p;
}

inline Json fock_to_json(const FockVector& x) {
    Json out;
    out["n"] = x.homogeneous_size();
    Json entries = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json entry;
        entry["partition"] = partition_to_json(p);
        entry["poly"] = laurent_to_json(c);
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    return out;
}

inline FockVector fock_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw std::invalid_argument("vector JSON must carry an \"entries\" array");
    FockVector x;
    for (const Json& entry : j.at("entries")) {
        Partition p = partition_from_json(entry.at("partition"));
        Laurent c = laurent_from_json(entry.at("poly"));
        x.add_term(p, c);
    }
    return x;
}

// Column files pair labels with the value of the column at v = 1; plain
// vector JSON is accepted and collapsed.
inline std::map<Partition, Int, LexGreater> column_values_from_json(const Json& j) {
    FockVector x = fock_from_json(j);
    return x.at_v_one();
}

inline Json columns_to_json(const std::vector<CanonicalColumn>& cols, int n, int e) {
    Json out;
    out["e"] = e;
    out["n"] = n;
    Json arr = Json::array();
    for (const CanonicalColumn& col : cols) {
        Json one;
        one["mu"] = partition_to_json(col.mu);
        one["vector"] = fock_to_json(col.vector);
        arr.push_back(std::move(one));
    }
    out["columns"] = std::move(arr);
    return out;
}

inline std::vector<CanonicalColumn> columns_from_json(const Json& j, int n, int e) {
    if (!j.is_object() || j.value("e", -1) != e || j.value("n", -1) != n)
        throw std::invalid_argument("column set does not match the requested level");
    std::vector<CanonicalColumn> cols;
    for (const Json& one : j.at("columns")) {
        CanonicalColumn col;
        col.e = e;
        col.mu = partition_from_json(one.at("mu"));
        col.vector = fock_from_json(one.at("vector"));
        cols.push_back(std::move(col));
    }
    return cols;
}

inline Json profile_to_json(const CoreProfile& prof) {
    Json out;
    out["e"] = prof.e;
    out["beads"] = prof.beads;
    out["counts"] = prof.n;
    out["chain"] = prof.chain;
    out["pi"] = prof.pi;
    out["phi"] = prof.phi;
    out["M"] = prof.M;
    out["d"] = std::vector<int>(prof.d.begin() + 1, prof.d.end());
    out["inversions"] = prof.inversions;
    out["rouquier"] = prof.rouquier;
    return out;
}

}  // namespace fockcanon
