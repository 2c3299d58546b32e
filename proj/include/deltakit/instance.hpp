#pragma once

#include <fstream>
#include <optional>

#include "json.hpp"

#include "deltakit/repr.hpp"
#include "deltakit/solve.hpp"

namespace deltakit {

using json = nlohmann::json;

// Instance files are JSON documents with a `kind` key:
//   twist        labels, matrix, twist_set
//   contraction  labels, matrix, contract_set
//   projected    labels, matrix, contract_set?, project_set
//   graph        labels (vertices), edges
//   matroid      labels (columns), rows, matrix (rows x labels), mode
// plus optional `weights` (label -> integer) and `pairs` (list of 2-lists).
// Matrix entries are plain integers, reduced mod p on load, so fixtures are
// field-agnostic. Ground labels may not use the reserved "__aux" prefix;
// contract/project sets may (emitted representations contain such labels).
struct Instance {
    std::string kind;
    ProjectedRep rep;
    std::optional<TwistRep> twist_form;
    std::optional<WeightMap> weights;
    std::optional<PairPartition> pairs;
};

namespace detail {

inline const json& need_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("instance: missing key '") + key + "'");
    return *it;
}

inline Labels parse_labels(const json& j, const char* key) {
    const json& arr = need_key(j, key);
    if (!arr.is_array()) throw ParseError(std::string("instance: '") + key + "' must be an array");
    Labels out;
    for (const auto& v : arr) {
        if (!v.is_string() || v.get<std::string>().empty())
            throw ParseError(std::string("instance: '") + key + "' entries must be nonempty strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

inline LabelSet parse_label_set(const json& j, const char* key, const Labels& universe) {
    LabelSet s = parse_labels(j, key);
    require_distinct(s, key);
    for (const Label& l : s)
        if (!contains_label(universe, l))
            throw ValidationError(std::string("instance: '") + key + "' contains unknown label " + l);
    return s;
}

inline std::vector<Fp> parse_entries(const json& j, std::size_t expect, const char* what) {
    const json& arr = need_key(j, "matrix");
    if (!arr.is_array() || arr.size() != expect)
        throw ParseError(std::string("instance: 'matrix' must hold ") + std::to_string(expect) + " integers for " +
                         what);
    std::vector<Fp> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw ParseError("instance: matrix entries must be integers");
        out.push_back(fp(v.get<long long>()));
    }
    return out;
}

inline SkewMatrix parse_skew(const json& j, const Labels& labels) {
    std::vector<Fp> e = parse_entries(j, labels.size() * labels.size(), "a square matrix over `labels`");
    try {
        return SkewMatrix(labels, std::move(e));
    } catch (const ValidationError& err) {
        throw ValidationError(std::string("instance: ") + err.what());
    }
}

inline void reject_aux_ground(const Labels& ground) {
    for (const Label& l : ground)
        if (is_aux_label(l))
            throw ValidationError("instance: ground label '" + l + "' uses the reserved __aux prefix");
}

} // namespace detail

inline json serialize(const ContractionRep& d);
inline json serialize(const TwistRep& d);
inline json serialize(const ProjectedRep& d);

inline Instance parse_instance_json(const json& j, Rng& rng, double eps) {
    if (!j.is_object()) throw ParseError("instance: document must be a JSON object");
    const json& kindv = detail::need_key(j, "kind");
    if (!kindv.is_string()) throw ParseError("instance: 'kind' must be a string");
    const std::string kind = kindv.get<std::string>();
    Labels labels = detail::parse_labels(j, "labels");
    require_distinct(labels, "instance labels");

    std::optional<Instance> out;
    if (kind == "twist") {
        detail::reject_aux_ground(labels);
        SkewMatrix a = detail::parse_skew(j, labels);
        LabelSet s = detail::parse_label_set(j, "twist_set", labels);
        TwistRep t(std::move(a), std::move(s));
        out = Instance{kind, as_projected(twist_to_contraction(t)), t, {}, {}};
    } else if (kind == "contraction" || kind == "projected") {
        SkewMatrix a = detail::parse_skew(j, labels);
        LabelSet contract =
            j.contains("contract_set") ? detail::parse_label_set(j, "contract_set", labels) : LabelSet{};
        LabelSet project = kind == "projected" ? detail::parse_label_set(j, "project_set", labels) : LabelSet{};
        if (!set_intersect(contract, project).empty())
            throw ValidationError("instance: contract_set and project_set overlap");
        Labels ground = set_minus(set_minus(LabelSet(labels), contract), project);
        detail::reject_aux_ground(ground);
        try {
            ContractionRep c(std::move(a), std::move(contract));
            out = Instance{kind, ProjectedRep(std::move(c), std::move(project)), {}, {}, {}};
        } catch (const EmptyDeltaMatroid&) {
            throw ValidationError("instance: representation names an empty family");
        }
    } else if (kind == "graph") {
        detail::reject_aux_ground(labels);
        const json& earr = detail::need_key(j, "edges");
        if (!earr.is_array()) throw ParseError("instance: 'edges' must be an array");
        std::vector<std::pair<Label, Label>> edges;
        for (const auto& e : earr) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("instance: each edge must be a pair of labels");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        try {
            out = Instance{kind, as_projected(matching_dm(Graph(labels, std::move(edges)), rng, eps)), {}, {}, {}};
        } catch (const ValidationError& err) {
            throw ValidationError(std::string("instance: ") + err.what());
        }
    } else if (kind == "matroid") {
        detail::reject_aux_ground(labels);
        const json& rowsv = detail::need_key(j, "rows");
        if (!rowsv.is_number_integer() || rowsv.get<long long>() < 0)
            throw ParseError("instance: 'rows' must be a nonnegative integer");
        const auto k = rowsv.get<std::size_t>();
        std::vector<Fp> e = detail::parse_entries(j, k * labels.size(), "a rows x labels matrix");
        GeneralMatrix m(fresh_aux_labels({&labels}, static_cast<int>(k)), labels, std::move(e));
        const std::string mode = detail::need_key(j, "mode").get<std::string>();
        if (mode == "bases") {
            try {
                out = Instance{kind, as_projected(matroid_bases_dm(m)), {}, {}, {}};
            } catch (const RankDeficient& err) {
                throw ValidationError(std::string("instance: ") + err.what());
            }
        } else if (mode == "independent") {
            out = Instance{kind, matroid_independent_dm(m), {}, {}, {}};
        } else {
            throw ParseError("instance: matroid 'mode' must be \"bases\" or \"independent\"");
        }
    } else {
        throw ParseError("instance: unknown kind '" + kind + "'");
    }

    if (j.contains("weights")) {
        const json& wv = j.at("weights");
        if (!wv.is_object()) throw ParseError("instance: 'weights' must be an object");
        WeightMap w;
        for (auto it = wv.begin(); it != wv.end(); ++it) {
            if (!it.value().is_number_integer() && !it.value().is_number_unsigned())
                throw ParseError("instance: weights must be integers");
            if (!contains_label(out->rep.ground(), it.key()))
                throw ValidationError("instance: weight for unknown ground element " + it.key());
            w.w[it.key()] = it.value().get<long long>();
        }
        out->weights = std::move(w);
    }
    if (j.contains("pairs")) {
        const json& pv = j.at("pairs");
        if (!pv.is_array()) throw ParseError("instance: 'pairs' must be an array");
        PairPartition pi;
        for (const auto& p : pv) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                throw ParseError("instance: each pair must be a 2-list of labels");
            pi.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        out->pairs = std::move(pi);
    }
    return std::move(*out);
}

inline Instance parse_instance(const std::string& path, Rng& rng, double eps) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    try {
        return parse_instance_json(j, rng, eps);
    } catch (const Error&) {
        throw;
    }
}

namespace detail {

// Entries are emitted in the balanced range (-p/2, p/2] so that fixtures stay
// small and field-agnostic.
inline long long balanced(Fp v) {
    const std::uint64_t p = field_prime();
    return v.value() <= p / 2 ? static_cast<long long>(v.value())
                              : static_cast<long long>(v.value()) - static_cast<long long>(p);
}

inline json matrix_json(const SkewMatrix& a) {
    json arr = json::array();
    for (int i = 0; i < a.size(); ++i)
        for (int k = 0; k < a.size(); ++k) arr.push_back(balanced(a.at(i, k)));
    return arr;
}

} // namespace detail

inline json serialize(const ContractionRep& d) {
    json j;
    j["kind"] = "contraction";
    j["labels"] = d.matrix().labels();
    j["matrix"] = detail::matrix_json(d.matrix());
    j["contract_set"] = d.contract_set();
    return j;
}

inline json serialize(const TwistRep& d) {
    json j;
    j["kind"] = "twist";
    j["labels"] = d.A.labels();
    j["matrix"] = detail::matrix_json(d.A);
    j["twist_set"] = d.twist_set;
    return j;
}

inline json serialize(const ProjectedRep& d) {
    if (d.is_linear()) return serialize(d.inner);
    json j;
    j["kind"] = "projected";
    j["labels"] = d.inner.matrix().labels();
    j["matrix"] = detail::matrix_json(d.inner.matrix());
    j["contract_set"] = d.inner.contract_set();
    j["project_set"] = d.project;
    return j;
}

} // namespace deltakit
