#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apartness/constructors.hpp"
#include "apartness/harness.hpp"
#include "apartness/search.hpp"

namespace apartness::io {

using json = nlohmann::ordered_json;

/// Malformed document: bad syntax or a shape/type violation. Distinct from
/// the invariant errors thrown by the constructors so callers can map the
/// two to different exit codes.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

constexpr int kDocumentVersion = 1;

/// A space description as stored on disk. kind is one of
/// abstract | metric | uniform | cantor; the matching payload member is
/// set. to_space() runs the corresponding constructor.
struct SpaceDocument {
    std::string kind;
    // abstract
    std::optional<BoolMatrix> neq, p;
    // metric
    std::optional<MetricSpace> metric;
    // uniform
    std::optional<UniformBase> base;
    bool uniform_has_explicit_neq = false;
    // cantor
    std::optional<int> depth;

    Space to_space() const {
        if (kind == "abstract") return Space::create(neq->size(), *neq, *p);
        if (kind == "metric") return from_metric(*metric);
        if (kind == "uniform") {
            if (uniform_has_explicit_neq)
                return from_uniform(*base, Inequality(neq->size(), *neq));
            return from_uniform(*base);
        }
        if (kind == "cantor") return from_metric(cantor(CantorSpec(*depth)));
        throw ParseError("unknown document kind: " + kind);
    }
};

namespace detail {

inline const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(where) + ": missing required field '" + key + "'");
    return *it;
}

inline BoolMatrix parse_bool_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a nonempty array of 0/1 rows");
    const int n = static_cast<int>(j.size());
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k) {
            const json& cell = row[k];
            if (!cell.is_number_integer() || (cell.get<int>() != 0 && cell.get<int>() != 1))
                throw ParseError(where + "[" + std::to_string(i) + "][" + std::to_string(k) +
                                 "]: entries must be 0 or 1");
            if (cell.get<int>() == 1) m.set(i, k, true);
        }
    }
    return m;
}

inline json bool_matrix_to_json(const BoolMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline int line_of_offset(const std::string& text, std::size_t offset) {
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

} // namespace detail

inline SpaceDocument parse_space_document(const json& j) {
    if (!j.is_object()) throw ParseError("document: expected a JSON object");
    const json& version = detail::need(j, "version", "document");
    if (!version.is_number_integer() || version.get<int>() != kDocumentVersion)
        throw ParseError("document: unsupported version (expected " +
                         std::to_string(kDocumentVersion) + ")");
    const json& kind = detail::need(j, "kind", "document");
    if (!kind.is_string()) throw ParseError("document: 'kind' must be a string");

    SpaceDocument doc;
    doc.kind = kind.get<std::string>();
    if (doc.kind == "abstract") {
        doc.neq = detail::parse_bool_matrix(detail::need(j, "neq", "abstract document"), "neq");
        doc.p = detail::parse_bool_matrix(detail::need(j, "p", "abstract document"), "p");
        if (doc.neq->size() != doc.p->size())
            throw ParseError("abstract document: neq and p sizes differ");
    } else if (doc.kind == "metric") {
        const json& dist = detail::need(j, "dist", "metric document");
        if (!dist.is_array() || dist.empty())
            throw ParseError("dist: expected a nonempty array of rows");
        const int n = static_cast<int>(dist.size());
        std::vector<std::vector<Rational>> d(n);
        for (int i = 0; i < n; ++i) {
            const json& row = dist[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("dist: row " + std::to_string(i) + " must have " +
                                 std::to_string(n) + " entries");
            for (int k = 0; k < n; ++k) {
                const json& cell = row[k];
                if (!cell.is_string())
                    throw ParseError("dist[" + std::to_string(i) + "][" + std::to_string(k) +
                                     "]: distances are rational strings like \"3/4\"");
                try {
                    d[i].push_back(parse_rational(cell.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw ParseError("dist[" + std::to_string(i) + "][" + std::to_string(k) +
                                     "]: " + e.what());
                }
            }
        }
        doc.metric = MetricSpace(n, std::move(d));
    } else if (doc.kind == "uniform") {
        const json& ent = detail::need(j, "entourages", "uniform document");
        if (!ent.is_array() || ent.empty())
            throw ParseError("entourages: expected a nonempty array of 0/1 matrices");
        std::vector<BoolMatrix> mats;
        for (std::size_t i = 0; i < ent.size(); ++i)
            mats.push_back(
                detail::parse_bool_matrix(ent[i], "entourages[" + std::to_string(i) + "]"));
        const int n = mats.front().size();
        for (const auto& m : mats)
            if (m.size() != n) throw ParseError("entourages: members have differing sizes");
        doc.base = UniformBase(n, std::move(mats));
        if (j.contains("neq")) {
            doc.neq = detail::parse_bool_matrix(j["neq"], "neq");
            if (doc.neq->size() != n)
                throw ParseError("uniform document: neq size differs from entourages");
            doc.uniform_has_explicit_neq = true;
        }
    } else if (doc.kind == "cantor") {
        const json& depth = detail::need(j, "depth", "cantor document");
        if (!depth.is_number_integer())
            throw ParseError("cantor document: 'depth' must be an integer");
        doc.depth = depth.get<int>();
    } else {
        throw ParseError("document: unknown kind '" + doc.kind + "'");
    }
    return doc;
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ":" + std::to_string(detail::line_of_offset(text, e.byte)) +
                         ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline SpaceDocument load_space_document(const std::string& path) {
    return parse_space_document(parse_json_text(read_file(path), path));
}

/// Abstract document for a Space; extra metadata keys are carried verbatim
/// under "meta".
inline json space_to_json(const Space& s, const json& meta = json::object()) {
    json j;
    j["version"] = kDocumentVersion;
    j["kind"] = "abstract";
    j["neq"] = detail::bool_matrix_to_json(s.ineq.neq);
    j["p"] = detail::bool_matrix_to_json(s.apart.p);
    if (!meta.empty()) j["meta"] = meta;
    return j;
}

inline json metric_to_json(const MetricSpace& m, const json& meta = json::object()) {
    json j;
    j["version"] = kDocumentVersion;
    j["kind"] = "metric";
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(format_rational(m.dist(i, k)));
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    if (!meta.empty()) j["meta"] = meta;
    return j;
}

inline void write_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

/// A point map file is a bare JSON array of target indices.
inline PointMap load_point_map(const std::string& path, int src, int dst) {
    const json j = parse_json_text(read_file(path), path);
    if (!j.is_array()) throw ParseError(path + ": expected a JSON array of target indices");
    if (src >= 0 && static_cast<int>(j.size()) != src)
        throw ParseError(path + ": expected " + std::to_string(src) + " entries, got " +
                         std::to_string(j.size()));
    std::vector<int> img;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw ParseError(path + "[" + std::to_string(i) + "]: expected an integer");
        img.push_back(j[i].get<int>());
    }
    const int actual_src = static_cast<int>(img.size());
    for (int v : img)
        if (v < 0 || (dst >= 0 && v >= dst))
            throw ParseError(path + ": target index out of range");
    int max_target = 0;
    for (int v : img) max_target = std::max(max_target, v + 1);
    return PointMap(actual_src, dst >= 0 ? dst : max_target, std::move(img));
}

// ---- report serialisation ----

inline json witness_to_json(const Witness& w) {
    json j = json::object();
    if (!w.sets.empty()) {
        json sets = json::object();
        for (const auto& [k, v] : w.sets) sets[k] = v.indices();
        j["sets"] = std::move(sets);
    }
    if (!w.points.empty()) {
        json pts = json::object();
        for (const auto& [k, v] : w.points) pts[k] = v;
        j["points"] = std::move(pts);
    }
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

inline json check_to_json(const std::string& name, const CheckResult& r) {
    json j;
    j["property"] = name;
    j["ok"] = r.ok;
    if (!r.witness.empty()) j["witness"] = witness_to_json(r.witness);
    return j;
}

inline json report_to_json(const PropertyReport& r) {
    json j;
    j["property"] = r.name;
    j["ok"] = r.ok;
    if (!r.witness.empty()) j["witness"] = witness_to_json(r.witness);
    return j;
}

inline json harness_to_json(const HarnessReport& rep) {
    json j;
    j["schema"] = 1;
    j["depth"] = rep.depth;
    json pre = json::array();
    for (const auto& p : rep.preconditions) pre.push_back(report_to_json(p));
    j["preconditions"] = std::move(pre);
    json checks = json::array();
    for (const auto* c : rep.checks()) checks.push_back(report_to_json(*c));
    j["checks"] = std::move(checks);
    j["all_pass"] = rep.all_pass();
    return j;
}

inline json model_report_to_json(const ModelReport& rep) {
    json j;
    j["model"] = space_to_json(rep.model);
    json verdicts = json::object();
    for (int i = 0; i < kPropCount; ++i)
        verdicts[prop_name(static_cast<Prop>(i))] = rep.verdicts.v[i];
    j["verdicts"] = std::move(verdicts);
    if (!rep.forbidden_witnesses.empty()) {
        json w = json::array();
        for (const auto& r : rep.forbidden_witnesses) w.push_back(report_to_json(r));
        j["forbidden"] = std::move(w);
    }
    if (!rep.canonical_tag.empty()) j["canonical"] = rep.canonical_tag;
    return j;
}

inline json catalog_to_json(const CatalogDocument& doc) {
    json j;
    j["schema"] = 1;
    j["nmax"] = doc.nmax;
    json levels = json::array();
    for (const auto& level : doc.levels) {
        json l;
        l["n"] = level.n;
        l["models"] = level.total_models;
        l["canonical_models"] = level.canonical_models;
        json counts = json::object();
        for (int i = 0; i < kPropCount; ++i)
            counts[prop_name(static_cast<Prop>(i))] = level.property_counts[i];
        l["property_counts"] = std::move(counts);
        json implications = json::array();
        for (int p = 0; p < kPropCount; ++p)
            for (int r = 0; r < kPropCount; ++r) {
                if (p == r) continue;
                json imp;
                imp["if"] = prop_name(static_cast<Prop>(p));
                imp["then"] = prop_name(static_cast<Prop>(r));
                imp["holds"] = level.implication_violations[p][r] == 0;
                if (level.implication_violations[p][r] > 0) {
                    imp["violations"] = level.implication_violations[p][r];
                    imp["counterexample"] = level.implication_counterexample[p][r];
                }
                implications.push_back(std::move(imp));
            }
        l["implications"] = std::move(implications);
        l["wss_divergent"] = level.wss_divergent;
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    return j;
}

} // namespace apartness::io
