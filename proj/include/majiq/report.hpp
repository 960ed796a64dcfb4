#pragma once

// Serialization of classification records and verification results. JSON
// objects keep their keys sorted (nlohmann's default map storage), so equal
// inputs serialize to byte-identical output. Roots of unity always cross this
// boundary as zeta(k)^e literals.

#include <majiq/classify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace majiq {

// verified tri-state: records straight from the enumerators have not been
// checked yet and serialize with verified = null.
struct ReportEntry {
    ClassRecord record;
    std::optional<VerifyReport> verification;
};

inline nlohmann::json record_to_json(const ReportEntry& entry) {
    const ClassRecord& rec = entry.record;
    nlohmann::json j;
    j["family"] = rec.family;
    j["group"] = to_string(rec.group);
    nlohmann::json co;
    co["text"] = to_string(rec.cocycle);
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Rank1Cocycle>) {
                co["type"] = "rank1";
                co["orders"] = {c.m};
                co["params"] = {c.a};
            } else if constexpr (std::is_same_v<T, Rank2Cocycle>) {
                co["type"] = "rank2";
                co["orders"] = {c.m, c.n};
                co["params"] = {c.a, c.b, c.c};
            } else {
                co["type"] = "rank3";
                co["orders"] = {c.p};
                co["params"] = c.a;
            }
        },
        rec.cocycle);
    j["cocycle"] = co;
    j["generators"] = rec.gen_names;
    nlohmann::json scalars;
    nlohmann::json species = nlohmann::json::array();
    for (const auto& s : rec.species) {
        nlohmann::json sj;
        sj["name"] = s.name;
        sj["class"] = to_string(s.cls);
        std::vector<std::string> sig;
        for (const auto& v : s.sigma) sig.push_back(root_to_literal(v));
        sj["sigma"] = sig;
        sj["N"] = s.N;
        species.push_back(sj);
    }
    scalars["species"] = species;
    scalars["q"] = rec.q ? nlohmann::json(root_to_literal(*rec.q)) : nlohmann::json();
    j["scalars"] = scalars;
    j["relations"] = relation_strings(rec);
    j["N1"] = rec.species.empty() ? nlohmann::json() : nlohmann::json(rec.species[0].N);
    j["N2"] = rec.species.size() > 1 ? nlohmann::json(rec.species[1].N) : nlohmann::json();
    j["dim"] = rec.dim;
    j["note"] = rec.note;
    j["representative_only"] = rec.representative_only;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    j["params"] = std::move(params);
    if (entry.verification) {
        j["verified"] = entry.verification->ok;
        j["failures"] = entry.verification->failures;
    } else {
        j["verified"] = nlohmann::json();
        j["failures"] = nlohmann::json::array();
    }
    return j;
}

inline std::string records_to_json(const std::vector<ReportEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) arr.push_back(record_to_json(e));
    return arr.dump(2) + "\n";
}

inline ClassRecord record_from_json(const nlohmann::json& j) {
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("record: missing key '") + key + "'");
        return j.at(key);
    };
    ClassRecord rec;
    rec.family = need("family").get<std::string>();
    rec.group = group_from_string(need("group").get<std::string>());
    rec.cocycle = cocycle_from_string(need("cocycle").at("text").get<std::string>());
    if (group_of(rec.cocycle) != rec.group)
        throw std::invalid_argument("record: group and cocycle orders disagree");
    rec.gen_names = need("generators").get<std::vector<std::string>>();
    if (rec.gen_names.size() != rec.group.rank())
        throw std::invalid_argument("record: one generator name per cyclic factor");
    const nlohmann::json& scalars = need("scalars");
    for (const auto& sj : scalars.at("species")) {
        SpeciesData s;
        s.name = sj.at("name").get<std::string>();
        s.cls = elt_from_string(rec.group, sj.at("class").get<std::string>());
        for (const auto& lit : sj.at("sigma"))
            s.sigma.push_back(root_from_literal(lit.get<std::string>()));
        if (s.sigma.size() != rec.group.rank())
            throw std::invalid_argument("record: one relation scalar per group generator");
        s.N = sj.at("N").get<long>();
        rec.species.push_back(std::move(s));
    }
    if (rec.species.empty() || rec.species.size() > 2)
        throw std::invalid_argument("record: expected one or two species");
    if (scalars.contains("q") && !scalars.at("q").is_null())
        rec.q = root_from_literal(scalars.at("q").get<std::string>());
    rec.dim = need("dim").get<long>();
    if (j.contains("note") && j.at("note").is_string()) rec.note = j.at("note").get<std::string>();
    if (j.contains("representative_only"))
        rec.representative_only = j.at("representative_only").get<bool>();
    if (j.contains("params") && j.at("params").is_object())
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            rec.params.push_back({it.key(), it.value().get<long>()});
    return rec;
}

inline std::vector<ClassRecord> records_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("record file: ") + e.what());
    }
    std::vector<ClassRecord> out;
    if (j.is_array())
        for (const auto& item : j) out.push_back(record_from_json(item));
    else
        out.push_back(record_from_json(j));
    return out;
}

// One row per record; scalar cell uses spaces and semicolons only, so the
// fixed header line is the only place a comma appears.
inline std::string records_to_csv(const std::vector<ReportEntry>& entries) {
    std::string out = "family,group,cocycle,scalars,N1,N2,dim,verified\n";
    for (const auto& e : entries) {
        const ClassRecord& rec = e.record;
        std::string cell;
        for (const auto& s : rec.species) {
            if (!cell.empty()) cell += "; ";
            cell += s.name + "@" + class_expr(rec, s.cls) + ":";
            for (size_t j = 0; j < s.sigma.size(); ++j)
                cell += std::string(j ? " " : "") + rec.gen_names[j] + "->" +
                        root_to_literal(s.sigma[j]);
        }
        if (rec.q) cell += "; q=" + root_to_literal(*rec.q);
        for (char ch : cell)
            if (ch == ',') throw std::logic_error("csv scalar cell grew a comma");
        // the cocycle literal contains commas, so that one field is quoted
        out += rec.family + "," + to_string(rec.group) + ",\"" + to_string(rec.cocycle) + "\"," +
               cell + "," + std::to_string(rec.species.empty() ? 0 : rec.species[0].N) + "," +
               (rec.species.size() > 1 ? std::to_string(rec.species[1].N) : "") + "," +
               std::to_string(rec.dim) + "," +
               (e.verification ? (e.verification->ok ? "true" : "false") : "") + "\n";
    }
    return out;
}

inline std::string records_to_text(const std::vector<ReportEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        const ClassRecord& rec = e.record;
        out += rec.family + "  " + to_string(rec.group) + "  " + to_string(rec.cocycle) +
               "  dim " + std::to_string(rec.dim) + "\n";
        for (const auto& rel : relation_strings(rec)) out += "  " + rel + "\n";
        if (!rec.note.empty()) out += "  note: " + rec.note + "\n";
        if (e.verification) {
            out += std::string("  verified: ") + (e.verification->ok ? "yes" : "no") + "\n";
            for (const auto& f : e.verification->failures) out += "    " + f + "\n";
        } else {
            out += "  verified: unchecked\n";
        }
        out += "\n";
    }
    return out;
}

inline std::string emit_report(const std::vector<ReportEntry>& entries, const std::string& format) {
    if (format == "json") return records_to_json(entries);
    if (format == "csv") return records_to_csv(entries);
    if (format == "text") return records_to_text(entries);
    throw std::invalid_argument("emit_report: unknown format '" + format + "'");
}

}  // namespace majiq
