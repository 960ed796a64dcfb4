#pragma once

// Command-line surface. All command handling lives here so the test suite can
// drive it in-process through run_command; the installed binary is a thin
// wrapper. Exit codes: 0 success, 1 a requested check failed, 2 usage or
// input error.

#include <majiq/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace majiq {

namespace cli_detail {

struct Options {
    std::string format = "text";
    long max_group_order = 256;
    long max_levels = 64;
    std::string out_file;
};

inline int deliver(const std::string& report, const Options& opt, std::ostream& out,
                   std::ostream& err) {
    if (opt.out_file.empty()) {
        out << report;
        return 0;
    }
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) {
        err << "majiq: cannot open '" << opt.out_file << "' for writing\n";
        return 2;
    }
    f << report;
    return 0;
}

// Key-value structure files: one `key = value` per line, '#' starts a
// comment. Keys: group, cocycle, species, then chi.<name> or sigma.<name>
// with one zeta(k)^e literal per group generator.
struct StructureSpecFile {
    AbGroup group = AbGroup({1});
    Cocycle3 cocycle;
    std::vector<std::pair<std::string, GrpElt>> species;  // name -> class
    std::map<std::string, std::vector<RootOfUnity>> chi_values;
    std::map<std::string, std::vector<RootOfUnity>> sigma_values;
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline StructureSpecFile parse_structure_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read structure file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (split_ws(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        auto strip = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument(path + ": duplicate key '" + key + "'");
    }
    for (const char* req : {"group", "cocycle", "species"})
        if (!kv.count(req))
            throw std::invalid_argument(path + ": missing required key '" + req + "'");

    StructureSpecFile spec;
    spec.group = group_from_string(kv.at("group"));
    spec.cocycle = cocycle_from_string(kv.at("cocycle"));
    if (group_of(spec.cocycle) != spec.group)
        throw std::invalid_argument(path + ": cocycle orders do not match the group");
    for (const std::string& tok : split_ws(kv.at("species"))) {
        auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0)
            throw std::invalid_argument(path + ": species entry '" + tok +
                                        "' is not name:class");
        spec.species.push_back({tok.substr(0, colon),
                                elt_from_string(spec.group, tok.substr(colon + 1))});
    }
    if (spec.species.empty()) throw std::invalid_argument(path + ": no species listed");

    auto parse_roots = [&](const std::string& value) {
        std::vector<RootOfUnity> roots;
        for (const std::string& tok : split_ws(value)) roots.push_back(root_from_literal(tok));
        if (roots.size() != spec.group.rank())
            throw std::invalid_argument(path + ": need one scalar per group generator");
        return roots;
    };
    for (const auto& [key, value] : kv) {
        if (key == "group" || key == "cocycle" || key == "species") continue;
        bool is_chi = key.rfind("chi.", 0) == 0;
        bool is_sigma = key.rfind("sigma.", 0) == 0;
        if (!is_chi && !is_sigma)
            throw std::invalid_argument(path + ": unknown key '" + key + "'");
        std::string name = key.substr(is_chi ? 4 : 6);
        bool known = false;
        for (const auto& [n, cls] : spec.species) known |= (n == name);
        if (!known)
            throw std::invalid_argument(path + ": scalars for unlisted species '" + name + "'");
        (is_chi ? spec.chi_values : spec.sigma_values)[name] = parse_roots(value);
    }
    for (const auto& [name, cls] : spec.species) {
        int have = spec.chi_values.count(name) + spec.sigma_values.count(name);
        if (have != 1)
            throw std::invalid_argument(path + ": species '" + name +
                                        "' needs exactly one of chi." + name + " / sigma." + name);
    }
    return spec;
}

inline MajidStructure structure_from_spec(const StructureSpecFile& spec) {
    long M = value_modulus(spec.cocycle);
    for (const auto* tab : {&spec.chi_values, &spec.sigma_values})
        for (const auto& [name, roots] : *tab)
            for (const auto& r : roots) M = std::lcm(M, r.modulus);
    std::vector<SpeciesSpec> species;
    for (const auto& [name, cls] : spec.species) {
        std::vector<RootOfUnity> gen_values;
        if (auto it = spec.chi_values.find(name); it != spec.chi_values.end()) {
            for (const auto& r : it->second) gen_values.push_back(embed(r, M));
        } else {
            const auto& sig = spec.sigma_values.at(name);
            for (size_t j = 0; j < spec.group.rank(); ++j) {
                GrpElt gj = identity(spec.group);
                gj.c[j] = 1;
                gen_values.push_back(
                    embed(chi_from_relation_scalar(spec.cocycle, cls, gj, sig[j]), M));
            }
        }
        species.push_back(
            SpeciesSpec{cls, name, extend_character(spec.cocycle, cls, gen_values, M)});
    }
    return MajidStructure(spec.cocycle, std::move(species));
}

inline nlohmann::json pathvec_to_json(const HopfQuiver& q, const PathVec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, coeff] : v) {
        nlohmann::json term;
        term["path"] = to_string(q, p);
        term["coeff"] = to_string(coeff);
        arr.push_back(term);
    }
    return arr;
}

inline int cmd_cocycle_check(const std::vector<std::string>& literals, const Options& opt,
                             std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, std::string>> results;  // literal -> "" or reason
    bool all_ok = true;
    for (const std::string& lit : literals) {
        Cocycle3 phi = cocycle_from_string(lit);
        if (group_of(phi).order() > opt.max_group_order)
            throw std::invalid_argument("group order exceeds --max-group-order");
        std::string why;
        bool ok = check_3cocycle(phi, &why);
        all_ok &= ok;
        results.push_back({to_string(phi), ok ? "" : why});
    }
    std::string report;
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [lit, why] : results) {
            nlohmann::json j;
            j["cocycle"] = lit;
            j["pass"] = why.empty();
            j["reason"] = why;
            arr.push_back(j);
        }
        report = arr.dump(2) + "\n";
    } else if (opt.format == "csv") {
        report = "cocycle,pass\n";
        for (const auto& [lit, why] : results)
            report += lit + "," + (why.empty() ? "true" : "false") + "\n";
    } else {
        for (const auto& [lit, why] : results)
            report += lit + ": " + (why.empty() ? "pass" : "FAIL (" + why + ")") + "\n";
    }
    int rc = deliver(report, opt, out, err);
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

inline int cmd_congruence(const std::string& which, const std::vector<long>& params,
                          const Options& opt, std::ostream& out, std::ostream& err) {
    CongruenceSolutionSet sols;
    if (which == "A") {
        if (params.size() != 3)
            throw std::invalid_argument("congruence A takes exactly: m n b");
        sols = solve_congruence_A(params[0], params[1], params[2]);
    } else if (which == "B") {
        if (params.size() != 4)
            throw std::invalid_argument("congruence B takes exactly: m alpha beta a");
        sols = solve_congruence_B(params[0], params[1], params[2], params[3]);
    } else {
        throw std::invalid_argument("congruence kind must be A or B");
    }
    std::string report;
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [x, y] : sols.solutions) {
            nlohmann::json j;
            j["x"] = x;
            j["y"] = y;
            arr.push_back(j);
        }
        report = arr.dump(2) + "\n";
    } else if (opt.format == "csv") {
        report = "x,y\n";
        for (auto [x, y] : sols.solutions)
            report += std::to_string(x) + "," + std::to_string(y) + "\n";
    } else {
        report = "solutions modulo (x mod " + std::to_string(sols.x_modulus) + ", y mod " +
                 std::to_string(sols.y_modulus) + "): " +
                 std::to_string(sols.solutions.size()) + "\n";
        for (auto [x, y] : sols.solutions)
            report += "  x=" + std::to_string(x) + " y=" + std::to_string(y) + "\n";
    }
    return deliver(report, opt, out, err);
}

inline int cmd_classify(long p, bool p4, bool do_verify, const Options& opt, std::ostream& out,
                        std::ostream& err) {
    long order = p4 ? p * p * p : p * p;  // largest group order in the family set
    if (order > opt.max_group_order)
        throw std::invalid_argument("group order exceeds --max-group-order");
    std::vector<ClassRecord> recs = p4 ? list_p4(p) : list_p3(p);
    std::vector<ReportEntry> entries;
    bool all_ok = true;
    for (auto& rec : recs) {
        ReportEntry e{std::move(rec), std::nullopt};
        if (do_verify) {
            e.verification = verify_record(e.record, opt.max_levels);
            all_ok &= e.verification->ok;
        }
        entries.push_back(std::move(e));
    }
    int rc = deliver(emit_report(entries, opt.format), opt, out, err);
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

inline int cmd_verify(const std::string& file, const Options& opt, std::ostream& out,
                      std::ostream& err) {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot read record file '" + file + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<ClassRecord> recs = records_from_json_text(buf.str());
    std::vector<ReportEntry> entries;
    bool all_ok = true;
    for (auto& rec : recs) {
        if (rec.group.order() > opt.max_group_order)
            throw std::invalid_argument("group order exceeds --max-group-order");
        ReportEntry e{std::move(rec), std::nullopt};
        e.verification = verify_record(e.record, opt.max_levels);
        all_ok &= e.verification->ok;
        entries.push_back(std::move(e));
    }
    int rc = deliver(emit_report(entries, opt.format), opt, out, err);
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

inline int cmd_bimodule_check(const std::string& file, const Options& opt, std::ostream& out,
                              std::ostream& err) {
    StructureSpecFile spec = parse_structure_file(file);
    if (spec.group.order() > opt.max_group_order)
        throw std::invalid_argument("group order exceeds --max-group-order");
    std::vector<std::pair<std::string, std::string>> results;  // check name -> "" or reason
    {
        std::string why;
        bool ok = check_3cocycle(spec.cocycle, &why);
        results.push_back({"cocycle", ok ? "" : why});
    }
    MajidStructure S = structure_from_spec(spec);
    for (size_t s = 0; s < S.species_count(); ++s) {
        std::string why;
        bool ok = character_is_projective(S.cocycle(), S.species(s).cls, S.species(s).chi,
                                          S.modulus(), &why);
        results.push_back({"character " + S.species(s).name, ok ? "" : why});
    }
    {
        std::string why;
        bool ok = check_bimodule_axioms(S, &why);
        results.push_back({"bimodule axioms", ok ? "" : why});
    }
    bool all_ok = true;
    for (const auto& [name, why] : results) all_ok &= why.empty();
    std::string report;
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [name, why] : results) {
            nlohmann::json j;
            j["check"] = name;
            j["pass"] = why.empty();
            j["reason"] = why;
            arr.push_back(j);
        }
        report = arr.dump(2) + "\n";
    } else if (opt.format == "csv") {
        report = "check,pass\n";
        for (const auto& [name, why] : results)
            report += name + "," + (why.empty() ? "true" : "false") + "\n";
    } else {
        for (const auto& [name, why] : results)
            report += name + ": " + (why.empty() ? "pass" : "FAIL (" + why + ")") + "\n";
    }
    int rc = deliver(report, opt, out, err);
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

inline int cmd_shuffle(const std::string& file, const std::string& p1, const std::string& p2,
                       const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.format == "csv")
        throw std::invalid_argument("shuffle does not support --format csv");
    StructureSpecFile spec = parse_structure_file(file);
    if (spec.group.order() > opt.max_group_order)
        throw std::invalid_argument("group order exceeds --max-group-order");
    MajidStructure S = structure_from_spec(spec);
    Path a = path_from_string(S.quiver(), p1);
    Path b = path_from_string(S.quiver(), p2);
    PathVec prod = shuffle(S, a, b);
    std::string report;
    if (opt.format == "json") {
        nlohmann::json j;
        j["product"] = pathvec_to_json(S.quiver(), prod);
        j["zero"] = prod.empty();
        report = j.dump(2) + "\n";
    } else {
        report = to_string(S.quiver(), prod) + "\n";
    }
    return deliver(report, opt, out, err);
}

inline int cmd_power(const std::string& file, const std::string& name, long l, const Options& opt,
                     std::ostream& out, std::ostream& err) {
    if (opt.format == "csv")
        throw std::invalid_argument("power does not support --format csv");
    StructureSpecFile spec = parse_structure_file(file);
    if (spec.group.order() > opt.max_group_order)
        throw std::invalid_argument("group order exceeds --max-group-order");
    MajidStructure S = structure_from_spec(spec);
    size_t idx = S.species_count();
    for (size_t s = 0; s < S.species_count(); ++s)
        if (S.species(s).name == name) idx = s;
    if (idx == S.species_count())
        throw std::invalid_argument("no species named '" + name + "' in " + file);
    PathVec pw = left_power(S, idx, l);
    std::string report;
    if (opt.format == "json") {
        nlohmann::json j;
        j["power"] = pathvec_to_json(S.quiver(), pw);
        j["zero"] = pw.empty();
        report = j.dump(2) + "\n";
    } else {
        report = to_string(S.quiver(), pw) + "\n";
    }
    return deliver(report, opt, out, err);
}

}  // namespace cli_detail

// Entry point shared by the installed binary and the in-process CLI tests.
// Exit codes: 0 success, 1 a requested check failed, 2 usage/input error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"exact pointed structures on group path coalgebras"};
    app.name("majiq");
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-group-order", opt.max_group_order, "largest admissible group order")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-levels", opt.max_levels, "cap on dimension-closure levels")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out_file, "write the report to a file instead of stdout");
    app.require_subcommand(1);

    std::vector<std::string> cocycle_literals;
    auto* sc_cocycle = app.add_subcommand("cocycle-check", "certify 3-cocycle identities");
    sc_cocycle->add_option("cocycle", cocycle_literals, "literals like rank2(2,2;1,0,0)")
        ->required();

    std::string cong_kind;
    std::vector<long> cong_params;
    auto* sc_cong = app.add_subcommand("congruence", "solve an existence congruence");
    sc_cong->add_option("kind", cong_kind, "A or B")->required();
    sc_cong->add_option("params", cong_params, "A: m n b;  B: m alpha beta a")->required();

    long p3_p = 0, p4_p = 0;
    bool p3_verify = false, p4_verify = false;
    auto* sc_p3 = app.add_subcommand("classify-p3", "emit the records of dimension p^3");
    sc_p3->add_option("p", p3_p, "prime")->required();
    sc_p3->add_flag("--verify", p3_verify, "machine-check every record");
    auto* sc_p4 = app.add_subcommand("classify-p4", "emit the records of dimension p^4");
    sc_p4->add_option("p", p4_p, "prime")->required();
    sc_p4->add_flag("--verify", p4_verify, "machine-check every record");

    std::string verify_file;
    auto* sc_verify = app.add_subcommand("verify", "re-verify records from a JSON file");
    sc_verify->add_option("record-file", verify_file)->required();

    std::string bim_file;
    auto* sc_bim = app.add_subcommand("bimodule-check", "check a structure spec file");
    sc_bim->add_option("structure-file", bim_file)->required();

    std::string sh_file, sh_p1, sh_p2;
    auto* sc_shuffle = app.add_subcommand("shuffle", "multiply two paths");
    sc_shuffle->add_option("structure-file", sh_file)->required();
    sc_shuffle->add_option("path1", sh_p1)->required();
    sc_shuffle->add_option("path2", sh_p2)->required();

    std::string pw_file, pw_name;
    long pw_l = 0;
    auto* sc_power = app.add_subcommand("power", "left-nested power of a species");
    sc_power->add_option("structure-file", pw_file)->required();
    sc_power->add_option("species", pw_name)->required();
    sc_power->add_option("l", pw_l)->required()->check(CLI::NonNegativeNumber);

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "majiq: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sc_cocycle->parsed()) return cmd_cocycle_check(cocycle_literals, opt, out, err);
        if (sc_cong->parsed()) return cmd_congruence(cong_kind, cong_params, opt, out, err);
        if (sc_p3->parsed()) return cmd_classify(p3_p, false, p3_verify, opt, out, err);
        if (sc_p4->parsed()) return cmd_classify(p4_p, true, p4_verify, opt, out, err);
        if (sc_verify->parsed()) return cmd_verify(verify_file, opt, out, err);
        if (sc_bim->parsed()) return cmd_bimodule_check(bim_file, opt, out, err);
        if (sc_shuffle->parsed()) return cmd_shuffle(sh_file, sh_p1, sh_p2, opt, out, err);
        if (sc_power->parsed()) return cmd_power(pw_file, pw_name, pw_l, opt, out, err);
    } catch (const std::invalid_argument& e) {
        err << "majiq: " << e.what() << "\n";
        return 2;
    }
    err << "majiq: no command selected\n";
    return 2;
}

}  // namespace majiq
