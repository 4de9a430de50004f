/**************************************************************************
 * include/centra/cli.hpp
 *
 * Copyright 2026 The centra Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/modrep.hpp"
#include "centra/ncgraph.hpp"
#include "centra/properties.hpp"
#include "centra/report.hpp"
#include "centra/tables.hpp"

namespace centra::cli {

enum Exit { kOk = 0, kPropertyFails = 1, kUsage = 2, kCap = 3 };

/// Catalogue name first, then a generator file path.
inline PermGroup resolve_group(const std::string& selector) {
    if (parse_group_name(selector)) return build(selector);
    if (std::filesystem::exists(selector)) return load_group_file(selector);
    throw InvalidInput("unknown group '" + selector + "'");
}

struct RunConfig {
    std::string group;
    std::string pi = "all";
    std::uint64_t cap = kDefaultElementCap;
    std::uint64_t orbit_cap = kDefaultOrbitCap;
    std::uint64_t vector_cap = kDefaultVectorCap;
    std::uint64_t seed = 1;
    std::string out;
    std::string method = "auto";
    bool timing = false;
    bool domination = false;
    std::string module = "perm";
    std::uint32_t p = 2;
    std::string query;
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::string family;
    bool list = false;
};

inline CentraliserMethod parse_method(const std::string& m) {
    if (m == "auto") return CentraliserMethod::Automatic;
    if (m == "filter") return CentraliserMethod::Filter;
    if (m == "orbit") return CentraliserMethod::ConjugationOrbit;
    throw InvalidInput("unknown centraliser method '" + m + "'");
}

inline void emit(std::ostream& out, const nlohmann::json& j, const std::string& path) {
    out << canonical_dump(j);
    if (!path.empty()) write_json(path, j);
}

inline int cmd_check(const RunConfig& c, std::ostream& out) {
    const auto g = resolve_group(c.group);
    const auto pi = PiSet::parse(c.pi);
    auto r = check_soluble_pi_centralisers(g, pi, c.cap, c.group, c.seed, parse_method(c.method));
    emit(out, to_json(r, c.timing), c.out);
    switch (r.outcome) {
    case Outcome::Holds: return kOk;
    case Outcome::Fails: return kPropertyFails;
    case Outcome::Capped: return kCap;
    }
    return kOk;
}

inline int cmd_ncgraph(const RunConfig& c, std::ostream& out) {
    const auto g = resolve_group(c.group);
    const auto gamma = NCGraph::build(g, c.cap);
    const auto fp = fingerprint(gamma, c.cap, 1500, 20000, c.seed);
    nlohmann::json j;
    j["group"] = c.group;
    j["order"] = order_json(g.order());
    j["centre_order"] = order_json(gamma.centre_order());
    j["vertex_count"] = fp.vertex_count;
    j["degrees"] = nlohmann::json::array();
    for (const auto& [d, m] : fp.degrees) j["degrees"].push_back({d, m});
    j["fingerprint"] = {fp.vertex_count, j["degrees"], fp.triangles};
    j["triangles_exact"] = fp.triangles_exact;
    j["domination"] = nullptr;
    if (c.domination)
        if (auto pr = domination_pair(gamma, c.cap))
            j["domination"] = {pr->first.to_cycle_string(), pr->second.to_cycle_string()};
    emit(out, j, c.out);
    return kOk;
}

inline int cmd_h1(const RunConfig& c, std::ostream& out) {
    const auto sp = shipped_presentation(c.group);
    if (!nt::is_prime(c.p)) throw InvalidInput(std::to_string(c.p) + " is not prime");
    GModule m;
    if (c.module == "perm") m = GModule::permutation_module(sp.group, c.p);
    else if (c.module == "deleted") m = GModule::permutation_module(sp.group, c.p).deleted_submodule();
    else m = GModule::load(c.module, sp.group);
    const auto ds = derivation_space(sp.presentation, m);
    nlohmann::json j;
    j["group"] = sp.name;
    j["module"] = c.module;
    j["p"] = m.p();
    j["dimension"] = m.dimension();
    j["dim_z1"] = ds.dim_z1;
    j["dim_b1"] = ds.dim_b1;
    j["dim_h1"] = ds.dim_h1;
    j["dim_fixed"] = fixed_subspace(m).size();
    j["complements"] = nullptr;
    try {
        j["complements"] = complement_count_oracle(sp.presentation, m, c.vector_cap);
    } catch (const CapExceeded&) {
    }
    emit(out, j, c.out);
    return kOk;
}

inline int cmd_tables(const RunConfig& c, std::ostream& out) {
    const auto& q = c.query;
    auto pi = [&] { return PiSet::parse(c.pi); };
    if (q == "thickness") out << thickness_bound(c.p) << "\n";
    else if (q == "xalt") out << (x_alt_membership(c.n, pi()) ? "true" : "false") << "\n";
    else if (q == "xclass") out << x_class_bound(ClassicalFamily::L, pi()) << "\n";
    else if (q == "xclass-variant") out << x_class_bound_variant(pi()) << "\n";
    else if (q == "psp") out << psp_bound(pi()) << "\n";
    else if (q == "xspor") out << (x_spor_membership(c.group, pi()) ? "true" : "false") << "\n";
    else if (q == "Q") out << (q_in_Q(c.q) ? "true" : "false") << "\n";
    else if (q == "spor-alt") out << sporadic_alt_degree(c.group) << "\n";
    else if (q == "exc-alt") out << exceptional_alt_degree(c.family) << "\n";
    else if (q == "table1") {
        for (const auto& s : table1_lookup(pi())) out << s << "\n";
    } else if (q == "verify") {
        const auto file = ClassTables::load(tables_path());
        const bool same = file == ClassTables::builtin();
        out << (same ? "match" : "mismatch") << " " << std::hex << file.hash() << std::dec << "\n";
        return same ? kOk : kPropertyFails;
    } else {
        throw InvalidInput("unknown query '" + q + "'");
    }
    return kOk;
}

inline int cmd_catalogue(const RunConfig& c, std::ostream& out) {
    if (!c.list) throw InvalidInput("catalogue: use --list");
    for (const auto& e : catalogue()) {
        out << e.name << "\t" << build(e.name).order().str() << "\t" << (e.simple ? "simple" : "-");
        for (const auto& id : e.identifications) out << "\t" << id.to_string();
        out << "\n";
    }
    return kOk;
}

inline int cmd_crosscheck(const RunConfig& c, std::ostream& out) {
    const auto rep = classification_crosscheck(PiSet::parse(c.pi), c.cap);
    emit(out, to_json(rep), c.out);
    return rep.violations == 0 ? kOk : kPropertyFails;
}

/// Parses argv and runs one command; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Centraliser solubility and related finite group computations", "centra"};
    app.require_subcommand(1);
    RunConfig c;
    auto caps = [&](CLI::App* s) {
        s->add_option("--cap", c.cap, "element enumeration cap")->check(CLI::PositiveNumber);
        s->add_option("--orbit-cap", c.orbit_cap, "orbit cap")->check(CLI::PositiveNumber);
        s->add_option("--vector-cap", c.vector_cap, "vector cap")->check(CLI::PositiveNumber);
        s->add_option("--seed", c.seed, "random seed");
        s->add_option("--out", c.out, "write the JSON result to this file");
    };
    auto* check = app.add_subcommand("check", "are all non-central pi-element centralisers soluble");
    check->add_option("--group", c.group, "catalogue name or generator file")->required();
    check->add_option("--pi", c.pi, "primes, e.g. 2,3,5, or all");
    check->add_option("--method", c.method, "centraliser method: auto, filter, orbit");
    check->add_flag("--timing", c.timing, "record elapsed time in the report");
    caps(check);
    auto* nc = app.add_subcommand("ncgraph", "non-commuting graph invariants");
    nc->add_option("--group", c.group, "catalogue name or generator file")->required();
    nc->add_flag("--domination", c.domination, "search for a domination pair");
    caps(nc);
    auto* h1 = app.add_subcommand("h1", "first cohomology of a shipped presentation");
    h1->add_option("--group", c.group, "group with a shipped presentation")->required();
    h1->add_option("--module", c.module, "perm, deleted or a module file");
    h1->add_option("--p", c.p, "prime")->required();
    caps(h1);
    auto* tab = app.add_subcommand("tables", "classification table queries");
    tab->add_option("--query", c.query,
                    "thickness, xalt, xclass, xclass-variant, psp, xspor, Q, spor-alt, exc-alt, table1, verify")
        ->required();
    tab->add_option("--pi", c.pi, "primes");
    tab->add_option("--p", c.p, "prime");
    tab->add_option("--n", c.n, "alternating degree");
    tab->add_option("--q", c.q, "field size");
    tab->add_option("--group", c.group, "sporadic group name");
    tab->add_option("--family", c.family, "exceptional family");
    auto* cat = app.add_subcommand("catalogue", "shipped groups");
    cat->add_flag("--list", c.list, "list the catalogue");
    auto* cc = app.add_subcommand("crosscheck", "classification soundness over the catalogue");
    cc->add_option("--pi", c.pi, "primes")->required();
    caps(cc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "centra: " << e.what() << "\n";
        return kUsage;
    }
    try {
        if (check->parsed()) return cmd_check(c, out);
        if (nc->parsed()) return cmd_ncgraph(c, out);
        if (h1->parsed()) return cmd_h1(c, out);
        if (tab->parsed()) return cmd_tables(c, out);
        if (cat->parsed()) return cmd_catalogue(c, out);
        if (cc->parsed()) return cmd_crosscheck(c, out);
    } catch (const CapExceeded& e) {
        err << "centra: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        err << "centra: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace centra::cli
