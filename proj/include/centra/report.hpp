/**************************************************************************
 * include/centra/report.hpp
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

#include <fstream>
#include <string>

#include <json.hpp>

#include "centra/errors.hpp"
#include "centra/properties.hpp"

namespace centra {

/// Orders fit in 64 bits for every group this library can enumerate; larger
/// ones are written as decimal strings.
inline nlohmann::json order_json(const Order& n) {
    if (n <= Order(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(n);
    return n.str();
}

inline Order order_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Order(j.get<std::string>());
    return Order(j.get<std::uint64_t>());
}

/// Report as JSON with sorted keys. elapsed_ms is null unless `timing`,
/// so that repeated runs give identical bytes.
inline nlohmann::json to_json(const PropertyReport& r, bool timing = false) {
    nlohmann::json j;
    j["group"] = r.group;
    j["pi"] = r.pi.to_string();
    j["outcome"] = to_string(r.outcome);
    if (r.witness) {
        nlohmann::json w;
        w["element"] = r.witness->element.to_cycle_string();
        w["degree"] = r.witness->element.degree();
        w["order"] = order_json(r.witness->order);
        w["centraliser_order"] = order_json(r.witness->centraliser_order);
        w["derived_orders"] = nlohmann::json::array();
        for (const auto& o : r.witness->derived_orders) w["derived_orders"].push_back(order_json(o));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["classes_examined"] = r.classes_examined;
    j["cap"] = r.cap;
    j["seed"] = r.seed;
    j["elapsed_ms"] = timing ? nlohmann::json(r.elapsed_ms) : nlohmann::json(nullptr);
    if (r.outcome == Outcome::Capped) j["cap_message"] = r.cap_message;
    return j;
}

inline PropertyReport report_from_json(const nlohmann::json& j) {
    try {
        PropertyReport r;
        r.group = j.at("group").get<std::string>();
        r.pi = PiSet::parse(j.at("pi").get<std::string>());
        r.outcome = parse_outcome(j.at("outcome").get<std::string>());
        if (!j.at("witness").is_null()) {
            const auto& w = j.at("witness");
            Witness x;
            x.element = parse_cycles(w.at("element").get<std::string>(), w.at("degree").get<std::size_t>());
            x.order = order_from_json(w.at("order"));
            x.centraliser_order = order_from_json(w.at("centraliser_order"));
            for (const auto& o : w.at("derived_orders")) x.derived_orders.push_back(order_from_json(o));
            r.witness = std::move(x);
        }
        r.classes_examined = j.at("classes_examined").get<std::uint64_t>();
        r.cap = j.at("cap").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
        if (j.contains("cap_message")) r.cap_message = j.at("cap_message").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed report: ") + e.what());
    }
}

inline std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << canonical_dump(j);
    if (!out) throw Error("write failed: " + path);
}

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

inline nlohmann::json to_json(const CrosscheckReport& c) {
    nlohmann::json j;
    j["pi"] = c.pi.to_string();
    j["violations"] = c.violations;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : c.rows) {
        nlohmann::json row;
        row["group"] = r.group;
        row["pi_effective"] = r.pi_effective.to_string();
        row["status"] = r.status;
        row["membership"] = r.membership.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.membership);
        j["rows"].push_back(row);
    }
    return j;
}

} // namespace centra
