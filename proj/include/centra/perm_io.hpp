/**************************************************************************
 * include/centra/perm_io.hpp
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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "centra/errors.hpp"
#include "centra/permutation.hpp"

namespace centra {

/// Contents of a generator file:
///
///     # comment
///     degree 11
///     order 7920
///     2 10 4 3 9 6 7 8 5 1 11
///     ...
///
/// Images are 1-based, one generator per line. `order` is optional.
struct GeneratorFile {
    std::size_t degree = 0;
    std::optional<Order> order;
    std::vector<Permutation> generators;
    std::vector<std::string> comments;

    static GeneratorFile parse(std::istream& in) {
        GeneratorFile f;
        bool have_degree = false;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) {
                auto c = line.substr(h + 1);
                if (!c.empty() && c.front() == ' ') c.erase(0, 1);
                f.comments.push_back(c);
                line.erase(h);
            }
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first)) continue;
            auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
            if (first == "degree") {
                if (have_degree || !(ls >> f.degree) || f.degree == 0) throw InvalidInput("bad degree line" + where());
                if (f.degree > kMaxDegree) throw InvalidInput("degree exceeds ceiling 10000" + where());
                have_degree = true;
                continue;
            }
            if (first == "order") {
                std::string n;
                if (!(ls >> n) || n.find_first_not_of("0123456789") != std::string::npos) throw InvalidInput("bad order line" + where());
                f.order = Order(n);
                continue;
            }
            if (!have_degree) throw InvalidInput("generator before 'degree' line" + where());
            std::vector<long long> images;
            std::istringstream is(line);
            long long v;
            while (is >> v) images.push_back(v);
            if (!is.eof()) throw InvalidInput("non-numeric image" + where());
            if (images.size() != f.degree)
                throw InvalidInput("generator has " + std::to_string(images.size()) + " images, expected " + std::to_string(f.degree) + where());
            f.generators.push_back(Permutation::from_images_1based(images));
        }
        if (!have_degree) throw InvalidInput("generator file has no 'degree' line");
        return f;
    }

    static GeneratorFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read generator file " + path);
        try {
            return parse(in);
        } catch (const InvalidInput& e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    std::string to_text() const {
        std::string s;
        for (const auto& c : comments) s += "# " + c + "\n";
        s += "degree " + std::to_string(degree) + "\n";
        if (order) s += "order " + order->str() + "\n";
        for (const auto& g : generators) {
            for (std::size_t i = 0; i < g.degree(); ++i) s += (i ? " " : "") + std::to_string(g(i) + 1);
            s += "\n";
        }
        return s;
    }
};

} // namespace centra
