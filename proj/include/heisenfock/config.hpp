#pragma once

#include "heisenfock/graded.hpp"
#include "heisenfock/heis_core.hpp"
#include "heisenfock/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisenfock {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Run configuration: the basis dimension, the pairing on it, and named
 * graded spaces. JSON layout:
 *   {"dimension": 2,
 *    "pairing": [["1", "1/2"], [0, "-3"]],
 *    "spaces": {"H": [[0, 2], [1, 1]]}}
 */
struct Config {
    std::size_t dimension = 1;
    PairingMatrix pairing = PairingMatrix::identity(1);
    std::map<std::string, GradedDims> spaces;

    static Config point() { return Config{}; }
};

namespace detail {

inline Rational json_rational(const nlohmann::json& v) {
    if (v.is_number_integer())
        return Rational(Integer(v.dump()));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("pairing entries must be integers or \"p/q\" strings, got " + v.dump());
}

} // namespace detail

inline Config parse_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    Config cfg;
    auto dim_it = doc.find("dimension");
    if (dim_it == doc.end() || !dim_it->is_number_integer() || dim_it->get<long long>() < 0)
        throw ConfigError("config needs a nonnegative integer \"dimension\"");
    cfg.dimension = dim_it->get<std::size_t>();

    auto pairing_it = doc.find("pairing");
    if (pairing_it == doc.end() || !pairing_it->is_array())
        throw ConfigError("config needs a \"pairing\" array of rows");
    if (pairing_it->size() != cfg.dimension)
        throw ConfigError("pairing must have " + std::to_string(cfg.dimension) + " rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : *pairing_it) {
        if (!row.is_array() || row.size() != cfg.dimension)
            throw ConfigError("pairing must be a " + std::to_string(cfg.dimension) + "x" +
                              std::to_string(cfg.dimension) + " matrix");
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(detail::json_rational(v));
        rows.push_back(std::move(r));
    }
    cfg.pairing = PairingMatrix(std::move(rows));

    if (auto sp = doc.find("spaces"); sp != doc.end()) {
        if (!sp->is_object())
            throw ConfigError("\"spaces\" must be an object");
        for (const auto& [label, entries] : sp->items()) {
            if (!entries.is_array())
                throw ConfigError("space '" + label + "' must be an array of [degree, dim]");
            GradedDims w;
            for (const auto& e : entries) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer() || e[1].get<long long>() < 0)
                    throw ConfigError("space '" + label + "': bad entry " + e.dump());
                w.add(e[0].get<int>(), Integer(e[1].dump()));
            }
            cfg.spaces.emplace(label, std::move(w));
        }
    }
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

/// "0:2,1:1" -> {0:2, 1:1}
inline GradedDims parse_graded_inline(const std::string& text) {
    GradedDims w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("graded space entries look like degree:dim, got '" + item + "'");
        try {
            std::size_t used = 0;
            int deg = std::stoi(item.substr(0, colon), &used);
            if (used != colon)
                throw std::invalid_argument("degree");
            std::string dim = item.substr(colon + 1);
            Rational r = parse_rational(dim);
            if (r.get_den() != 1 || r < 0)
                throw std::invalid_argument("dim");
            w.add(deg, r.get_num());
        } catch (const std::exception&) {
            throw ConfigError("bad graded space entry '" + item + "'");
        }
    }
    return w;
}

} // namespace heisenfock
