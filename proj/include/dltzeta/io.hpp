#ifndef DLTZETA_IO_HPP
#define DLTZETA_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "lattice.hpp"
#include "newton.hpp"

namespace dltz {

using json = nlohmann::json;

inline json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::schema_error, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error &e) {
        // The message carries the line and column.
        throw Error(Errc::schema_error, path + ": " + e.what());
    }
}

inline Integer json_integer(const json &v, const std::string &where)
{
    if (v.is_number_integer())
        return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::invalid_argument &) {
        }
    }
    throw Error(Errc::schema_error, where + ": expected an integer");
}

/// Fan from {"rays": [[...]], "cones": [[...]], "labels": [...]?}. Rays that
/// are not primitive are divided by their content; a warning is appended.
inline Fan fan_from_json(const json &j, std::vector<std::string> *warnings = nullptr)
{
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones") || !j["rays"].is_array() ||
        !j["cones"].is_array())
        throw Error(Errc::schema_error, "fan must be an object with arrays \"rays\" and \"cones\"");
    std::vector<LatticeVector> rays;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < j["rays"].size(); ++i) {
        const json &r = j["rays"][i];
        std::string where = "rays[" + std::to_string(i) + "]";
        if (!r.is_array() || r.empty())
            throw Error(Errc::schema_error, where + ": expected a non-empty integer array");
        LatticeVector v;
        for (std::size_t k = 0; k < r.size(); ++k)
            v.push_back(json_integer(r[k], where));
        if (i == 0)
            rank = v.size();
        else if (v.size() != rank)
            throw Error(Errc::schema_error, where + ": length differs from rays[0]");
        if (is_zero(v))
            throw Error(Errc::schema_error, where + ": zero ray");
        if (!is_primitive(v)) {
            LatticeVector p = primitive(v);
            if (warnings)
                warnings->push_back("warning: " + where + " " + to_string(v) + " replaced by primitive " + to_string(p));
            v = p;
        }
        rays.push_back(std::move(v));
    }
    if (rays.empty())
        throw Error(Errc::schema_error, "fan has no rays");
    std::vector<ConeIdx> cones;
    for (std::size_t i = 0; i < j["cones"].size(); ++i) {
        const json &c = j["cones"][i];
        std::string where = "cones[" + std::to_string(i) + "]";
        if (!c.is_array())
            throw Error(Errc::schema_error, where + ": expected an array of ray indices");
        ConeIdx idx;
        for (const auto &x : c) {
            if (!x.is_number_integer())
                throw Error(Errc::schema_error, where + ": ray indices must be integers");
            idx.push_back(x.get<int>());
        }
        cones.push_back(std::move(idx));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array())
            throw Error(Errc::schema_error, "labels must be an array of strings");
        for (const auto &l : j["labels"]) {
            if (!l.is_string())
                throw Error(Errc::schema_error, "labels must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return Fan::make(rank, std::move(rays), std::move(cones), std::move(labels));
}

inline Fan load_fan(const std::string &path, std::vector<std::string> *warnings = nullptr)
{
    try {
        return fan_from_json(read_json_file(path), warnings);
    } catch (const Error &e) {
        if (std::string(e.what()).rfind(path, 0) == 0)
            throw;
        throw Error(e.code(), path + ": " + e.what());
    }
}

inline Polynomial load_polynomial(const std::string &path)
{
    try {
        return parse_polynomial(read_json_file(path));
    } catch (const Error &e) {
        if (std::string(e.what()).rfind(path, 0) == 0)
            throw;
        throw Error(e.code(), path + ": " + e.what());
    }
}

inline json to_json(const LatticeVector &v)
{
    json a = json::array();
    for (const auto &x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

inline json fan_to_json(const Fan &f)
{
    json j;
    j["rays"] = json::array();
    for (const auto &r : f.rays)
        j["rays"].push_back(to_json(r));
    j["cones"] = f.cones;
    j["labels"] = f.labels;
    return j;
}

} // namespace dltz

#endif
