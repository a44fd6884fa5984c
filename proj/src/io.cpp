#include "umbral/io.hpp"

#include "umbral/errors.hpp"

#include <fstream>

namespace umbral {

namespace {

rat rat_from_json(const nlohmann::json& j) {
    if (j.is_string())
        return rat::from_string(j.get<std::string>());
    if (j.is_number_integer())
        return rat(static_cast<long long>(j.get<long long>()));
    throw parse_error("expected a rational string or integer, got: " + j.dump());
}

std::vector<rat> rat_list_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array())
        throw parse_error(std::string(what) + " must be an array");
    std::vector<rat> out;
    out.reserve(j.size());
    for (const auto& item : j)
        out.push_back(rat_from_json(item));
    return out;
}

} // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("bad JSON in " + path + ": " + e.what());
    }
}

poly_seq poly_seq_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw parse_error("polynomial sequence must be an array of rows");
    std::vector<std::vector<rat>> rows;
    rows.reserve(j.size());
    for (const auto& row : j)
        rows.push_back(rat_list_from_json(row, "sequence row"));
    try {
        return poly_seq(std::move(rows));
    } catch (const invariant_violation& e) {
        throw parse_error(std::string("invalid polynomial sequence: ") + e.what());
    }
}

nlohmann::json poly_seq_to_json(const poly_seq& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : p.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row)
            r.push_back(c.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

recurrence recurrence_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw parse_error("recurrence must be a JSON object");
    std::optional<std::vector<rat>> rhs;
    if (j.contains("rhs"))
        rhs = rat_list_from_json(j.at("rhs"), "rhs");
    if (j.contains("taps")) {
        if (j.contains("matrix"))
            throw parse_error("recurrence takes taps or matrix, not both");
        return recurrence::from_taps(rat_list_from_json(j.at("taps"), "taps"), std::move(rhs));
    }
    if (j.contains("matrix")) {
        std::vector<std::vector<rat>> rows;
        if (!j.at("matrix").is_array())
            throw parse_error("matrix must be an array of rows");
        for (const auto& row : j.at("matrix"))
            rows.push_back(rat_list_from_json(row, "matrix row"));
        return recurrence::from_matrix(std::move(rows), std::move(rhs));
    }
    throw parse_error("recurrence needs a taps or matrix key");
}

poset poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw parse_error("poset needs an object with an n key");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (j.contains("le")) {
        if (!j.at("le").is_array())
            throw parse_error("le must be an array of pairs");
        for (const auto& pr : j.at("le")) {
            if (!pr.is_array() || pr.size() != 2)
                throw parse_error("each le entry must be a pair [a, b]");
            pairs.emplace_back(pr[0].get<std::size_t>(), pr[1].get<std::size_t>());
        }
    }
    try {
        return poset::from_pairs(n, pairs);
    } catch (const invariant_violation& e) {
        throw parse_error(std::string("invalid poset: ") + e.what());
    }
}

umbra_env umbra_env_from_json(const nlohmann::json& j) {
    umbra_env env;
    auto add_one = [&](const nlohmann::json& item) {
        if (!item.is_object() || !item.contains("name") || !item.contains("moments"))
            throw parse_error("umbra needs name and moments keys");
        std::string name = item.at("name").get<std::string>();
        std::vector<rat> moments = rat_list_from_json(item.at("moments"), "moments");
        try {
            env.add(umbra(std::move(name), std::move(moments)));
        } catch (const invariant_violation& e) {
            throw parse_error(std::string("invalid umbra: ") + e.what());
        }
    };
    if (j.is_array()) {
        for (const auto& item : j)
            add_one(item);
    } else {
        add_one(j);
    }
    return env;
}

nlohmann::json series_to_json(const series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i <= s.order(); ++i)
        coeffs.push_back(s.coeff(i).str());
    return nlohmann::json{{"flavor", std::string(flavor_name(s.flav()))},
                          {"order", s.order()},
                          {"coeffs", std::move(coeffs)}};
}

nlohmann::json cfunction_to_json(const cfunction<n_plus>& f) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t e = 0; e <= f.semigroup().bound; ++e)
        values.push_back(f.at(e).str());
    return nlohmann::json{{"bound", f.semigroup().bound}, {"values", std::move(values)}};
}

} // namespace umbral
