#pragma once

#include "umbral/csemigroup.hpp"
#include "umbral/genfun.hpp"
#include "umbral/incidence.hpp"
#include "umbral/semantic.hpp"
#include "umbral/series.hpp"
#include "umbral/token.hpp"

#include <json.hpp>

#include <string>

namespace umbral {

/// Parses a file into JSON, wrapping stream and syntax failures in
/// parse_error with the file name attached.
nlohmann::json load_json_file(const std::string& path);

// Polynomial sequences: array of arrays of rational strings, row n holding
// the n+1 coefficients of p_n.
poly_seq poly_seq_from_json(const nlohmann::json& j);
nlohmann::json poly_seq_to_json(const poly_seq& p);

// Recurrences: {"taps": ["1","-1","-1"]} or {"matrix": [["1"], ["-1","1"], ...]},
// optionally {"rhs": ["1","0", ...]}.
recurrence recurrence_from_json(const nlohmann::json& j);

// Posets: {"n": 4, "le": [[0,1],[1,2],[2,3]]}; the reflexive-transitive
// closure of the listed pairs is taken before validation.
poset poset_from_json(const nlohmann::json& j);

// Umbra environments: one {"name": "a", "moments": ["1","1","2"]} object or
// an array of them.
umbra_env umbra_env_from_json(const nlohmann::json& j);

// Series values in JSON reports: {"flavor": ..., "order": ..., "coeffs": [...]}.
nlohmann::json series_to_json(const series& s);

// A function on the truncated non-negative integers as a dense value array.
nlohmann::json cfunction_to_json(const cfunction<n_plus>& f);

} // namespace umbral
