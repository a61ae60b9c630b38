/*
 * instance_io.hpp — JSON schema for problem instances and reports.
 *
 * Instance document:
 *   {
 *     "characters": ["a", "b"],
 *     "dims": [2, 1],
 *     "operators": { "T": [ [[[0,0],[1,0]], [[0,0],[0,0]]], [[[2,0]]] ] },
 *     "cx": { "kind": "interval", "m": 101, "symbol": "identity" }   // optional
 *   }
 * Blocks are row-major complex matrices; every complex number serializes as a
 * two-element array [re, im]. The cx symbol is either a builtin name
 * ("identity", "exp-i-theta"), {"poly": [[c0re,c0im], ...]}, or
 * {"table": [[re,im], ...]} with one value per sample point.
 */
#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "modrange/cx_model.hpp"

namespace modrange {

inline constexpr const char* kToolVersion = "modrange 0.1.0";

/// Malformed input; carries a field-path diagnostic (e.g. "dims[2]").
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SymbolSpec {
    enum class Kind { Identity, ExpITheta, Polynomial, Table };
    Kind kind = Kind::Identity;
    std::vector<Complex> coeffs;  // polynomial coefficients or table values
};

struct CxSection {
    SpaceKind kind = SpaceKind::Interval;
    int m = 0;                    // used for interval/circle
    std::vector<double> points;   // used for custom
    SymbolSpec symbol;
};

struct InstanceDocument {
    std::vector<std::string> characters;
    std::vector<int> dims;
    std::map<std::string, ModuleOperator> operators;
    std::optional<CxSection> cx;

    ModuleShape shape() const;
};

InstanceDocument parse_instance(const nlohmann::json& j);
InstanceDocument load_instance(const std::string& path);
nlohmann::json serialize_instance(const InstanceDocument& doc);

DiscretizedSpace build_space(const CxSection& cx);
MultiplicationOperator build_symbol_operator(const CxSection& cx);

// JSON building blocks shared by report writers.
nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json vector_to_json(const ModuleVector& x);
nlohmann::json witness_to_json(const SupWitness& w);
nlohmann::json check_result_to_json(const CheckResult& r);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace modrange
