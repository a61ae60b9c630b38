#include "modrange/instance_io.hpp"

#include <cmath>
#include <fstream>

namespace modrange {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

Complex complex_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(path + ": expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

ModuleShape InstanceDocument::shape() const {
    CharacterSpace space(dims.size(), characters);
    return {std::move(space), dims};
}

InstanceDocument parse_instance(const json& j) {
    InstanceDocument doc;

    const json& dims = require_field(j, "dims", "$");
    if (!dims.is_array() || dims.empty())
        throw ParseError("dims: expected a non-empty array of fiber dimensions");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!dims[i].is_number_integer() || dims[i].get<int>() < 1)
            throw ParseError("dims[" + std::to_string(i) + "]: expected a positive integer");
        doc.dims.push_back(dims[i].get<int>());
    }

    // Labels are optional; positional defaults keep reports readable.
    if (auto it = j.find("characters"); it != j.end()) {
        const json& characters = *it;
        if (!characters.is_array() || characters.size() != doc.dims.size())
            throw ParseError("characters: expected an array matching dims length");
        for (std::size_t i = 0; i < characters.size(); ++i) {
            if (!characters[i].is_string())
                throw ParseError("characters[" + std::to_string(i) + "]: expected a string");
            doc.characters.push_back(characters[i].get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < doc.dims.size(); ++i)
            doc.characters.push_back("chi_" + std::to_string(i));
    }

    const ModuleShape shape = doc.shape();

    if (auto it = j.find("operators"); it != j.end()) {
        if (!it->is_object()) throw ParseError("operators: expected an object of named block lists");
        for (auto& [name, blocks_json] : it->items()) {
            const std::string base = "operators." + name;
            if (!blocks_json.is_array() || blocks_json.size() != doc.dims.size())
                throw ParseError(base + ": expected one block per character");
            std::vector<Eigen::MatrixXcd> blocks;
            for (std::size_t k = 0; k < blocks_json.size(); ++k) {
                const std::string bpath = base + "[" + std::to_string(k) + "]";
                const json& rows = blocks_json[k];
                const int d = doc.dims[k];
                if (!rows.is_array() || int(rows.size()) != d)
                    throw ParseError(bpath + ": expected a " + std::to_string(d) + "x" +
                                     std::to_string(d) + " matrix");
                Eigen::MatrixXcd B(d, d);
                for (int r = 0; r < d; ++r) {
                    const json& row = rows[r];
                    if (!row.is_array() || int(row.size()) != d)
                        throw ParseError(bpath + "[" + std::to_string(r) + "]: expected " +
                                         std::to_string(d) + " entries");
                    for (int c = 0; c < d; ++c)
                        B(r, c) = complex_from_json(row[c], bpath + "[" + std::to_string(r) + "][" +
                                                                std::to_string(c) + "]");
                }
                blocks.push_back(std::move(B));
            }
            doc.operators.emplace(name, ModuleOperator{shape, std::move(blocks)});
        }
    }

    if (auto it = j.find("cx"); it != j.end()) {
        const json& cx = *it;
        CxSection section;
        const json& kind = require_field(cx, "kind", "cx");
        if (!kind.is_string()) throw ParseError("cx.kind: expected a string");
        const std::string kind_str = kind.get<std::string>();
        if (kind_str == "interval") section.kind = SpaceKind::Interval;
        else if (kind_str == "circle") section.kind = SpaceKind::Circle;
        else if (kind_str == "custom") section.kind = SpaceKind::Custom;
        else throw ParseError("cx.kind: expected interval, circle, or custom");

        if (section.kind == SpaceKind::Custom) {
            const json& points = require_field(cx, "points", "cx");
            if (!points.is_array() || points.empty())
                throw ParseError("cx.points: expected a non-empty array of numbers");
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (!points[i].is_number())
                    throw ParseError("cx.points[" + std::to_string(i) + "]: expected a number");
                section.points.push_back(points[i].get<double>());
            }
        } else {
            const json& m = require_field(cx, "m", "cx");
            if (!m.is_number_integer() || m.get<int>() < 1)
                throw ParseError("cx.m: expected a positive integer");
            section.m = m.get<int>();
        }

        const json& symbol = require_field(cx, "symbol", "cx");
        if (symbol.is_string()) {
            const std::string name = symbol.get<std::string>();
            if (name == "identity") section.symbol.kind = SymbolSpec::Kind::Identity;
            else if (name == "exp-i-theta") section.symbol.kind = SymbolSpec::Kind::ExpITheta;
            else throw ParseError("cx.symbol: unknown builtin '" + name + "'");
        } else if (symbol.is_object() && symbol.contains("poly")) {
            section.symbol.kind = SymbolSpec::Kind::Polynomial;
            const json& coeffs = symbol["poly"];
            if (!coeffs.is_array() || coeffs.empty())
                throw ParseError("cx.symbol.poly: expected a non-empty coefficient array");
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                section.symbol.coeffs.push_back(
                    complex_from_json(coeffs[i], "cx.symbol.poly[" + std::to_string(i) + "]"));
        } else if (symbol.is_object() && symbol.contains("table")) {
            section.symbol.kind = SymbolSpec::Kind::Table;
            const json& table = symbol["table"];
            if (!table.is_array() || table.empty())
                throw ParseError("cx.symbol.table: expected a non-empty value array");
            for (std::size_t i = 0; i < table.size(); ++i)
                section.symbol.coeffs.push_back(
                    complex_from_json(table[i], "cx.symbol.table[" + std::to_string(i) + "]"));
        } else {
            throw ParseError("cx.symbol: expected a builtin name, {\"poly\": ...} or {\"table\": ...}");
        }
        doc.cx = std::move(section);
    }

    return doc;
}

InstanceDocument load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(j);
}

json serialize_instance(const InstanceDocument& doc) {
    json j;
    j["characters"] = doc.characters;
    j["dims"] = doc.dims;
    json ops = json::object();
    for (const auto& [name, op] : doc.operators) {
        json blocks = json::array();
        for (const auto& B : op.blocks) {
            json rows = json::array();
            for (Eigen::Index r = 0; r < B.rows(); ++r) {
                json row = json::array();
                for (Eigen::Index c = 0; c < B.cols(); ++c) row.push_back(complex_to_json(B(r, c)));
                rows.push_back(std::move(row));
            }
            blocks.push_back(std::move(rows));
        }
        ops[name] = std::move(blocks);
    }
    j["operators"] = std::move(ops);
    if (doc.cx) {
        json cx;
        switch (doc.cx->kind) {
            case SpaceKind::Interval: cx["kind"] = "interval"; break;
            case SpaceKind::Circle: cx["kind"] = "circle"; break;
            case SpaceKind::Custom: cx["kind"] = "custom"; break;
        }
        if (doc.cx->kind == SpaceKind::Custom) cx["points"] = doc.cx->points;
        else cx["m"] = doc.cx->m;
        switch (doc.cx->symbol.kind) {
            case SymbolSpec::Kind::Identity: cx["symbol"] = "identity"; break;
            case SymbolSpec::Kind::ExpITheta: cx["symbol"] = "exp-i-theta"; break;
            case SymbolSpec::Kind::Polynomial: {
                json coeffs = json::array();
                for (const auto& c : doc.cx->symbol.coeffs) coeffs.push_back(complex_to_json(c));
                cx["symbol"] = json{{"poly", std::move(coeffs)}};
                break;
            }
            case SymbolSpec::Kind::Table: {
                json values = json::array();
                for (const auto& v : doc.cx->symbol.coeffs) values.push_back(complex_to_json(v));
                cx["symbol"] = json{{"table", std::move(values)}};
                break;
            }
        }
        j["cx"] = std::move(cx);
    }
    return j;
}

DiscretizedSpace build_space(const CxSection& cx) {
    switch (cx.kind) {
        case SpaceKind::Interval: return make_interval(cx.m);
        case SpaceKind::Circle: return make_circle(cx.m);
        case SpaceKind::Custom: return make_custom(cx.points);
    }
    throw ParseError("cx.kind: invalid value");
}

MultiplicationOperator build_symbol_operator(const CxSection& cx) {
    const DiscretizedSpace space = build_space(cx);
    switch (cx.symbol.kind) {
        case SymbolSpec::Kind::Identity:
            return build_multiplication(space, [](double x) { return Complex{x, 0.0}; });
        case SymbolSpec::Kind::ExpITheta:
            return build_multiplication(space, [](double x) { return std::polar(1.0, x); });
        case SymbolSpec::Kind::Polynomial: {
            const std::vector<Complex> coeffs = cx.symbol.coeffs;
            return build_multiplication(space, [coeffs](double x) {
                Complex acc{0.0, 0.0};
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
                return acc;
            });
        }
        case SymbolSpec::Kind::Table: {
            if (cx.symbol.coeffs.size() != space.points.size())
                throw ParseError("cx.symbol.table: expected one value per sample point");
            return build_multiplication(space, cx.symbol.coeffs);
        }
    }
    throw ParseError("cx.symbol: invalid value");
}

json vector_to_json(const ModuleVector& x) {
    json fibers = json::array();
    for (const auto& f : x.fibers) {
        json fiber = json::array();
        for (Eigen::Index k = 0; k < f.size(); ++k) fiber.push_back(complex_to_json(f[k]));
        fibers.push_back(std::move(fiber));
    }
    return fibers;
}

json witness_to_json(const SupWitness& w) {
    json j;
    j["value"] = w.value;
    j["character"] = w.character;
    j["vector"] = vector_to_json(w.vector);
    if (w.pair) j["pair"] = vector_to_json(*w.pair);
    if (w.theta) j["theta"] = *w.theta;
    return j;
}

json check_result_to_json(const CheckResult& r) {
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    if (!r.metrics.empty()) j["metrics"] = r.metrics;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.witness) j["witness"] = witness_to_json(*r.witness);
    return j;
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["tool"] = kToolVersion;
    j["seed"] = report.seed;
    j["checks_run"] = report.checks_run;
    j["failures"] = report.failures;
    j["overall"] = report.overall;
    json instances = json::array();
    for (const auto& inst : report.instances) {
        json ji;
        ji["index"] = inst.index;
        ji["class"] = operator_class_name(inst.cls);
        ji["dims"] = inst.shape.dims;
        ji["seed"] = inst.seed;
        ji["operator_hash"] = inst.operator_hash;
        ji["passed"] = inst.passed;
        json results = json::array();
        for (const auto& r : inst.results) results.push_back(check_result_to_json(r));
        ji["results"] = std::move(results);
        instances.push_back(std::move(ji));
    }
    j["instances"] = std::move(instances);
    return j;
}

}  // namespace modrange
