#include "wignerlab/states_json.hpp"

#include <stdexcept>

namespace wignerlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw std::invalid_argument(path + ": " + why);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) bad_field(path, "expected a number");
    return j.get<double>();
}

std::vector<std::vector<double>> require_rows(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) bad_field(path, "expected a nonempty array of rows");
    std::vector<std::vector<double>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array()) bad_field(path + "[" + std::to_string(r) + "]", "expected an array");
        std::vector<double> out;
        for (std::size_t c = 0; c < row.size(); ++c)
            out.push_back(require_number(row[c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        rows.push_back(std::move(out));
    }
    return rows;
}

std::vector<double> require_vector(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) bad_field(path, "expected a nonempty array");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

StateSpec parse_named(const json& j, const std::string& path) {
    if (!j.is_object()) bad_field(path, "expected an object");
    if (!j.contains("name") || !j["name"].is_string()) bad_field(path + ".name", "expected a string");
    StateSpec::Named named;
    named.name = j["name"].get<std::string>();
    for (const auto& [key, value] : j.items()) {
        if (key == "name") continue;
        if (key == "kind") {
            if (!value.is_string()) bad_field(path + ".kind", "expected a string");
            named.kind = value.get<std::string>();
        } else {
            named.params[key] = require_number(value, path + "." + key);
        }
    }
    return StateSpec{std::move(named)};
}

StateSpec parse_matrix(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("re")) bad_field(path + ".re", "expected real-part rows");
    const auto re = require_rows(j["re"], path + ".re");
    const int dim = static_cast<int>(re.size());
    std::vector<std::vector<double>> im(dim, std::vector<double>(dim, 0.0));
    if (j.contains("im")) im = require_rows(j["im"], path + ".im");
    if (static_cast<int>(im.size()) != dim) bad_field(path + ".im", "row count differs from re");
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(re[r].size()) != dim || static_cast<int>(im[r].size()) != dim)
            bad_field(path, "matrix rows must be square");
        for (int c = 0; c < dim; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
    }
    return StateSpec{StateSpec::Matrix{std::move(m)}};
}

StateSpec parse_pure(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("re")) bad_field(path + ".re", "expected real amplitudes");
    const auto re = require_vector(j["re"], path + ".re");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = require_vector(j["im"], path + ".im");
    if (im.size() != re.size()) bad_field(path + ".im", "length differs from re");
    StateSpec::Pure pure;
    for (std::size_t i = 0; i < re.size(); ++i) pure.amplitudes.emplace_back(re[i], im[i]);
    return StateSpec{std::move(pure)};
}

}  // namespace

StateSpec parse_state_spec(const json& j, const std::string& path) {
    if (!j.is_object() || j.size() != 1)
        bad_field(path, "expected an object with exactly one of: named, matrix, pure, mixture, product");
    const std::string key = j.begin().key();
    const json& body = j.begin().value();
    if (key == "named") return parse_named(body, path + ".named");
    if (key == "matrix") return parse_matrix(body, path + ".matrix");
    if (key == "pure") return parse_pure(body, path + ".pure");
    if (key == "mixture") {
        if (!body.is_array() || body.empty()) bad_field(path + ".mixture", "expected a nonempty array");
        StateSpec::Mixture mix;
        for (std::size_t i = 0; i < body.size(); ++i) {
            const std::string p = path + ".mixture[" + std::to_string(i) + "]";
            const json& entry = body[i];
            if (!entry.is_object() || !entry.contains("weight") || !entry.contains("state"))
                bad_field(p, "expected {\"weight\": w, \"state\": {...}}");
            mix.weights.push_back(require_number(entry["weight"], p + ".weight"));
            mix.components.push_back(parse_state_spec(entry["state"], p + ".state"));
        }
        return StateSpec{std::move(mix)};
    }
    if (key == "product") {
        if (!body.is_array() || body.size() != 2)
            bad_field(path + ".product", "expected an array of exactly two factors");
        StateSpec::Product prod;
        prod.factors.push_back(parse_state_spec(body[0], path + ".product[0]"));
        prod.factors.push_back(parse_state_spec(body[1], path + ".product[1]"));
        return StateSpec{std::move(prod)};
    }
    bad_field(path, "unknown state kind \"" + key + "\"");
}

StateSpec parse_state_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("state: JSON parse error: ") + e.what());
    }
    return parse_state_spec(j);
}

json state_spec_to_json(const StateSpec& spec) {
    struct Visitor {
        json operator()(const StateSpec::Named& n) const {
            json body{{"name", n.name}};
            if (!n.kind.empty()) body["kind"] = n.kind;
            for (const auto& [k, v] : n.params) body[k] = v;
            return json{{"named", body}};
        }
        json operator()(const StateSpec::Matrix& m) const {
            const int dim = m.value.dim();
            json re = json::array(), im = json::array();
            for (int r = 0; r < dim; ++r) {
                json re_row = json::array(), im_row = json::array();
                for (int c = 0; c < dim; ++c) {
                    re_row.push_back(m.value(r, c).real());
                    im_row.push_back(m.value(r, c).imag());
                }
                re.push_back(re_row);
                im.push_back(im_row);
            }
            return json{{"matrix", {{"re", re}, {"im", im}}}};
        }
        json operator()(const StateSpec::Pure& p) const {
            json re = json::array(), im = json::array();
            for (const Complex& a : p.amplitudes) {
                re.push_back(a.real());
                im.push_back(a.imag());
            }
            return json{{"pure", {{"re", re}, {"im", im}}}};
        }
        json operator()(const StateSpec::Mixture& m) const {
            json arr = json::array();
            for (std::size_t i = 0; i < m.weights.size(); ++i)
                arr.push_back(json{{"weight", m.weights[i]}, {"state", state_spec_to_json(m.components[i])}});
            return json{{"mixture", arr}};
        }
        json operator()(const StateSpec::Product& p) const {
            json arr = json::array();
            for (const StateSpec& f : p.factors) arr.push_back(state_spec_to_json(f));
            return json{{"product", arr}};
        }
    };
    return std::visit(Visitor{}, spec.value);
}

json density_to_spec_json(const DensityMatrix& rho) {
    return state_spec_to_json(StateSpec{StateSpec::Matrix{rho.matrix()}});
}

}  // namespace wignerlab
