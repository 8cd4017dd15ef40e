#include "su2q/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace su2q {

namespace {

using nlohmann::json;

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("schema: complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw std::invalid_argument("schema: expected " + std::to_string(dim) + " matrix rows");
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
            throw std::invalid_argument("schema: matrix row length mismatch");
        for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("schema: not valid JSON: ") + e.what());
    }
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("schema: missing integer field '") + key + "'");
    return j[key].get<int>();
}

json exponent_to_json(const Exponent3& a) { return json::array({a.plus, a.minus, a.zero}); }

}  // namespace

std::string grid_to_json(const QuadratureGrid& grid) {
    json j;
    j["two_l_max"] = grid.exactness_two_l;
    json nodes = json::array();
    for (const auto& g : grid.nodes) nodes.push_back(json::array({g.x0(), g.x1(), g.x2(), g.x3()}));
    j["nodes"] = std::move(nodes);
    j["weights"] = grid.weights;
    return j.dump(2);
}

QuadratureGrid grid_from_json(const std::string& text) {
    const json j = parse(text);
    QuadratureGrid grid;
    grid.exactness_two_l = get_int(j, "two_l_max");
    if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("weights") ||
        !j["weights"].is_array())
        throw std::invalid_argument("schema: grid requires 'nodes' and 'weights' arrays");
    if (j["nodes"].size() != j["weights"].size())
        throw std::invalid_argument("schema: grid nodes/weights length mismatch");
    for (const auto& n : j["nodes"]) {
        if (!n.is_array() || n.size() != 4)
            throw std::invalid_argument("schema: grid node must be [x0,x1,x2,x3]");
        grid.nodes.push_back(GroupElement::from_quaternion(
            n[0].get<double>(), n[1].get<double>(), n[2].get<double>(), n[3].get<double>()));
    }
    for (const auto& w : j["weights"]) grid.weights.push_back(w.get<double>());
    return grid;
}

std::string function_to_json(const BandLimitedFunction& f) {
    json j;
    j["two_L"] = f.two_L;
    json coeffs = json::object();
    for (int two_l = 0; two_l <= f.two_L; ++two_l)
        coeffs[std::to_string(two_l)] = matrix_to_json(f.at(two_l));
    j["coeffs"] = std::move(coeffs);
    return j.dump(2);
}

BandLimitedFunction function_from_json(const std::string& text) {
    const json j = parse(text);
    const int two_L = get_int(j, "two_L");
    if (two_L < 0) throw std::invalid_argument("schema: two_L must be >= 0");
    if (!j.contains("coeffs") || !j["coeffs"].is_object())
        throw std::invalid_argument("schema: function requires a 'coeffs' object");
    BandLimitedFunction f = BandLimitedFunction::zero(two_L);
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        const std::string key = std::to_string(two_l);
        if (!j["coeffs"].contains(key))
            throw std::invalid_argument("schema: coeffs missing band '" + key + "'");
        f.at(two_l) = matrix_from_json(j["coeffs"][key], dim_of(two_l));
    }
    return f;
}

std::string samples_to_json(const std::vector<std::complex<double>>& values) {
    json j;
    json v = json::array();
    for (const auto& z : values) v.push_back(complex_to_json(z));
    j["values"] = std::move(v);
    return j.dump(2);
}

std::vector<std::complex<double>> samples_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("schema: samples require a 'values' array");
    std::vector<std::complex<double>> values;
    for (const auto& z : j["values"]) values.push_back(complex_from_json(z));
    return values;
}

std::string symbol_to_json(const Symbol& sigma) {
    json j;
    j["two_L"] = sigma.two_L;
    j["x_two_L"] = sigma.x_two_L;
    j["x_invariant"] = sigma.x_invariant;
    j["grid_ref"] = json::parse(grid_to_json(*sigma.grid));
    json data = json::object();
    for (int two_l = 0; two_l <= sigma.two_L; ++two_l) {
        json per_node = json::array();
        for (std::size_t node = 0; node < sigma.nodes(); ++node)
            per_node.push_back(matrix_to_json(sigma.at(two_l, node)));
        data[std::to_string(two_l)] = std::move(per_node);
    }
    j["data"] = std::move(data);
    return j.dump(2);
}

Symbol symbol_from_json(const std::string& text) {
    const json j = parse(text);
    const int two_L = get_int(j, "two_L");
    const int x_two_L = get_int(j, "x_two_L");
    if (!j.contains("grid_ref"))
        throw std::invalid_argument("schema: symbol requires 'grid_ref'");
    auto grid = std::make_shared<QuadratureGrid>(grid_from_json(j["grid_ref"].dump()));
    Symbol sigma = Symbol::zero(two_L, x_two_L, grid);
    sigma.x_invariant = j.value("x_invariant", false);
    if (!j.contains("data") || !j["data"].is_object())
        throw std::invalid_argument("schema: symbol requires a 'data' object");
    for (int two_l = 0; two_l <= two_L; ++two_l) {
        const std::string key = std::to_string(two_l);
        if (!j["data"].contains(key))
            throw std::invalid_argument("schema: symbol data missing band '" + key + "'");
        const json& per_node = j["data"][key];
        if (!per_node.is_array() || per_node.size() != grid->size())
            throw std::invalid_argument("schema: symbol band '" + key +
                                        "' node count does not match grid");
        for (std::size_t node = 0; node < grid->size(); ++node)
            sigma.at(two_l, node) = matrix_from_json(per_node[node], dim_of(two_l));
    }
    return sigma;
}

std::string decay_report_to_json(const DecayReport& report) {
    json j;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["alpha"] = exponent_to_json(c.alpha);
        jc["beta"] = exponent_to_json(c.beta);
        jc["N"] = c.N;
        jc["C"] = c.C;
        jc["witness"] = {{"node", c.witness.node},
                         {"two_l", c.witness.two_l},
                         {"i", c.witness.i},
                         {"j", c.witness.j}};
        jc["pass"] = c.pass;
        checks.push_back(jc);
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"order_m", report.order_m},
                    {"tolerance", report.tolerance},
                    {"max_C", report.max_c},
                    {"all_pass", report.all_pass},
                    {"interpretation", report.interpretation}};
    return j.dump(2);
}

std::string l2_report_to_json(const L2Report& report) {
    json j;
    j["certificate"] = report.certificate;
    j["per_band"] = report.per_band;
    j["empirical_norm"] = report.empirical_norm;
    j["certifiable"] = report.certifiable;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace su2q
