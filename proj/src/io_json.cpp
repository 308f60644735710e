#include "hurwitz/io_json.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::vector<Rat> rats_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw input_error(std::string(what) + " must be a JSON array");
    std::vector<Rat> out;
    for (const auto& v : arr) {
        if (v.is_number_integer())
            out.emplace_back(static_cast<long>(v.get<long long>()));
        else if (v.is_string())
            out.push_back(rat_from_string(v.get<std::string>()));
        else
            throw input_error(std::string(what) + " entries must be integers or \"p/q\" strings");
    }
    return out;
}

Json rats_to_json(const std::vector<Rat>& v) {
    Json arr = Json::array();
    for (const Rat& r : v) arr.push_back(rat_to_string(r));
    return arr;
}

}  // namespace

WeightFunction weight_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("weight spec must be an object with a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "exp") return WeightFunction::exp_weight();
    if (kind == "product-G")
        return WeightFunction::product_g_weight(rats_from_json(j.at("c"), "weight c"));
    if (kind == "product-Gtilde")
        return WeightFunction::product_gtilde_weight(rats_from_json(j.at("c"), "weight c"));
    if (kind == "completed-cycles")
        return WeightFunction::completed_cycles_weight(j.at("r").get<int>());
    if (kind == "log-series")
        return WeightFunction::log_series_weight(rats_from_json(j.at("A"), "weight A"));
    throw input_error("unknown weight kind '" + kind + "'");
}

Json weight_to_json(const WeightFunction& w) {
    Json j;
    switch (w.kind) {
        case WeightKind::exp:
            j["kind"] = "exp";
            break;
        case WeightKind::product_g:
            j["kind"] = "product-G";
            j["c"] = rats_to_json(w.c);
            break;
        case WeightKind::product_gtilde:
            j["kind"] = "product-Gtilde";
            j["c"] = rats_to_json(w.c);
            break;
        case WeightKind::completed_cycles:
            j["kind"] = "completed-cycles";
            j["r"] = w.cycles_r;
            break;
        case WeightKind::log_series:
            j["kind"] = "log-series";
            j["A"] = rats_to_json(w.a_data);
            break;
    }
    return j;
}

Json series_to_json(const Series& s) {
    Json j;
    j["var"] = var_name(s.var());
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rat_to_string(s[k]));
    j["coeffs"] = coeffs;
    return j;
}

Series series_from_json(const Json& j, Var default_var) {
    const Json& arr = j.is_array() ? j : j.at("coeffs");
    auto coeffs = rats_from_json(arr, "series coeffs");
    if (coeffs.empty()) throw input_error("series needs at least one coefficient");
    Var var = default_var;
    if (j.is_object() && j.contains("var")) {
        std::string v = j.at("var").get<std::string>();
        if (v == "beta") var = Var::beta;
        else if (v == "z") var = Var::z;
        else if (v == "w") var = Var::w;
        else if (v == "q") var = Var::q;
        else if (v == "u") var = Var::u;
        else throw input_error("unknown series variable '" + v + "'");
    }
    return Series(var, std::move(coeffs));
}

Json qexpansion_to_json(const Series& s) {
    Json j;
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rat_to_string(s[k]));
    j["coeffs"] = coeffs;
    j["dMax"] = s.order();
    return j;
}

Json cover_to_json(const TropicalCover& c, const CoverReport& rep) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : c.vertices) {
        Json jv;
        jv["g"] = v.genus;
        jv["leftEnds"] = v.left_ends;
        jv["rightEnds"] = v.right_ends;
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& e : c.edges)
        edges.push_back(Json::array({e.source + 1, e.target + 1, e.weight}));
    j["edges"] = std::move(edges);
    if (!c.through_edges.empty()) j["through"] = c.through_edges;
    j["lambda"] = rep.lambda;
    j["aut"] = rep.aut_order.get_str();
    j["multiplicity"] = rat_to_string(rep.contribution);
    return j;
}

Json diagram_to_json(const FeynmanDiagram& d) {
    Json j;
    j["vertices"] = d.n;
    Json edges = Json::array();
    for (auto [a, b] : d.edges) edges.push_back(Json::array({a + 1, b + 1}));
    j["edges"] = std::move(edges);
    j["genus"] = d.genus;
    j["lambda"] = d.lambda();
    j["key"] = d.canonical_key();
    return j;
}

Json fit_to_json(const QuasimodFit& fit, int weight_cap) {
    Json j;
    j["weightCap"] = weight_cap;
    if (fit.success) {
        Json coords;
        for (const auto& [name, c] : fit.coords) coords[name] = rat_to_string(c);
        j["coords"] = std::move(coords);
        j["validated"] = fit.validated;
    } else {
        j["error"] = fit.message;
        if (fit.residual_index >= 0) j["residualIndex"] = fit.residual_index;
        j["underdetermined"] = fit.underdetermined;
    }
    return j;
}

Json polynomial_to_json(const LatticePolynomial& p) {
    Json coeffs = Json::object();
    for (const auto& [e, c] : p.coeffs) {
        std::string key;
        for (size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
        coeffs[key] = rat_to_string(c);
    }
    Json j;
    j["exponents"] = "x1..x" + std::to_string(p.n - 1);
    j["coefficients"] = std::move(coeffs);
    j["totalDegree"] = p.total_degree();
    return j;
}

namespace {

Json point_to_json(const BalancedPoint& x) {
    Json arr = Json::array();
    for (long v : x) arr.push_back(v);
    return arr;
}

}  // namespace

Json interpolation_to_json(const InterpolationReport& rep) {
    Json j;
    j["polynomial"] = polynomial_to_json(rep.poly);
    j["degreeBound"] = rep.degree_bound;
    Json fitp = Json::array();
    for (const auto& x : rep.fit_points) fitp.push_back(point_to_json(x));
    j["fitPoints"] = std::move(fitp);
    Json valp = Json::array();
    for (const auto& x : rep.validation_points) valp.push_back(point_to_json(x));
    j["validationPoints"] = std::move(valp);
    return j;
}

Json wallcross_to_json(const WallCrossingReport& rep) {
    Json j;
    Json wall = Json::array();
    for (int i : rep.wall) wall.push_back(i + 1);
    j["wall"] = std::move(wall);
    j["chamberNegative"] = interpolation_to_json(rep.side_negative);
    j["chamberPositive"] = interpolation_to_json(rep.side_positive);
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json r;
        r["x"] = point_to_json(row.x);
        r["lhs"] = rat_to_string(row.lhs);
        r["rhs"] = rat_to_string(row.rhs);
        r["equal"] = row.equal;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["allEqual"] = rep.all_equal;
    return j;
}

Partition partition_from_list(const std::string& comma_list) {
    std::vector<int> parts;
    std::stringstream ss(comma_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("malformed partition entry '" + tok + "'");
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

std::string csv_from_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + field(header[i]);
    out += "\r\n";
    for (const auto& row : rows) {
        if (!header.empty() && row.size() != header.size())
            throw input_error("csv rows must match the header width");
        for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + field(row[i]);
        out += "\r\n";
    }
    return out;
}

}  // namespace hurwitz
