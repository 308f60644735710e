// Command-line front end: every pipeline of the library behind one batch
// binary with reproducible JSON/CSV output. Exit codes: 0 success, 2 bad
// input, 3 internal invariant failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/feynman.hpp"
#include "hurwitz/io_json.hpp"
#include "hurwitz/oracles.hpp"
#include "hurwitz/polynomiality.hpp"
#include "hurwitz/quasimod.hpp"
#include "hurwitz/tropical.hpp"

namespace {

using namespace hurwitz;

WeightFunction parse_weight(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw input_error("cannot open weight file " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("weight spec is not valid JSON: " + text);
    return weight_from_json(j);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot open output file " + out_path);
    out << text;
}

void emit_json(const Json& j, const std::string& out_path) {
    write_output(j.dump(2), out_path);
}

BalancedPoint parse_point(const std::string& comma_list) {
    BalancedPoint x;
    std::stringstream ss(comma_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            x.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw input_error("malformed point entry '" + tok + "'");
        }
    }
    return x;
}

std::vector<int> parse_wall(const std::string& comma_list) {
    std::vector<int> idx;
    std::stringstream ss(comma_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        idx.push_back(std::stoi(tok) - 1);  // 1-based on the command line
    }
    return idx;
}

Json inputs_json(const WeightFunction& w, const Partition& mu, const Partition& nu, int r) {
    Json j;
    j["weight"] = weight_to_json(w);
    j["mu"] = mu.parts();
    j["nu"] = nu.parts();
    j["r"] = r;
    return j;
}

// ---------------------------------------------------------------- selftest

struct Check {
    std::string name;
    bool ok = false;
};

void parallel_run(std::vector<std::function<Check()>>& jobs, int threads,
                  std::vector<Check>& out) {
    out.resize(jobs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                out[i] = jobs[i]();
            }
        });
    for (auto& th : pool) th.join();
}

int run_selftest(const std::string& level, int threads) {
    int dmax_double = level == "full" ? 4 : 3;
    int rmax = level == "full" ? 4 : 3;
    int dmax_elliptic = level == "full" ? 3 : 2;
    int series_dmax = level == "full" ? 8 : 4;

    std::vector<std::pair<std::string, WeightFunction>> weights = {
        {"exp", WeightFunction::exp_weight()},
        {"mono", WeightFunction::product_gtilde_weight({Rat(1)})},
        {"strict", WeightFunction::product_g_weight({Rat(1)})},
    };

    std::vector<std::function<Check()>> jobs;
    for (int d = 1; d <= dmax_double; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (const auto& nu : partitions_of(d)) {
                for (int r = 0; r <= rmax; ++r) {
                    if ((r - mu.length() - nu.length()) % 2 != 0) continue;
                    for (const auto& wpair : weights) {
                        jobs.push_back([wpair, mu, nu, r]() {
                            const auto& [wname, w] = wpair;
                            std::string name = "double " + wname + " mu=" +
                                               partition_to_string(mu) + " nu=" +
                                               partition_to_string(nu) + " r=" + std::to_string(r);
                            Rat c = char_double_disconnected(w, mu, nu, r);
                            Rat g = brute_force_double_weighted(w, mu, nu, r);
                            Rat t = tropical_double(w, mu, nu, r, false);
                            Rat cc = connected_double(w, mu, nu, r);
                            Rat tc = tropical_double(w, mu, nu, r, true);
                            bool ok = (c == g) && (c == t) && (cc == tc);
                            if (wname == "exp") {
                                auto brute = brute_force_double_classical(mu, nu, r);
                                ok = ok && c == brute.disconnected && cc == brute.connected;
                            }
                            return Check{name, ok};
                        });
                    }
                }
            }
        }
    }
    for (int d = 1; d <= dmax_elliptic; ++d) {
        for (int r = 0; r <= rmax; r += 2) {
            int g = (r + 2) / 2;
            for (const auto& wpair : weights) {
                jobs.push_back([wpair, d, r, g]() {
                    const auto& [wname, w] = wpair;
                    std::string name = "elliptic " + wname + " d=" + std::to_string(d) +
                                       " r=" + std::to_string(r);
                    auto br = brute_force_elliptic(w, {}, d, r);
                    Rat ss = elliptic_shiftsym_disconnected(w, {}, g, d);
                    Rat conn = elliptic_connected(w, {}, g, d);
                    return Check{name, br.disconnected == ss && br.connected == conn};
                });
            }
        }
    }
    for (const auto& wpair : weights) {
        jobs.push_back([wpair, series_dmax]() {
            const auto& [wname, w] = wpair;
            auto pipe = elliptic_qseries_pipeline(w, 2, {}, series_dmax);
            Series f = feynman_qseries(w, 2, series_dmax);
            return Check{"feynman-vs-pipeline " + wname, f == pipe.connected};
        });
    }
    jobs.push_back([]() {
        bool ok = true;
        for (int d = 1; d <= 2; ++d)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d))
                    for (int s = 0; s <= 2; ++s) {
                        if ((s - mu.length() - nu.length()) % 2 != 0) continue;
                        ok = ok && completed_cycles_double(1, mu, nu, s) ==
                                       tropical_double(WeightFunction::exp_weight(), mu, nu, s,
                                                       false);
                    }
        return Check{"completed-cycles rcc=1 vs exp", ok};
    });

    std::vector<Check> results;
    parallel_run(jobs, threads, results);
    int failed = 0;
    for (const Check& c : results) {
        if (!c.ok) ++failed;
        std::cout << (c.ok ? "pass " : "FAIL ") << c.name << "\n";
    }
    std::cout << (failed ? "selftest FAILED: " : "selftest passed: ") << results.size() - failed
              << "/" << results.size() << " checks\n";
    return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weighted Hurwitz number engine"};
    app.require_subcommand(1);

    std::string weight_spec = "{\"kind\":\"exp\"}";
    std::string mu_str, nu_str, lambda_str, out_path, format = "json";
    std::string x0_str, wall_str, series_in, level = "quick";
    int r = 0, g = 2, dmax = 5, s_count = 0, rcc = 1, wmax = 6, holdout = 5, radius = 6;
    int threads = 1, test_points = 3;
    bool connected = false, per_diagram = false, ordered_lambda = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
        cmd->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--threads", threads, "worker threads for independent evaluations");
    };

    auto* cmd_double = app.add_subcommand("double", "weighted double Hurwitz number");
    cmd_double->add_option("--weight", weight_spec, "weight JSON or @file");
    cmd_double->add_option("--mu", mu_str, "profile over 0, e.g. 2,1")->required();
    cmd_double->add_option("--nu", nu_str, "profile over infinity")->required();
    cmd_double->add_option("--r", r, "number of simple branch points")->required();
    cmd_double->add_flag("--connected", connected, "connected count");
    std::string route = "character";
    cmd_double->add_option("--route", route, "character | brute | signature | tropical")
        ->check(CLI::IsMember({"character", "brute", "signature", "tropical"}));
    add_common(cmd_double);

    auto* cmd_refined = app.add_subcommand("double-refined", "type-restricted tropical number");
    cmd_refined->add_option("--weight", weight_spec, "weight JSON or @file");
    cmd_refined->add_option("--mu", mu_str)->required();
    cmd_refined->add_option("--nu", nu_str)->required();
    cmd_refined->add_option("--lambda", lambda_str, "vertex type partition, e.g. 2,1")->required();
    cmd_refined->add_flag("--ordered", ordered_lambda, "treat lambda as an ordered composition");
    cmd_refined->add_flag("--connected", connected);
    add_common(cmd_refined);

    auto* cmd_covers = app.add_subcommand("covers", "dump the admissible tropical covers");
    cmd_covers->add_option("--weight", weight_spec);
    cmd_covers->add_option("--mu", mu_str)->required();
    cmd_covers->add_option("--nu", nu_str)->required();
    cmd_covers->add_option("--r", r)->required();
    cmd_covers->add_flag("--connected", connected);
    add_common(cmd_covers);

    auto* cmd_cc = app.add_subcommand("completed-cycles",
                                      "completed-cycles double Hurwitz number");
    cmd_cc->add_option("--rcc", rcc, "cycle length (local type)")->required();
    cmd_cc->add_option("--mu", mu_str)->required();
    cmd_cc->add_option("--nu", nu_str)->required();
    cmd_cc->add_option("--s", s_count, "number of operator insertions")->required();
    cmd_cc->add_flag("--connected", connected);
    add_common(cmd_cc);

    auto* cmd_ell = app.add_subcommand("elliptic", "weighted elliptic q-expansions");
    cmd_ell->add_option("--weight", weight_spec);
    cmd_ell->add_option("--g", g, "target genus (>= 2)")->required();
    cmd_ell->add_option("--dmax", dmax)->required();
    std::vector<std::string> profile_strs;
    cmd_ell->add_option("--profile", profile_strs, "extra ramification profile (repeatable)");
    add_common(cmd_ell);

    auto* cmd_fey = app.add_subcommand("feynman", "elliptic q-expansion via Feynman diagrams");
    cmd_fey->add_option("--weight", weight_spec);
    cmd_fey->add_option("--g", g)->required();
    cmd_fey->add_option("--dmax", dmax)->required();
    cmd_fey->add_flag("--per-diagram", per_diagram, "report each decorated diagram separately");
    add_common(cmd_fey);

    auto* cmd_edump = app.add_subcommand("covers-elliptic", "dump elliptic tropical covers");
    cmd_edump->add_option("--weight", weight_spec);
    cmd_edump->add_option("--g", g)->required();
    cmd_edump->add_option("--dmax", dmax)->required();
    add_common(cmd_edump);

    auto* cmd_fit = app.add_subcommand("quasimod-fit",
                                       "fit a q-series in the quasimodular basis");
    cmd_fit->add_option("--in", series_in, "q-series JSON ({\"coeffs\":[...]}) or @file")
        ->required();
    cmd_fit->add_option("--wmax", wmax, "mixed weight cap (even)");
    cmd_fit->add_option("--holdout", holdout, "minimum validation coefficients");
    add_common(cmd_fit);

    auto* cmd_poly = app.add_subcommand("poly", "interpolate a chamber polynomial");
    cmd_poly->add_option("--weight", weight_spec);
    cmd_poly->add_option("--r", r)->required();
    cmd_poly->add_option("--x0", x0_str, "base lattice point, e.g. 4,-3,5,-6")->required();
    cmd_poly->add_option("--lambda", lambda_str, "optional refinement partition");
    cmd_poly->add_option("--holdout", holdout);
    cmd_poly->add_option("--radius", radius);
    add_common(cmd_poly);

    auto* cmd_wall = app.add_subcommand("wallcross", "verify the wall-crossing identity");
    cmd_wall->add_option("--weight", weight_spec);
    cmd_wall->add_option("--lambda", lambda_str, "type partition (r = |lambda|)")->required();
    cmd_wall->add_option("--wall", wall_str, "wall subset, 1-based, e.g. 1,2")->required();
    cmd_wall->add_option("--x0", x0_str, "base point on the positive side")->required();
    cmd_wall->add_option("--points", test_points, "number of test points");
    cmd_wall->add_option("--holdout", holdout);
    cmd_wall->add_option("--radius", radius);
    add_common(cmd_wall);

    auto* cmd_self = app.add_subcommand("selftest", "oracle-equivalence suites");
    cmd_self->add_option("--level", level, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_self->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_double->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            Partition mu = partition_from_list(mu_str), nu = partition_from_list(nu_str);
            Rat value;
            if (route == "character")
                value = connected ? connected_double(w, mu, nu, r)
                                  : char_double_disconnected(w, mu, nu, r);
            else if (route == "brute") {
                auto b = brute_force_double_classical(mu, nu, r);
                value = connected ? b.connected : b.disconnected;
            } else if (route == "signature") {
                if (connected) throw input_error("signature route computes disconnected numbers");
                value = brute_force_double_weighted(w, mu, nu, r);
            } else {
                value = tropical_double(w, mu, nu, r, connected);
            }
            Json j;
            j["value"] = rat_to_string(value);
            j["route"] = route;
            j["connected"] = connected;
            j["inputs"] = inputs_json(w, mu, nu, r);
            emit_json(j, out_path);
        } else if (cmd_refined->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            Partition mu = partition_from_list(mu_str), nu = partition_from_list(nu_str);
            Rat value;
            if (ordered_lambda) {
                Composition comp;
                std::stringstream ss(lambda_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) comp.push_back(std::stoi(tok));
                value = refined_tropical_ordered(w, mu, nu, comp, connected);
            } else {
                value = refined_tropical(w, mu, nu, partition_from_list(lambda_str), connected);
            }
            Json j;
            j["value"] = rat_to_string(value);
            j["route"] = "tropical-refined";
            j["lambda"] = lambda_str;
            j["connected"] = connected;
            emit_json(j, out_path);
        } else if (cmd_covers->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            Partition mu = partition_from_list(mu_str), nu = partition_from_list(nu_str);
            auto reports = tropical_cover_reports(w, mu, nu, r, connected);
            Json arr = Json::array();
            Rat total(0);
            for (const auto& [cover, rep] : reports) {
                arr.push_back(cover_to_json(cover, rep));
                total += rep.contribution;
            }
            Json j;
            j["covers"] = std::move(arr);
            j["count"] = reports.size();
            j["total"] = rat_to_string(total);
            emit_json(j, out_path);
        } else if (cmd_cc->parsed()) {
            Partition mu = partition_from_list(mu_str), nu = partition_from_list(nu_str);
            Rat value = completed_cycles_double(rcc, mu, nu, s_count, connected);
            Json j;
            j["value"] = rat_to_string(value);
            j["route"] = "completed-cycles";
            j["rcc"] = rcc;
            j["s"] = s_count;
            emit_json(j, out_path);
        } else if (cmd_ell->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            std::vector<Partition> profiles;
            for (const auto& p : profile_strs) profiles.push_back(partition_from_list(p));
            auto pipe = elliptic_qseries_pipeline(w, g, profiles, dmax);
            if (format == "csv") {
                std::vector<std::vector<std::string>> rows;
                for (int d = 0; d <= dmax; ++d)
                    rows.push_back({std::to_string(d),
                                    rat_to_decimal_if_exact(pipe.disconnected[d]),
                                    rat_to_decimal_if_exact(pipe.connected[d])});
                write_output(csv_from_table({"d", "disconnected", "connected"}, rows), out_path);
            } else {
                Json j;
                j["disconnected"] = qexpansion_to_json(pipe.disconnected);
                j["connected"] = qexpansion_to_json(pipe.connected);
                j["g"] = g;
                emit_json(j, out_path);
            }
        } else if (cmd_fey->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            if (per_diagram) {
                Json arr = Json::array();
                for (const auto& c : feynman_per_diagram(w, g, dmax)) {
                    Json entry;
                    entry["diagram"] = diagram_to_json(c.diagram);
                    entry["series"] = qexpansion_to_json(c.series);
                    entry["refinedWeightCap"] = c.refined_weight_cap;
                    arr.push_back(std::move(entry));
                }
                Json j;
                j["perDiagram"] = std::move(arr);
                emit_json(j, out_path);
            } else {
                Series f = feynman_qseries(w, g, dmax);
                if (format == "csv") {
                    std::vector<std::vector<std::string>> rows;
                    for (int d = 0; d <= dmax; ++d)
                        rows.push_back({std::to_string(d), rat_to_decimal_if_exact(f[d])});
                    write_output(csv_from_table({"d", "N_d"}, rows), out_path);
                } else {
                    Json j;
                    j["connected"] = qexpansion_to_json(f);
                    j["g"] = g;
                    emit_json(j, out_path);
                }
            }
        } else if (cmd_edump->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            auto a = a_coefficients(w, 2 * g - 2);
            Json arr = Json::array();
            for (const auto& diag : enumerate_ordered_diagrams(g)) {
                Rat factor = make_rat(factorial(2 * g - 2), factorial(diag.n));
                for (int lam : diag.lambda())
                    factor *= Rat(factorial(lam)) * a[static_cast<size_t>(lam)];
                factor /= Rat(diagram_slot_aut(diag));
                if (factor == 0) continue;
                for_each_cover_monomial(
                    diag, dmax,
                    [&](const std::vector<EdgeData>& edges, int deg, const Rat& value) {
                        Json entry;
                        entry["diagram"] = diag.canonical_key();
                        Json je = Json::array();
                        for (size_t k = 0; k < edges.size(); ++k) {
                            Json e;
                            e["ends"] = Json::array(
                                {diag.edges[k].first + 1, diag.edges[k].second + 1});
                            e["weight"] = edges[k].weight;
                            e["crossings"] = edges[k].crossings;
                            if (diag.edges[k].first != diag.edges[k].second)
                                e["backward"] = edges[k].backward;
                            je.push_back(std::move(e));
                        }
                        entry["edges"] = std::move(je);
                        entry["degree"] = deg;
                        entry["multiplicity"] = rat_to_string(factor * value);
                        arr.push_back(std::move(entry));
                    });
            }
            Json j;
            j["covers"] = std::move(arr);
            emit_json(j, out_path);
        } else if (cmd_fit->parsed()) {
            std::string text = series_in;
            if (!series_in.empty() && series_in[0] == '@') {
                std::ifstream in(series_in.substr(1));
                if (!in) throw input_error("cannot open series file " + series_in.substr(1));
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            Json sj = Json::parse(text, nullptr, false);
            if (sj.is_discarded()) throw input_error("series input is not valid JSON");
            Series s = series_from_json(sj, Var::q);
            auto fit = fit_quasimodular(s, wmax, holdout);
            emit_json(fit_to_json(fit, wmax), out_path);
            if (!fit.success) return 2;
        } else if (cmd_poly->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            BalancedPoint x0 = parse_point(x0_str);
            std::optional<Partition> lambda;
            if (!lambda_str.empty()) lambda = partition_from_list(lambda_str);
            auto rep = interpolate_chamber(w, r, x0, lambda, holdout, radius);
            if (format == "csv") {
                std::vector<std::string> header;
                for (size_t i = 0; i < x0.size(); ++i)
                    header.push_back("x" + std::to_string(i + 1));
                header.push_back("H");
                std::vector<std::vector<std::string>> rows;
                auto add_rows = [&](const std::vector<BalancedPoint>& pts) {
                    for (const auto& x : pts) {
                        std::vector<std::string> row;
                        for (long v : x) row.push_back(std::to_string(v));
                        row.push_back(rat_to_decimal_if_exact(rep.poly.evaluate(x)));
                        rows.push_back(std::move(row));
                    }
                };
                add_rows(rep.fit_points);
                add_rows(rep.validation_points);
                write_output(csv_from_table(header, rows), out_path);
            } else {
                emit_json(interpolation_to_json(rep), out_path);
            }
        } else if (cmd_wall->parsed()) {
            WeightFunction w = parse_weight(weight_spec);
            auto rep = wallcross_verify(w, partition_from_list(lambda_str), parse_wall(wall_str),
                                        parse_point(x0_str), test_points, holdout, radius);
            emit_json(wallcross_to_json(rep), out_path);
            if (!rep.all_equal) return 3;
        } else if (cmd_self->parsed()) {
            return run_selftest(level, threads);
        }
    } catch (const input_error& e) {
        Json err;
        err["error"] = e.what();
        err["type"] = "input";
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        err["type"] = "internal";
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return 0;
}
