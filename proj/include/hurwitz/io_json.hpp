#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hurwitz/feynman.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/polynomiality.hpp"
#include "hurwitz/quasimod.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

using Json = nlohmann::json;

// Weight specs: {"kind":"product-G","c":["1","1/2"]}, {"kind":"product-Gtilde",...},
// {"kind":"exp"}, {"kind":"completed-cycles","r":2}, {"kind":"log-series","A":[...]}.
WeightFunction weight_from_json(const Json& j);
Json weight_to_json(const WeightFunction& w);

// {"var":"w","coeffs":["1","0","1/24",...]} with canonical rational strings.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j, Var default_var = Var::q);

// q-expansions: {"coeffs":[...],"dMax":N}.
Json qexpansion_to_json(const Series& s);

Json cover_to_json(const TropicalCover& c, const CoverReport& rep);
Json diagram_to_json(const FeynmanDiagram& d);
Json fit_to_json(const QuasimodFit& fit, int weight_cap);
Json polynomial_to_json(const LatticePolynomial& p);
Json interpolation_to_json(const InterpolationReport& rep);
Json wallcross_to_json(const WallCrossingReport& rep);

Partition partition_from_list(const std::string& comma_list);  // "2,1,1"

// RFC-4180 style; rationals as decimal strings only when exact.
std::string csv_from_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

}  // namespace hurwitz
