#pragma once

#include "logsurf/dualgraph.hpp"
#include "logsurf/graph_io.hpp"
#include "logsurf/report.hpp"
#include "logsurf/wps.hpp"

#include <optional>
#include <string>

namespace logsurf {

nlohmann::json germ_json(const GermClassification& g);
nlohmann::json dossier_json(const ChartDossier& d);
nlohmann::json verdict_json(const HypersurfaceVerdict& v);

/// Classification of a graph file; fork data when the graph has one fork.
Report germ_report(const GraphFile& file, const std::string& name);

Report wps_analyze_report(const Epsilon& eps, const Rational& s, const Rational& t);
/// Chart-by-chart dossier of an arbitrary quasi-smooth candidate.
Report wps_analyze_poly_report(const WeightedPoly& p, const std::string& name);
Report wps_normal_form_report(const std::array<Rational, 6>& a);
/// h(n) and, for n > 0, the ratio 2 h(n) prod(w) / (d n^2) with its distance from 1.
Report wps_hilbert_report(const Weights& w, std::int64_t d, std::int64_t n);
Report wps_volume_report(const Weights& w, std::int64_t d, std::int64_t twist);

Report enumerate_lemma22_report();
Report enumerate_lemma34_report(const Rational& target, const std::vector<std::int64_t>& moduli,
                                std::int64_t max_order, std::size_t max_length);

Report quadmin_report(const QuadraticForm1D& f);

}  // namespace logsurf
