#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bohr/certify.hpp"
#include "bohr/radii.hpp"
#include "bohr/witnesses.hpp"

namespace bohr {

/// 15 significant digits; stable across runs, diff-friendly.
std::string format_sig15(double x);

/// Schema: {theorem, params, poly?: [rational strings], interval: [lo, hi],
/// estimate, certificate, residual}. Interval endpoints are exact "num/den"
/// strings, so the round trip is bit-exact.
nlohmann::json certificate_json(const RadiusProblem& problem, const CertifiedRoot& root);

CertifiedRoot root_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const RadiusProblem& problem, const CertifiedRoot& root);

nlohmann::json sharpness_json(const SharpnessReport& rep);
nlohmann::json campaign_json(const CampaignReport& rep);
std::string campaign_csv(const CampaignReport& rep);
nlohmann::json certify_json(const std::vector<FigureCert>& certs);

/// Static polyline plot of (x, y) points with axis labels; no interactivity.
std::string svg_polyline(const std::vector<std::pair<double, double>>& points,
                         const std::string& x_label, const std::string& y_label,
                         const std::string& title);

}  // namespace bohr
