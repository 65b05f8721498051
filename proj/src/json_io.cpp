#include "bohr/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bohr {

using nlohmann::json;

std::string format_sig15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

json certificate_json(const RadiusProblem& problem, const CertifiedRoot& root) {
    json j;
    j["theorem"] = to_string(problem.theorem);
    j["params"] = {{"K", problem.params.K},
                   {"alpha", problem.params.alpha},
                   {"mu", problem.params.mu},
                   {"N", problem.params.N},
                   {"a0", problem.params.a0}};
    const auto df = defining_function(problem);
    if (df.poly) {
        json coeffs = json::array();
        for (const auto& c : df.poly->coeffs()) coeffs.push_back(to_string(c));
        j["poly"] = coeffs;
    }
    j["interval"] = {to_string(root.lo), to_string(root.hi)};
    j["estimate"] = root.estimate;
    j["certificate"] = to_string(root.certificate);
    j["residual"] = root.residual;
    return j;
}

CertifiedRoot root_from_json(const json& j) {
    CertifiedRoot root;
    root.lo = rational_from_string(j.at("interval").at(0).get<std::string>());
    root.hi = rational_from_string(j.at("interval").at(1).get<std::string>());
    root.estimate = j.at("estimate").get<double>();
    root.residual = j.at("residual").get<double>();
    const auto cert = j.at("certificate").get<std::string>();
    if (cert == "sturm_count_one")
        root.certificate = Certificate::sturm_count_one;
    else if (cert == "monotone_sign_change")
        root.certificate = Certificate::monotone_sign_change;
    else
        throw std::invalid_argument("root_from_json: unknown certificate " + cert);
    return root;
}

std::string csv_header() { return "theorem,K,alpha,mu,N,radius,lo,hi,cert"; }

std::string csv_row(const RadiusProblem& problem, const CertifiedRoot& root) {
    std::ostringstream os;
    os << to_string(problem.theorem) << ',' << format_sig15(problem.params.K) << ','
       << format_sig15(problem.params.alpha) << ',' << format_sig15(problem.params.mu) << ','
       << problem.params.N << ',' << format_sig15(root.estimate) << ','
       << format_sig15(to_double(root.lo)) << ',' << format_sig15(to_double(root.hi)) << ','
       << to_string(root.certificate);
    return os.str();
}

json sharpness_json(const SharpnessReport& rep) {
    return json{{"theorem", to_string(rep.theorem)},
                {"K", rep.K},
                {"alpha", rep.alpha},
                {"mu", rep.mu},
                {"delta", rep.delta},
                {"r0", rep.r0},
                {"r_below", rep.r_below},
                {"r_above", rep.r_above},
                {"below", to_string(rep.below)},
                {"above", to_string(rep.above)},
                {"sharp_claim", rep.sharp_claim},
                {"ok", rep.ok}};
}

json campaign_json(const CampaignReport& rep) {
    json verdicts = json::array();
    for (const Verdict v : rep.verdicts) verdicts.push_back(to_string(v));
    return json{{"theorem", to_string(rep.theorem)},
                {"K", rep.K},
                {"alpha", rep.alpha},
                {"r_fraction", rep.r_fraction},
                {"r0", rep.r0},
                {"r", rep.r},
                {"seed", rep.seed},
                {"trials", rep.trials},
                {"holds", rep.holds},
                {"fails", rep.fails},
                {"inconclusive", rep.inconclusive},
                {"verdicts", verdicts}};
}

std::string campaign_csv(const CampaignReport& rep) {
    std::ostringstream os;
    os << "theorem,K,alpha,trials,r,holds,fails,inconclusive,seed\n"
       << to_string(rep.theorem) << ',' << format_sig15(rep.K) << ','
       << format_sig15(rep.alpha) << ',' << rep.trials << ',' << format_sig15(rep.r) << ','
       << rep.holds << ',' << rep.fails << ',' << rep.inconclusive << ',' << rep.seed << '\n';
    return os.str();
}

json certify_json(const std::vector<FigureCert>& certs) {
    json arr = json::array();
    for (const auto& c : certs)
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"certificates", arr}};
}

std::string svg_polyline(const std::vector<std::pair<double, double>>& points,
                         const std::string& x_label, const std::string& y_label,
                         const std::string& title) {
    const double W = 640, H = 420, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!points.empty()) {
        xmin = xmax = points[0].first;
        ymin = ymax = points[0].second;
        for (const auto& [x, y] : points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;
    }
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << title << "</text>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
       << H - mb << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n"
       << "<text x=\"18\" y=\"" << (mt + H - mb) / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
       << (mt + H - mb) / 2 << ")\">" << y_label << "</text>\n"
       << "<text x=\"" << ml << "\" y=\"" << H - mb + 16 << "\" font-size=\"11\">"
       << format_sig15(xmin) << "</text>\n"
       << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 16
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_sig15(xmax) << "</text>\n"
       << "<text x=\"" << ml - 6 << "\" y=\"" << H - mb
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_sig15(ymin) << "</text>\n"
       << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_sig15(ymax) << "</text>\n";
    if (!points.empty()) {
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : points) os << format_sig15(px(x)) << ',' << format_sig15(py(y)) << ' ';
        os << "\"/>\n";
        for (const auto& [x, y] : points)
            os << "<circle cx=\"" << format_sig15(px(x)) << "\" cy=\"" << format_sig15(py(y))
               << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bohr
