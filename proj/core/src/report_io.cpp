#include "opdl/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace opdl {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(const std::vector<Rational>& point) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : point) arr.push_back(c.str());
    return arr;
}

ordered_json component_json(const SolutionComponent& c) {
    ordered_json j;
    j["type"] = c.is_point() ? "point" : (c.free_count() == 1 ? "line" : "family");
    ordered_json coords = ordered_json::array();
    for (std::size_t i = 0; i < c.base.size(); ++i)
        coords.push_back(c.free_coord[i] ? "t" + std::to_string(i + 1) : c.base[i].str());
    j["coordinates"] = std::move(coords);
    if (!c.is_point()) {
        ordered_json free = ordered_json::array();
        for (std::size_t i = 0; i < c.free_coord.size(); ++i)
            if (c.free_coord[i]) free.push_back("t" + std::to_string(i + 1));
        j["free_parameters"] = std::move(free);
    }
    return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["schema"] = "opdl-classification-report/1";
    j["system"] = rep.system;
    j["parameters"] = rep.nparams;
    ordered_json gb = ordered_json::array();
    for (const auto& g : rep.groebner_basis) gb.push_back(g.str());
    j["groebner_basis"] = std::move(gb);
    ordered_json comps = ordered_json::array();
    for (const auto& c : rep.components) comps.push_back(component_json(c));
    j["solution_components"] = std::move(comps);
    j["matched_candidates"] = {{"trivial_law", rep.matched.trivial_law},
                               {"livernet_loday_line", rep.matched.livernet_loday_line}};
    j["pipeline"] = {{"relation_rows", rep.stats.relation_rows},
                     {"rref_rows", rep.stats.rref_rows},
                     {"consequence_rows", rep.stats.consequence_rows},
                     {"consequence_cols", rep.stats.consequence_cols},
                     {"unit_block", rep.stats.unit_block},
                     {"residual_rows", rep.stats.residual_rows},
                     {"residual_cols", rep.stats.residual_cols},
                     {"nonzero_residual_rows", rep.stats.nonzero_residual_rows},
                     {"distinct_entries", rep.stats.distinct_entries},
                     {"monic_generators", rep.stats.monic_generators},
                     {"generator_degrees", rep.stats.generator_degrees}};
    j["seed"] = rep.seed;
    ordered_json checks = ordered_json::array();
    for (const auto& sc : rep.spot_checks) {
        ordered_json c;
        c["point"] = point_json(sc.point);
        c["certified"] = sc.certified;
        c["groebner_member"] = sc.gb_member;
        c["rank"] = sc.rank;
        c["agree"] = sc.certified == sc.gb_member;
        checks.push_back(std::move(c));
    }
    j["spot_checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_to_markdown(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "# Distributive-law classification: " << rep.system << "\n\n";
    os << "Deformation parameters: " << rep.nparams << "\n\n";
    os << "## Pipeline checkpoints\n\n";
    os << "| stage | value |\n|---|---|\n";
    os << "| relation rows | " << rep.stats.relation_rows << " |\n";
    os << "| RREF rows | " << rep.stats.rref_rows << " |\n";
    os << "| consequence matrix | " << rep.stats.consequence_rows << " x "
       << rep.stats.consequence_cols << " |\n";
    os << "| unit block | " << rep.stats.unit_block << " |\n";
    os << "| residual block | " << rep.stats.residual_rows << " x " << rep.stats.residual_cols
       << " |\n";
    os << "| nonzero residual rows | " << rep.stats.nonzero_residual_rows << " |\n";
    os << "| distinct residual entries | " << rep.stats.distinct_entries << " |\n";
    os << "| monic obstruction generators | " << rep.stats.monic_generators << " |\n";
    os << "| generator degrees | ";
    for (std::size_t i = 0; i < rep.stats.generator_degrees.size(); ++i)
        os << (i ? ", " : "") << rep.stats.generator_degrees[i];
    os << " |\n\n";
    os << "## Reduced Groebner basis\n\n";
    if (rep.groebner_basis.empty()) {
        os << "(zero ideal)\n";
    } else {
        for (const auto& g : rep.groebner_basis) os << "- `" << g.str() << "`\n";
    }
    os << "\n## Solution set\n\n";
    if (rep.components.empty()) os << "empty: no distributive law at any parameter value\n";
    for (const auto& c : rep.components) {
        os << "- " << (c.is_point() ? "point " : "line ") << c.describe();
        if (c.is_zero_point()) os << "  (trivial law)";
        if (!c.is_point()) os << "  (deformed family)";
        os << "\n";
    }
    os << "\n## Matched candidates\n\n";
    os << "- trivial law: " << (rep.matched.trivial_law ? "confirmed" : "not present") << "\n";
    os << "- deformed associative family: "
       << (rep.matched.livernet_loday_line ? "confirmed" : "not present") << "\n";
    if (!rep.spot_checks.empty()) {
        os << "\n## Spot checks (seed " << rep.seed << ")\n\n";
        os << "| point | rank | certified | basis member | agree |\n|---|---|---|---|---|\n";
        for (const auto& sc : rep.spot_checks) {
            os << "| (";
            for (std::size_t i = 0; i < sc.point.size(); ++i)
                os << (i ? ", " : "") << sc.point[i].str();
            os << ") | " << sc.rank << " | " << (sc.certified ? "yes" : "no") << " | "
               << (sc.gb_member ? "yes" : "no") << " | "
               << (sc.certified == sc.gb_member ? "yes" : "NO") << " |\n";
        }
    }
    return os.str();
}

std::string certify_to_json(const CertifyResult& res, const std::vector<Rational>& point,
                            const std::string& system) {
    ordered_json j;
    j["schema"] = "opdl-certificate/1";
    j["system"] = system;
    j["point"] = point_json(point);
    j["rank"] = res.rank;
    j["expected_rank"] = res.expected_rank;
    j["is_distributive_law"] = res.is_law;
    if (res.obstruction) {
        j["obstruction"] = {{"entry", res.obstruction->str()},
                            {"value", res.obstruction_value->str()}};
    }
    return j.dump(2) + "\n";
}

std::string certify_to_text(const CertifyResult& res, const std::vector<Rational>& point,
                            const std::string& system) {
    std::ostringstream os;
    os << "system " << system << " at point (";
    for (std::size_t i = 0; i < point.size(); ++i) os << (i ? ", " : "") << point[i].str();
    os << "): rank " << res.rank << " (expected " << res.expected_rank << ") -> "
       << (res.is_law ? "distributive law" : "NOT a distributive law") << "\n";
    if (res.obstruction)
        os << "obstruction entry " << res.obstruction->str() << " evaluates to "
           << res.obstruction_value->str() << "\n";
    return os.str();
}

}  // namespace opdl
