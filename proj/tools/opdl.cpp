// Command-line front end: classification pipeline, point certification,
// dimension tables, matrix dumps and isomorphism checks.
//
// Exit codes: 0 success, 1 usage/config error, 2 internal error,
// 3 verify-point found that the point is not a distributive law.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opdl/classify.hpp"
#include "opdl/report_io.hpp"

using namespace opdl;

namespace {

std::vector<Rational> parse_point(const std::string& text, std::size_t expected) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Rational::parse(part));
    if (out.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated rational coordinates");
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string default_out_dir() {
    if (const char* env = std::getenv("OPDL_OUT_DIR")) return env;
    return ".";
}

std::string dims_to_json(SystemKind kind, int max_arity) {
    nlohmann::ordered_json j;
    j["schema"] = "opdl-dims/1";
    j["system"] = system_name(kind);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= max_arity; ++n)
        rows.push_back({{"arity", n}, {"dimension", composite_dimension(n, kind)}});
    j["composite_dimensions"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string dims_to_markdown(SystemKind kind, int max_arity) {
    std::ostringstream os;
    os << "# Composite product dimensions: " << system_name(kind) << "\n\n";
    os << "| arity | dimension |\n|---|---|\n";
    for (int n = 1; n <= max_arity; ++n)
        os << "| " << n << " | " << composite_dimension(n, kind) << " |\n";
    return os.str();
}

struct IsoGrid {
    std::vector<std::pair<Rational, bool>> phi;  // q -> associator reduces
    std::vector<std::tuple<Rational, Rational, bool>> rescale;
};

IsoGrid run_iso_grid() {
    IsoGrid g;
    for (int q = -2; q <= 2; ++q)
        g.phi.emplace_back(Rational(q), phi_associativity_reduces(Rational(q)));
    for (const Rational& q : {Rational(0), Rational(1), Rational(5)})
        for (const Rational& s : {Rational(1), Rational(2), Rational(1, 3)})
            g.rescale.emplace_back(q, s, rescaling_maps_parameter(q, s));
    return g;
}

std::string iso_to_json(const IsoGrid& g) {
    nlohmann::ordered_json j;
    j["schema"] = "opdl-iso-check/1";
    nlohmann::ordered_json phi = nlohmann::ordered_json::array();
    for (const auto& [q, ok] : g.phi) phi.push_back({{"q", q.str()}, {"associator_reduces", ok}});
    j["phi_associativity"] = std::move(phi);
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& [q, s, ok] : g.rescale) {
        rs.push_back({{"q", q.str()},
                      {"scale", s.str()},
                      {"maps_to", (s * s * q).str()},
                      {"row_space_equal", ok}});
        all = all && ok;
    }
    j["rescaling"] = std::move(rs);
    j["all_rescaling_ok"] = all;
    return j.dump(2) + "\n";
}

std::string iso_to_markdown(const IsoGrid& g) {
    std::ostringstream os;
    os << "# Isomorphism checks for the deformed family\n\n";
    os << "## Associator of x*y = xy + [x,y] against the line relations\n\n";
    os << "| q | reduces to zero |\n|---|---|\n";
    for (const auto& [q, ok] : g.phi) os << "| " << q.str() << " | " << (ok ? "yes" : "no") << " |\n";
    os << "\n## Bracket rescaling carries q to scale^2 * q\n\n";
    os << "| q | scale | maps to | row spaces equal |\n|---|---|---|---|\n";
    for (const auto& [q, s, ok] : g.rescale)
        os << "| " << q.str() << " | " << s.str() << " | " << (s * s * q).str() << " | "
           << (ok ? "yes" : "no") << " |\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of inhomogeneous distributive laws between the "
                 "commutative and Lie operads"};
    app.require_subcommand(1);

    std::string system = "com-lie";
    std::string output = "json";
    std::string output_path;
    std::string point_text;
    std::string out_dir = default_out_dir();
    std::uint64_t seed = 0;
    std::size_t spot_checks = 0;
    int max_arity = 6;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--system", system, "relation system (com-lie or nlie2)")
            ->check(CLI::IsMember({"com-lie", "nlie2"}));
        cmd->add_option("--output", output, "output format")
            ->check(CLI::IsMember({"json", "markdown"}));
        cmd->add_option("--output-path", output_path, "write to this file instead of stdout");
    };

    auto* cmd_classify = app.add_subcommand("classify", "run the full classification pipeline");
    add_common(cmd_classify);
    cmd_classify->add_option("--seed", seed, "seed for the randomized spot checks");
    cmd_classify->add_option("--spot-checks", spot_checks,
                             "certify this many seeded random points inside the report");

    auto* cmd_verify = app.add_subcommand("verify-point", "certify one parameter point");
    add_common(cmd_verify);
    cmd_verify->add_option("--point", point_text, "comma-separated rational coordinates")
        ->required();

    auto* cmd_dims = app.add_subcommand("dims", "composite product dimension table");
    add_common(cmd_dims);
    cmd_dims->add_option("--max-arity", max_arity, "largest arity to tabulate")
        ->check(CLI::Range(1, 6));

    auto* cmd_dump = app.add_subcommand("dump-matrix", "write the pipeline matrices to CSV");
    cmd_dump->add_option("--system", system, "relation system (com-lie or nlie2)")
        ->check(CLI::IsMember({"com-lie", "nlie2"}));
    cmd_dump->add_option("--out-dir", out_dir, "output directory (default $OPDL_OUT_DIR or .)");

    auto* cmd_iso = app.add_subcommand("iso-check", "associator and rescaling checks on the line");
    cmd_iso->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd_iso->add_option("--output-path", output_path, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the usage message
        return code == 0 ? 0 : 1;
    }

    try {
        const SystemKind kind = system_from_name(system);

        if (cmd_classify->parsed()) {
            Classifier cls(build_system(kind));
            const auto rep = cls.run(seed, spot_checks);
            emit(output == "json" ? report_to_json(rep) : report_to_markdown(rep), output_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            const auto sys = build_system(kind);
            std::vector<Rational> point;
            try {
                point = parse_point(point_text, sys.nparams);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: --point: " << e.what() << "\n";
                return 1;
            }
            Classifier cls(sys);
            const auto res = cls.certify(point);
            emit(output == "json" ? certify_to_json(res, point, system)
                                  : certify_to_text(res, point, system),
                 output_path);
            return res.is_law ? 0 : 3;
        }

        if (cmd_dims->parsed()) {
            emit(output == "json" ? dims_to_json(kind, max_arity)
                                  : dims_to_markdown(kind, max_arity),
                 output_path);
            return 0;
        }

        if (cmd_dump->parsed()) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            Classifier cls(build_system(kind));
            const auto dir = fs::path(out_dir);
            {
                std::ofstream f(dir / "consequences.csv");
                cls.consequence_matrix().write_csv(f);
            }
            {
                std::ofstream f(dir / "consequences.provenance.txt");
                cls.consequence_matrix().write_provenance(f);
            }
            {
                std::ofstream f(dir / "residual.csv");
                cls.smith().residual.write_csv(f);
            }
            {
                std::ofstream f(dir / "residual_stripped.csv");
                cls.stripped_residual().write_csv(f);
            }
            {
                std::ofstream f(dir / "generators.txt");
                for (const auto& g : cls.obstruction_generators()) f << g.str() << "\n";
            }
            {
                std::ofstream f(dir / "transcript.json");
                f << transcript_to_json(cls.smith().transcript);
            }
            std::cout << "wrote consequences.csv, consequences.provenance.txt, residual.csv, "
                         "residual_stripped.csv, generators.txt, transcript.json to "
                      << dir.string() << "\n";
            return 0;
        }

        if (cmd_iso->parsed()) {
            const auto grid = run_iso_grid();
            emit(output == "json" ? iso_to_json(grid) : iso_to_markdown(grid), output_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
