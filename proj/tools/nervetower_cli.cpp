// nervetower: Cech nerves, exact simplicial (co)homology, and limits of
// homology towers for spaces presented by towers of finite covers.
#include "nervetower/homology.hpp"
#include "nervetower/json_io.hpp"
#include "nervetower/steenrod.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace nervetower;
using nervetower::io::json;

constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_input(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
    }
}

void write_output(const std::string& path, const json& j) {
    std::string text = io::dump(j);
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << text;
}

struct Options {
    std::string in = "-";
    std::string out = "-";
    int dim_cap = 4;
    std::size_t window = 8;
    std::int64_t mod = 0;
    bool unreduced = false;
    bool strict = false;
};

void add_io_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--in", o.in, "input file ('-' for stdin)");
    cmd->add_option("--out", o.out, "output file ('-' for stdout)");
}

void add_coefficient_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--mod", o.mod, "coefficient modulus m >= 2 (0 for integers)");
    auto* unred = cmd->add_flag("--unreduced", o.unreduced, "use unreduced (co)homology");
    cmd->add_flag("--reduced", "use reduced (co)homology (default)")->excludes(unred);
}

std::vector<Int> to_int_params(const std::vector<std::int64_t>& raw) {
    std::vector<Int> out;
    for (auto v : raw) out.emplace_back(v);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Cech nerves and Steenrod homology of cover towers"};
    app.require_subcommand(1);

    Options o;
    bool vietoris = false;
    int degree = -1;
    bool cohomology_flag = false;
    std::string space_name;
    std::vector<std::int64_t> space_params;

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a cover (JSON cover in, complex out)");
    add_io_flags(nerve_cmd, o);
    nerve_cmd->add_option("--dim-cap", o.dim_cap, "maximal simplex dimension kept");
    nerve_cmd->add_flag("--vietoris", vietoris, "Vietoris complex instead of the Cech nerve");

    auto* hom_cmd = app.add_subcommand("homology", "(co)homology of a complex (JSON complex in)");
    add_io_flags(hom_cmd, o);
    add_coefficient_flags(hom_cmd, o);
    hom_cmd->add_option("--deg", degree, "single degree (default: all degrees)");
    hom_cmd->add_flag("--cohomology", cohomology_flag, "cohomology instead of homology");

    auto* tower_cmd =
        app.add_subcommand("tower", "limit, lim^1, and Mittag-Leffler analysis of a group tower");
    add_io_flags(tower_cmd, o);
    tower_cmd->add_option("--window", o.window, "truncation window for towers without full tails");
    tower_cmd->add_flag("--strict", o.strict, "exit 3 when the analysis is inconclusive");

    auto* st_cmd = app.add_subcommand(
        "steenrod", "Milnor sequence report for a nerve tower (JSON tower in, or --space)");
    add_io_flags(st_cmd, o);
    add_coefficient_flags(st_cmd, o);
    st_cmd->add_option("--deg", degree, "single degree (default: all degrees)");
    st_cmd->add_option("--window", o.window, "truncation window");
    st_cmd->add_option("--space", space_name, "built-in space instead of --in");
    st_cmd->add_option("--params", space_params, "parameters for --space");
    st_cmd->add_flag("--strict", o.strict, "exit 3 when any reported degree is inconclusive");

    auto* spaces_cmd =
        app.add_subcommand("spaces", "list built-in spaces or emit one as a nerve tower");
    spaces_cmd->add_option("--out", o.out, "output file ('-' for stdout)");
    spaces_cmd->add_option("--name", space_name, "space to emit");
    spaces_cmd->add_option("--params", space_params, "parameters for --name");

    CLI11_PARSE(app, argc, argv);

    if (nerve_cmd->parsed()) {
        Cover c = io::cover_from_json(parse_input(o.in));
        SimplicialComplex k =
            vietoris ? vietoris_nerve(c, o.dim_cap) : cech_nerve(c, o.dim_cap);
        write_output(o.out, io::complex_to_json(k));
        return 0;
    }

    if (hom_cmd->parsed()) {
        SimplicialComplex k = io::complex_from_json(parse_input(o.in));
        bool reduced = !o.unreduced;
        json groups = json::array();
        int lo = degree >= 0 ? degree : 0;
        int hi = degree >= 0 ? degree : std::max(k.dimension(), 0);
        for (int n = lo; n <= hi; ++n) {
            FGAbelianGroup g = cohomology_flag ? cohomology(k, n, o.mod, reduced)
                                               : homology(k, n, o.mod, reduced);
            groups.push_back(json{{"degree", n}, {"group", io::group_to_json(g)}});
        }
        write_output(o.out, json{{"kind", cohomology_flag ? "cohomology" : "homology"},
                                 {"mod", o.mod},
                                 {"reduced", reduced},
                                 {"groups", std::move(groups)}});
        return 0;
    }

    if (tower_cmd->parsed()) {
        GroupTower t = io::group_tower_from_json(parse_input(o.in));
        TowerAnalysis a = analyze_tower(t, o.window);
        write_output(o.out, io::analysis_to_json(a));
        if (o.strict && a.ml == MLStatus::inconclusive) return kExitInconclusive;
        return 0;
    }

    if (st_cmd->parsed()) {
        NerveTower t;
        if (!space_name.empty())
            t = builtin_space(space_name, to_int_params(space_params));
        else
            t = io::nerve_tower_from_json(parse_input(o.in));
        bool reduced = !o.unreduced;
        int maxdim = 0;
        for (const auto& k : t.complexes) maxdim = std::max(maxdim, k.dimension());
        int lo = degree >= 0 ? degree : 0;
        int hi = degree >= 0 ? degree : maxdim;
        bool inconclusive = false;
        json entries = json::array();
        for (int n = lo; n <= hi; ++n) {
            SteenrodEntry e = steenrod_homology(t, n, o.mod, reduced, o.window);
            inconclusive = inconclusive || e.status == SteenrodEntry::Status::inconclusive;
            json entry = io::steenrod_to_json(e);
            entry["cech_cohomology"] = io::colim_to_json(cech_cohomology(t, n, o.mod, reduced));
            entries.push_back(std::move(entry));
        }
        write_output(o.out, json{{"mod", o.mod},
                                 {"reduced", reduced},
                                 {"window", o.window},
                                 {"degrees", std::move(entries)}});
        if (o.strict && inconclusive) return kExitInconclusive;
        return 0;
    }

    if (spaces_cmd->parsed()) {
        if (space_name.empty()) {
            json names = json::array();
            for (const auto& n : builtin_space_names()) names.push_back(n);
            write_output(o.out, json{{"spaces", std::move(names)}});
            return 0;
        }
        NerveTower t = builtin_space(space_name, to_int_params(space_params));
        write_output(o.out, io::nerve_tower_to_json(t));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
