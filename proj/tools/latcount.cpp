#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

#include "latcount/engine.hpp"
#include "latcount/hrep_io.hpp"

namespace {

using latcount::Mode;
using latcount::Substitution;

nlohmann::json stats_json(const latcount::DecompStats& s) {
    return nlohmann::json{{"cones_emitted", s.cones_emitted},
                          {"max_depth", s.max_depth},
                          {"vertices", s.vertices},
                          {"triangulation_simplices", s.triangulation_simplices},
                          {"wall_ms", s.wall_ms}};
}

int run_count(const std::string& path, const latcount::EngineOptions& opts,
              bool print_genfun, bool print_stats) {
    latcount::HRep p = latcount::read_hrep_file(path);

    if (opts.mode == Mode::Homogenized) {
        auto res = latcount::genfun_homogenization(p, opts.max_index);
        std::cout << latcount::to_text(res.genfun);
        if (print_stats) std::cout << stats_json(res.stats).dump() << "\n";
        return 0;
    }

    auto res = latcount::genfun_polytope(p, opts);
    auto ctx = latcount::pick_lambda(res.genfun, opts.rng_seed);
    latcount::Int count = opts.substitution == Substitution::Exponential
                              ? latcount::count_exponential(res.genfun, ctx)
                              : latcount::count_polynomial(res.genfun, ctx);
    std::cout << count.get_str() << "\n";
    if (print_genfun) std::cout << latcount::to_text(res.genfun);
    if (print_stats) std::cout << stats_json(res.stats).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice point counting via short rational generating functions"};
    app.require_subcommand(1);

    std::string file;
    std::string mode = "primal-irrational";
    std::string substitution = "exp";
    long long max_index = 1;
    unsigned long seed = 0;
    bool deterministic = false;
    bool print_genfun = false;
    bool print_stats = false;

    auto* count = app.add_subcommand("count", "Count integer points of a polytope");
    count->add_option("file", file, "H-representation file")->required();
    count->add_option("--mode", mode, "Algorithm variant")
        ->check(CLI::IsMember(
            {"dual-stopped", "primal-irrational", "all-primal", "homogenized"}));
    count->add_option("--max-index", max_index, "Stop decomposition at this index")
        ->check(CLI::PositiveNumber);
    count->add_option("--substitution", substitution, "Specialization method")
        ->check(CLI::IsMember({"poly", "exp"}));
    count->add_option("--seed", seed, "Seed for the substitution direction");
    count->add_flag("--deterministic", deterministic,
                    "Single-threaded, fixed processing order");
    count->add_flag("--print-genfun", print_genfun, "Print the generating function");
    count->add_flag("--stats", print_stats, "Print run statistics as JSON");

    auto* oracle = app.add_subcommand("oracle", "Count by brute-force box scan");
    oracle->add_option("file", file, "H-representation file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle->parsed()) {
            latcount::HRep p = latcount::read_hrep_file(file);
            std::cout << latcount::brute_force_count(p).get_str() << "\n";
            return 0;
        }
        latcount::EngineOptions opts;
        opts.max_index = latcount::Int(static_cast<long>(max_index));
        opts.rng_seed = seed;
        opts.deterministic = deterministic;
        opts.substitution =
            substitution == "poly" ? Substitution::Polynomial : Substitution::Exponential;
        static const std::map<std::string, Mode> modes{
            {"dual-stopped", Mode::DualStopped},
            {"primal-irrational", Mode::PrimalIrrational},
            {"all-primal", Mode::AllPrimal},
            {"homogenized", Mode::Homogenized}};
        opts.mode = modes.at(mode);
        return run_count(file, opts, print_genfun, print_stats);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
