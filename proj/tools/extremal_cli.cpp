// Command-line surface: exact curves, Monte Carlo samples, verification
// reports, and figure bundles as CSV/JSON files.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/csvio.hpp"
#include "extremal/ginibre.hpp"
#include "extremal/induced.hpp"
#include "extremal/laws.hpp"
#include "extremal/limits.hpp"
#include "extremal/sampling.hpp"
#include "extremal/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace extremal;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIntegrity = 3;

struct CommonOpts {
    std::string ensemble = "ginibre";
    std::int64_t n = 1;
    std::optional<double> alpha;
    std::optional<double> rect_index;
    std::string scaling = "none";
};

EnsembleParams resolve_params(const CommonOpts& c) {
    const ScalingMode mode = scaling_from_string(c.scaling);
    if (c.ensemble == "ginibre") {
        if (c.alpha || c.rect_index) {
            throw std::domain_error("--alpha/--rect-index apply to the induced ensemble only");
        }
        return EnsembleParams::ginibre(c.n, mode);
    }
    if (c.ensemble != "induced") {
        throw std::domain_error("--ensemble must be 'ginibre' or 'induced'");
    }
    if (c.alpha.has_value() == c.rect_index.has_value()) {
        throw std::domain_error("induced ensemble needs exactly one of --alpha / --rect-index");
    }
    if (c.alpha) return EnsembleParams::induced_proportional(c.n, *c.alpha, mode);
    return EnsembleParams::induced_fixed(c.n, *c.rect_index, mode);
}

std::vector<double> resolve_grid(const std::string& spec, laws::LawId law,
                                 const EnsembleParams& params) {
    if (spec == "auto") return laws::auto_grid(law, params, 512);
    double lo = 0.0, hi = 0.0;
    long points = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> points) || c1 != ':' || c2 != ':' || points < 2) {
        throw std::domain_error("--grid expects min:max:points with points >= 2, or 'auto'");
    }
    return laws::linspace(lo, hi, static_cast<std::size_t>(points));
}

std::unique_ptr<std::ostream> open_out(const std::string& path) {
    if (path == "-") {
        return std::make_unique<std::ostream>(std::cout.rdbuf());
    }
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*f) throw std::domain_error("cannot open output file '" + path + "'");
    return f;
}

void print_params(const EnsembleParams& p, const std::vector<double>& grid) {
    std::cerr << "resolved: n=" << p.n << " rect_index=" << p.rect_index;
    if (p.alpha) std::cerr << " alpha=" << *p.alpha;
    std::cerr << " scaling=" << to_string(p.scaling) << " grid=[" << grid.front() << ", "
              << grid.back() << "] x" << grid.size() << "\n";
}

int cmd_eval(const CommonOpts& common, const std::string& law_str, const std::string& grid_spec,
             double joint_inner, const std::string& out) {
    const EnsembleParams params = resolve_params(common);
    const laws::LawId law = laws::law_from_string(law_str);
    const std::vector<double> grid = resolve_grid(grid_spec, law, params);
    print_params(params, grid);
    laws::LawOptions opt;
    opt.joint_inner = joint_inner;
    const DistributionCurve curve = laws::eval_curve(law, params, grid, opt);
    csvio::Meta extra;
    if (law == laws::LawId::Joint) {
        extra.emplace_back("joint_inner_radius", csvio::format_double(joint_inner));
    }
    if (law == laws::LawId::TailRight) {
        extra.emplace_back("note", "tail-right asymptotic unreliable for r <= 1.5");
    }
    if (law == laws::LawId::Gumbel) {
        const bool outer = params.scaling != ScalingMode::SqrtAlphaN;
        const auto g = laws::matching_gumbel(params, outer);
        extra.emplace_back("gumbel_location", csvio::format_double(g.location));
        extra.emplace_back("gumbel_scale", csvio::format_double(g.scale));
        extra.emplace_back("gumbel_gamma_n", csvio::format_double(g.gamma_alpha_n));
    }
    auto os = open_out(out);
    csvio::write_curve(*os, curve, extra);
    return kExitOk;
}

int cmd_sample(const CommonOpts& common, std::size_t k_draws, std::optional<std::uint64_t> seed,
               const std::string& sampler, const std::string& out) {
    const EnsembleParams params = resolve_params(common);
    std::uint64_t s;
    if (seed) {
        s = *seed;
    } else {
        s = std::random_device{}();
        std::cerr << "seed not given; using random seed " << s << "\n";
    }
    sampling::SampleBatch batch;
    if (sampler == "gamma") {
        batch = sampling::sample_extremes_gamma(params, k_draws, s);
    } else if (sampler == "matrix") {
        batch = sampling::sample_extremes_matrix(params, k_draws, s);
    } else {
        throw std::domain_error("--sampler must be 'gamma' or 'matrix'");
    }
    std::cerr << "sampled " << k_draws << " pairs (sampler=" << sampler << ", seed=" << s << ")\n";
    auto os = open_out(out);
    csvio::write_samples(*os, batch, {{"sampler", sampler}});
    return kExitOk;
}

int cmd_verify(const std::string& only, double threshold_scale, const std::string& format,
               const std::string& out) {
    const auto results = verify::run_selected(only, threshold_scale);
    bool all_pass = true;
    json arr = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        arr.push_back({{"id", r.id},
                       {"description", r.description},
                       {"measured", r.measured},
                       {"threshold", r.threshold},
                       {"comparison", r.comparison},
                       {"pass", r.pass},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": measured " << r.measured << " "
                  << r.comparison << " " << r.threshold << " (" << r.seconds << "s)\n";
    }
    json report = {{"criteria", arr}, {"all_pass", all_pass}};
    auto os = open_out(out);
    if (format == "json") {
        *os << report.dump(2) << "\n";
    } else if (format == "csv") {
        *os << "id,measured,threshold,comparison,pass\n";
        for (const auto& r : results) {
            *os << r.id << ',' << csvio::format_double(r.measured) << ','
                << csvio::format_double(r.threshold) << ',' << r.comparison << ','
                << (r.pass ? "true" : "false") << "\n";
        }
    } else {
        throw std::domain_error("--format must be 'json' or 'csv'");
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

void write_curve_file(const std::string& path, laws::LawId law, const EnsembleParams& params,
                      const std::vector<double>& grid, const csvio::Meta& extra = {}) {
    auto os = open_out(path);
    csvio::write_curve(*os, laws::eval_curve(law, params, grid), extra);
}

void write_gumbel_pdf_file(const std::string& path, const limits::GumbelLaw& law,
                           const csvio::Meta& extra, const EnsembleParams& tag_params) {
    DistributionCurve curve;
    curve.law = "gumbel-pdf";
    curve.params = tag_params;
    curve.grid = laws::linspace(law.mean() - 6.0 * law.stddev(), law.mean() + 6.0 * law.stddev(), 512);
    for (double v : curve.grid) curve.values.push_back(law.pdf(v));
    auto os = open_out(path);
    csvio::write_curve(*os, curve, extra);
}

void write_gumbel_cdf_file(const std::string& path, const limits::GumbelLaw& law,
                           const std::vector<double>& grid, const csvio::Meta& extra,
                           const EnsembleParams& tag_params) {
    DistributionCurve curve;
    curve.law = "gumbel";
    curve.params = tag_params;
    curve.grid = grid;
    for (double v : grid) curve.values.push_back(law.cdf(v));
    auto os = open_out(path);
    csvio::write_curve(*os, curve, extra);
}

int cmd_figure(const std::string& fig, const std::string& out_dir, std::uint64_t seed) {
    const csvio::Meta caption_note = {
        {"caption_n_resolution", "captions' 10eX notation read as 10^X (e.g. 10e3 -> 1000)"}};
    auto path = [&out_dir](const std::string& name) { return out_dir + "/" + name; };

    if (fig == "fig1" || fig == "fig2") {
        const auto params =
            EnsembleParams::induced_proportional(90, 1.0 / 9.0, ScalingMode::SqrtOnePlusAlphaN);
        const auto grid = laws::auto_grid(laws::LawId::RmaxPdf, params, 512);
        write_curve_file(path(fig + "_rmax_pdf_exact.csv"), laws::LawId::RmaxPdf, params, grid);
        {
            auto os = open_out(path(fig + "_rmax_samples.csv"));
            csvio::write_samples(*os, sampling::sample_extremes_gamma(params, 10000, seed));
        }
        if (fig == "fig1") {
            const double alphas[3] = {1.0 / 90.0, 1.0 / 9.0, 4.0 / 9.0};
            const char* names[3] = {"1ov90", "1ov9", "4ov9"};
            for (int i = 0; i < 3; ++i) {
                const auto p =
                    EnsembleParams::induced_proportional(90, alphas[i], ScalingMode::SqrtOnePlusAlphaN);
                write_curve_file(path("fig1_rmax_pdf_alpha_" + std::string(names[i]) + ".csv"),
                                 laws::LawId::RmaxPdf, p, laws::auto_grid(laws::LawId::RmaxPdf, p, 512));
            }
        } else {
            for (std::int64_t big_n : {std::int64_t{1000}, std::int64_t{2000}}) {
                const auto law = limits::gumbel_outer(1.0 / 9.0, big_n);
                const auto p = EnsembleParams::induced_proportional(big_n, 1.0 / 9.0,
                                                                    ScalingMode::SqrtOnePlusAlphaN);
                write_gumbel_pdf_file(path("fig2_limit_pdf_n" + std::to_string(big_n) + ".csv"), law,
                                      caption_note, p);
            }
        }
        return kExitOk;
    }
    if (fig == "fig3") {
        for (std::int64_t n : {std::int64_t{1000}, std::int64_t{10000}, std::int64_t{10000000}}) {
            const auto p = EnsembleParams::induced_proportional(n, 1.0, ScalingMode::SqrtOnePlusAlphaN);
            write_curve_file(path("fig3_rmax_cdf_exact_n" + std::to_string(n) + ".csv"),
                             laws::LawId::RmaxCdf, p, laws::auto_grid(laws::LawId::RmaxCdf, p, 512),
                             caption_note);
        }
        const auto p =
            EnsembleParams::induced_proportional(10000000, 1.0, ScalingMode::SqrtOnePlusAlphaN);
        write_gumbel_cdf_file(path("fig3_rmax_cdf_asymptotic_n10000000.csv"),
                              limits::gumbel_outer(1.0, 10000000),
                              laws::auto_grid(laws::LawId::RmaxCdf, p, 512), caption_note, p);
        return kExitOk;
    }
    if (fig == "fig4" || fig == "fig5") {
        const auto params = EnsembleParams::induced_proportional(100, 0.1, ScalingMode::SqrtAlphaN);
        const auto grid = laws::auto_grid(laws::LawId::RminPdf, params, 512);
        write_curve_file(path(fig + "_rmin_pdf_exact.csv"), laws::LawId::RminPdf, params, grid);
        {
            auto os = open_out(path(fig + "_rmin_samples.csv"));
            csvio::write_samples(*os, sampling::sample_extremes_gamma(params, 10000, seed));
        }
        if (fig == "fig4") {
            const double alphas[3] = {0.01, 0.1, 0.4};
            const char* names[3] = {"1ov100", "1ov10", "4ov10"};
            for (int i = 0; i < 3; ++i) {
                const auto p =
                    EnsembleParams::induced_proportional(100, alphas[i], ScalingMode::SqrtAlphaN);
                write_curve_file(path("fig4_rmin_pdf_alpha_" + std::string(names[i]) + ".csv"),
                                 laws::LawId::RminPdf, p, laws::auto_grid(laws::LawId::RminPdf, p, 512));
            }
        } else {
            for (std::int64_t big_n : {std::int64_t{10000}, std::int64_t{20000}}) {
                const auto law = limits::gumbel_inner(0.1, big_n);
                const auto p =
                    EnsembleParams::induced_proportional(big_n, 0.1, ScalingMode::SqrtAlphaN);
                write_gumbel_pdf_file(path("fig5_limit_pdf_n" + std::to_string(big_n) + ".csv"), law,
                                      caption_note, p);
            }
        }
        return kExitOk;
    }
    if (fig == "fig6") {
        for (std::int64_t n :
             {std::int64_t{100000}, std::int64_t{1000000}, std::int64_t{10000000}}) {
            const auto p = EnsembleParams::induced_proportional(n, 1.0, ScalingMode::SqrtAlphaN);
            DistributionCurve curve;
            curve.law = "rmin-cdf";
            curve.params = p;
            curve.grid = laws::auto_grid(laws::LawId::RminSurvival, p, 512);
            for (double v : curve.grid) {
                curve.values.push_back(1.0 - induced::ind_rmin_survival(p, v));
            }
            auto os = open_out(path("fig6_rmin_cdf_exact_n" + std::to_string(n) + ".csv"));
            csvio::write_curve(*os, curve, caption_note);
        }
        const auto p = EnsembleParams::induced_proportional(10000000, 1.0, ScalingMode::SqrtAlphaN);
        write_gumbel_cdf_file(path("fig6_rmin_cdf_asymptotic_n10000000.csv"),
                              limits::gumbel_inner(1.0, 10000000),
                              laws::auto_grid(laws::LawId::RminSurvival, p, 512), caption_note, p);
        return kExitOk;
    }
    throw std::domain_error("unknown figure id '" + fig + "' (fig1..fig6)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic extreme eigenvalue modulus laws for the complex (induced) "
                 "Ginibre ensembles"};
    app.require_subcommand(1);

    CommonOpts common;
    // eval
    auto* eval = app.add_subcommand("eval", "evaluate an exact or asymptotic law on a grid");
    std::string law_str = "rmax-cdf", grid_spec = "auto", out = "-";
    double joint_inner = 0.0;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--ensemble", common.ensemble, "ginibre | induced");
        sub->add_option("--n", common.n, "matrix size N")->required();
        sub->add_option("--alpha", common.alpha, "proportional index, L = alpha N (induced)");
        sub->add_option("--rect-index", common.rect_index, "fixed rectangularity index L (induced)");
        sub->add_option("--scaling", common.scaling, "none | sqrt-n | inner | outer");
    };
    add_common(eval);
    eval->add_option("--law", law_str,
                     "rmin-survival | rmin-pdf | rmax-cdf | rmax-pdf | joint | hole | gumbel | "
                     "tail-left | tail-right | ldp")
        ->required();
    eval->add_option("--grid", grid_spec, "min:max:points or 'auto'");
    eval->add_option("--inner-radius", joint_inner, "fixed inner radius for --law joint");
    eval->add_option("--out", out, "output CSV path ('-' for stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "draw (r_min, r_max) pairs");
    std::size_t k_draws = 1;
    std::optional<std::uint64_t> seed;
    std::string sampler = "gamma";
    std::string sample_out = "-";
    add_common(sample);
    sample->add_option("--samples", k_draws, "number of draws K")->required();
    sample->add_option("--seed", seed, "RNG seed (default: random, printed)");
    sample->add_option("--sampler", sampler, "gamma | matrix");
    sample->add_option("--out", sample_out, "output CSV path ('-' for stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification criteria");
    std::string only, vformat = "json", vout = "-";
    double threshold_scale = 1.0;
    verify_cmd->add_option("--only", only, "run only criteria whose id contains this substring");
    verify_cmd->add_option("--format", vformat, "json | csv");
    verify_cmd->add_option("--out", vout, "report path ('-' for stdout)");
    verify_cmd->add_option("--threshold-scale", threshold_scale,
                           "tighten/loosen all thresholds (testing hook)");

    // figure
    auto* figure = app.add_subcommand("figure", "emit the CSV bundle for a figure id");
    std::string fig_id, fig_out = ".";
    std::uint64_t fig_seed = 42;
    figure->add_option("id", fig_id, "fig1 | fig2 | fig3 | fig4 | fig5 | fig6")->required();
    figure->add_option("--out", fig_out, "output directory");
    figure->add_option("--seed", fig_seed, "sampling seed for histogram files");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return cmd_eval(common, law_str, grid_spec, joint_inner, out);
        if (sample->parsed()) return cmd_sample(common, k_draws, seed, sampler, sample_out);
        if (verify_cmd->parsed()) return cmd_verify(only, threshold_scale, vformat, vout);
        if (figure->parsed()) return cmd_figure(fig_id, fig_out, fig_seed);
        return kExitConfig;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    } catch (const extremal::integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrity;
    }
}
