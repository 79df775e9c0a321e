// ovalprimes: prime lattice points in dilates of symmetric planar domains.
//
// Subcommands: count, remainder, mellin, explicit, density, compare, figure.
// All outputs are deterministic; CSV files begin with '#' comment lines
// recording the domain, zero count and truncation parameters.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ovalprimes/counting.hpp"
#include "ovalprimes/distribution.hpp"
#include "ovalprimes/explicit_formula.hpp"
#include "ovalprimes/geometry.hpp"
#include "ovalprimes/mellin.hpp"
#include "ovalprimes/sieve.hpp"
#include "ovalprimes/svg.hpp"
#include "ovalprimes/zeros.hpp"

namespace op = ovalprimes;

namespace {

// exit codes beyond the usual 0/1
constexpr int exit_usage = 2;
constexpr int exit_bad_domain = 3;
constexpr int exit_bad_zeros = 4;
constexpr int exit_sieve_overflow = 5;
constexpr int exit_insufficient_zeros = 6;

struct BadDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SieveOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientZeros : std::runtime_error {
    using std::runtime_error::runtime_error;
};

op::DomainSpec parse_domain(const std::string& text) {
    try {
        return op::DomainSpec::parse(text);
    } catch (const std::invalid_argument& e) {
        throw BadDomain(e.what());
    }
}

op::MangoldtTable table_for(const op::DomainSpec& dom, double r_max, const std::string& cache) {
    const double needed = r_max * std::max(dom.a(), dom.b());
    if (!(needed < 2.0e9))
        throw SieveOverflow("sieve limit " + op::format_g17(needed) + " exceeds supported size");
    const auto limit = static_cast<std::uint64_t>(std::ceil(needed)) + 2;
    if (!cache.empty() && std::filesystem::exists(cache)) {
        try {
            auto t = op::MangoldtTable::load_cache(cache);
            if (t.limit() >= limit) return t;
        } catch (const std::runtime_error& e) {
            std::cerr << "note: ignoring unusable sieve cache: " << e.what() << "\n";
        }
    }
    auto t = op::MangoldtTable::build(limit);
    if (!cache.empty()) t.save_cache(cache);
    return t;
}

op::ZeroList load_zeros_checked(const std::string& path, std::size_t max_zeros) {
    if (path.empty())
        throw op::load_error("no zeros file given (use --zeros or OVALPRIMES_ZEROS)");
    op::ZeroList z = op::ZeroList::load(path, max_zeros ? max_zeros : SIZE_MAX);
    if (max_zeros != 0 && z.size() < max_zeros)
        throw InsufficientZeros("zeros file " + path + " holds only " +
                                std::to_string(z.size()) + " zeros, " +
                                std::to_string(max_zeros) + " requested");
    return z;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void write_provenance(std::ostream& out, const op::DomainSpec& dom,
                      const std::string& zeros_path = "", std::size_t zero_count = 0,
                      const std::string& extra = "") {
    out << "# ovalprimes " << op::version << "\n";
    out << "# domain=" << dom.name() << "\n";
    if (!zeros_path.empty())
        out << "# zeros=" << zeros_path << " count=" << zero_count << "\n";
    if (!extra.empty()) out << "# " << extra << "\n";
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> rs;
    rs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double e = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        rs.push_back(lo * std::pow(hi / lo, e));
    }
    return rs;
}

struct PendingFigure {
    std::string title;
    std::vector<std::string> labels;
    std::vector<op::DensitySeries> series;
    std::vector<bool> dashed;
};

// Rescaled curve (u, A p(A u)), u in [-1,1], as plotted side by side for
// different domains.
std::vector<std::pair<double, double>> rescaled_curve(const op::DensitySeries& ds,
                                                      std::size_t points) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(points);
    const double a = ds.support_A;
    for (std::size_t i = 0; i < points; ++i) {
        const double u = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
        pts.emplace_back(u, a * op::density_eval(ds, a * u));
    }
    return pts;
}

void emit_figure(const PendingFigure& fig, const std::string& base, std::size_t points,
                 const std::string& zeros_path, std::size_t zero_count) {
    auto csv_label = [](std::string s) {  // domain labels may contain ','
        for (char& ch : s)
            if (ch == ',') ch = ';';
        return s;
    };
    auto csv = open_output(base + ".csv");
    csv << "# ovalprimes " << op::version << "\n";
    csv << "# figure=" << fig.title << " zeros=" << zeros_path << " count=" << zero_count << "\n";
    for (std::size_t c = 0; c < fig.series.size(); ++c)
        csv << "# curve " << fig.labels[c] << ": A=" << op::format_g17(fig.series[c].support_A)
            << " K=" << fig.series[c].K() << "\n";
    csv << "u";
    for (const auto& label : fig.labels) csv << ',' << csv_label(label);
    csv << '\n';

    std::vector<std::vector<std::pair<double, double>>> curves;
    for (const auto& ds : fig.series) curves.push_back(rescaled_curve(ds, points));
    for (std::size_t i = 0; i < points; ++i) {
        csv << op::format_g17(curves[0][i].first);
        for (const auto& c : curves) csv << ',' << op::format_g17(c[i].second);
        csv << '\n';
    }

    op::SvgPlot plot(800, 500, fig.title);
    const char* colors[] = {"#1f3b99", "#b22222", "#11701e"};
    for (std::size_t c = 0; c < curves.size(); ++c)
        plot.add_curve(fig.labels[c], curves[c], colors[c % 3], fig.dashed[c]);
    auto svg = open_output(base + ".svg");
    plot.write(svg);
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy +=(xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime lattice points in dilates of symmetric planar domains"};
    app.set_version_flag("--version", std::string(op::version));
    app.require_subcommand(1);

    std::string domain_text = "circle";
    std::string zeros_path;
    if (const char* env = std::getenv("OVALPRIMES_ZEROS")) zeros_path = env;
    std::size_t max_zeros = 0;  // 0 = all available
    std::string output;
    std::string sieve_cache;
    std::string format = "csv";
    std::string method_text = "auto";
    double r_value = 0.0, r_min = 0.0, r_max = 0.0;
    std::size_t samples = 200, k_max = 10000, points = 2001;
    double eps = 1e-12;

    auto add_domain = [&](CLI::App* cmd) {
        cmd->add_option("--domain", domain_text,
                        "circle | ellipse:a=<f>,b=<f> | cassini:alpha=<f>,beta=<f> | "
                        "superellipse:k=<int> | triangle");
    };
    auto add_zeros = [&](CLI::App* cmd) {
        cmd->add_option("--zeros", zeros_path, "zeros file, one ordinate per line")
            ->envname("OVALPRIMES_ZEROS");
        cmd->add_option("--max-zeros", max_zeros, "zeros to use (0 = all; fails if fewer)");
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", method_text, "auto | numeric | closed")
            ->check(CLI::IsMember({"auto", "numeric", "closed"}));
    };

    CLI::App* cmd_count = app.add_subcommand("count", "psi_Omega(R) and pi_Omega(R)");
    add_domain(cmd_count);
    cmd_count->add_option("--R", r_value, "dilation parameter")->required();
    cmd_count->add_option("--sieve-cache", sieve_cache, "binary Mangoldt table cache");

    CLI::App* cmd_rem = app.add_subcommand("remainder", "log-uniform samples of H_Omega");
    add_domain(cmd_rem);
    cmd_rem->add_option("--R-min", r_min)->required();
    cmd_rem->add_option("--R-max", r_max)->required();
    cmd_rem->add_option("--samples", samples, "grid size (default 200)");
    cmd_rem->add_option("--output", output)->required();
    cmd_rem->add_option("--sieve-cache", sieve_cache);

    CLI::App* cmd_mellin = app.add_subcommand("mellin", "amplitude/phase table over zeros");
    add_domain(cmd_mellin);
    add_zeros(cmd_mellin);
    add_method(cmd_mellin);
    cmd_mellin->add_option("--output", output)->required();

    CLI::App* cmd_expl = app.add_subcommand("explicit", "truncated explicit-formula remainder");
    add_domain(cmd_expl);
    add_zeros(cmd_expl);
    add_method(cmd_expl);
    cmd_expl->add_option("--R", r_value, "single evaluation point");
    cmd_expl->add_option("--R-min", r_min);
    cmd_expl->add_option("--R-max", r_max);
    cmd_expl->add_option("--samples", samples);
    cmd_expl->add_option("--output", output, "CSV destination (stdout if omitted)");

    CLI::App* cmd_density = app.add_subcommand("density", "limiting value density p(u)");
    add_domain(cmd_density);
    add_zeros(cmd_density);
    add_method(cmd_density);
    cmd_density->add_option("--K", k_max, "max Fourier coefficients (default 10000)");
    cmd_density->add_option("--eps", eps, "coefficient cutoff (default 1e-12)");
    cmd_density->add_option("--points", points, "grid size (default 2001)");
    cmd_density->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
    cmd_density->add_option("--output", output)->required();

    CLI::App* cmd_cmp = app.add_subcommand("compare", "empirical vs explicit remainder");
    add_domain(cmd_cmp);
    add_zeros(cmd_cmp);
    add_method(cmd_cmp);
    cmd_cmp->add_option("--R-min", r_min)->required();
    cmd_cmp->add_option("--R-max", r_max)->required();
    cmd_cmp->add_option("--samples", samples);
    cmd_cmp->add_option("--output", output)->required();
    cmd_cmp->add_option("--sieve-cache", sieve_cache);

    std::string figure_name;
    CLI::App* cmd_fig = app.add_subcommand("figure", "named density-figure presets");
    cmd_fig->add_option("--name", figure_name, "fig1 | fig2 | fig5")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig5"}));
    add_zeros(cmd_fig);
    cmd_fig->add_option("--points", points);
    cmd_fig->add_option("--output", output, "output base path (default: the figure name)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    auto to_method = [&]() {
        if (method_text == "numeric") return op::MellinMethod::numeric;
        if (method_text == "closed") return op::MellinMethod::closed_form;
        return op::MellinMethod::automatic;
    };

    try {
        if (*cmd_count) {
            const auto dom = parse_domain(domain_text);
            const auto table = table_for(dom, r_value, sieve_cache);
            const double psi = op::psi_omega(dom, r_value, table);
            std::cout << "domain = " << dom.name() << "\n";
            std::cout << "R = " << op::format_g17(r_value) << "\n";
            std::cout << "psi_omega = " << op::format_g17(psi) << "\n";
            std::cout << "pi_omega = " << op::pi_omega(dom, r_value, table) << "\n";
            std::cout << "H = " << op::format_g17(op::remainder_term(dom, r_value, table)) << "\n";
        } else if (*cmd_rem) {
            const auto dom = parse_domain(domain_text);
            const auto table = table_for(dom, r_max, sieve_cache);
            const auto rs = op::sample_remainder_log(dom, r_min, r_max, samples, table);
            auto out = open_output(output);
            write_provenance(out, dom, "", 0,
                             "sampling=log_uniform R_min=" + op::format_g17(r_min) +
                                 " R_max=" + op::format_g17(r_max) +
                                 " samples=" + std::to_string(samples));
            rs.write_csv(out);
        } else if (*cmd_mellin) {
            const auto dom = parse_domain(domain_text);
            const auto zeros = load_zeros_checked(zeros_path, max_zeros);
            auto out = open_output(output);
            write_provenance(out, dom, zeros_path, zeros.size());
            op::write_amplitude_csv(out, dom, zeros, to_method());
        } else if (*cmd_expl) {
            const auto dom = parse_domain(domain_text);
            const auto zeros = load_zeros_checked(zeros_path, max_zeros);
            const auto cs = op::build_cosine_sum(dom, zeros, to_method());
            std::vector<double> rs;
            if (cmd_expl->count("--R"))
                rs.push_back(r_value);
            else if (r_min > 0.0 && r_max > r_min)
                rs = log_grid(r_min, r_max, samples);
            else
                throw std::runtime_error("explicit: give --R or --R-min/--R-max");
            std::ofstream file;
            if (!output.empty()) file = open_output(output);
            std::ostream& out = output.empty() ? std::cout : file;
            write_provenance(out, dom, zeros_path, zeros.size(),
                             "T=" + op::format_g17(cs.truncation_T) +
                                 " A=" + op::format_g17(cs.amplitude_sum) +
                                 " tail_bound=" + op::format_g17(cs.tail_bound));
            out << "R,H_explicit\n";
            for (double r : rs)
                out << op::format_g17(r) << ',' << op::format_g17(op::h_cosine(cs, std::log(r)))
                    << '\n';
        } else if (*cmd_density) {
            const auto dom = parse_domain(domain_text);
            const auto zeros = load_zeros_checked(zeros_path, max_zeros);
            const auto cs = op::build_cosine_sum(dom, zeros, to_method());
            const auto ds = op::density_series(cs, k_max, eps);
            auto out = open_output(output);
            if (format == "svg") {
                op::SvgPlot plot(800, 500, "value distribution, " + dom.name());
                std::vector<std::pair<double, double>> pts;
                for (std::size_t i = 0; i < points; ++i) {
                    const double u = -ds.support_A + 2.0 * ds.support_A * static_cast<double>(i) /
                                                        static_cast<double>(points - 1);
                    pts.emplace_back(u, op::density_eval(ds, u));
                }
                plot.add_curve(dom.name(), pts, "#1f3b99", false);
                plot.write(out);
            } else {
                write_provenance(out, dom, zeros_path, zeros.size(),
                                 "A=" + op::format_g17(ds.support_A) +
                                     " K=" + std::to_string(ds.K()) +
                                     " tail_bound=" + op::format_g17(cs.tail_bound));
                out << "u,p\n";
                for (std::size_t i = 0; i < points; ++i) {
                    const double u = -ds.support_A + 2.0 * ds.support_A * static_cast<double>(i) /
                                                        static_cast<double>(points - 1);
                    out << op::format_g17(u) << ',' << op::format_g17(op::density_eval(ds, u))
                        << '\n';
                }
            }
        } else if (*cmd_cmp) {
            const auto dom = parse_domain(domain_text);
            const auto zeros = load_zeros_checked(zeros_path, max_zeros);
            const auto table = table_for(dom, r_max, sieve_cache);
            const auto cs = op::build_cosine_sum(dom, zeros, to_method());
            const auto grid = log_grid(r_min, r_max, samples);
            std::vector<double> emp, expl;
            for (double r : grid) {
                emp.push_back(op::remainder_term(dom, r, table));
                expl.push_back(op::h_cosine(cs, std::log(r)));
            }
            auto out = open_output(output);
            write_provenance(out, dom, zeros_path, zeros.size(),
                             "T=" + op::format_g17(cs.truncation_T) +
                                 " samples=" + std::to_string(grid.size()));
            out << "R,H_empirical,H_explicit\n";
            for (std::size_t i = 0; i < grid.size(); ++i)
                out << op::format_g17(grid[i]) << ',' << op::format_g17(emp[i]) << ','
                    << op::format_g17(expl[i]) << '\n';
            double mean_abs = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i) mean_abs += std::fabs(emp[i] - expl[i]);
            mean_abs /= static_cast<double>(grid.size());
            std::cout << "pearson_r = " << op::format_g17(pearson(emp, expl)) << "\n";
            std::cout << "mean_abs_diff = " << op::format_g17(mean_abs) << "\n";
        } else if (*cmd_fig) {
            std::size_t want = max_zeros;
            if (want == 0) want = figure_name == "fig5" ? 1000 : 500;
            const auto zeros = load_zeros_checked(zeros_path, want);
            PendingFigure fig;
            auto add = [&](const op::DomainSpec& dom, bool dash) {
                const auto cs = op::build_cosine_sum(dom, zeros);
                fig.series.push_back(op::density_series(cs));
                fig.labels.push_back(dom.name());
                fig.dashed.push_back(dash);
            };
            if (figure_name == "fig1") {
                fig.title = "value distribution: circle vs ellipse b=0.65 (rescaled)";
                add(op::DomainSpec::circle(), true);
                add(op::DomainSpec::ellipse(1.0, 0.65), false);
            } else if (figure_name == "fig2") {
                fig.title = "value distribution: triangle (rescaled)";
                add(op::DomainSpec::triangle(), false);
            } else {
                fig.title = "value distribution: superellipse k=2, k=4 (rescaled)";
                add(op::DomainSpec::superellipse(2), true);
                add(op::DomainSpec::superellipse(4), false);
            }
            const std::string base = output.empty() ? figure_name : output;
            emit_figure(fig, base, points, zeros_path, zeros.size());
            std::cout << "wrote " << base << ".csv and " << base << ".svg\n";
        }
    } catch (const BadDomain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_domain;
    } catch (const op::load_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_zeros;
    } catch (const InsufficientZeros& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_insufficient_zeros;
    } catch (const SieveOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_sieve_overflow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
