#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>
#include <utility>

#include "greenreg/errors.hpp"
#include "svg.hpp"

namespace greenreg::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view field, double& value) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (field.empty()) return false;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    return ec == std::errc() && end == field.data() + field.size() && std::isfinite(value);
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        body();
        return kSuccess;
    } catch (const SingularMatrixError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError("cannot open output file " + path.string());
    file << content;
    if (!file.flush()) throw ValidationError("failed writing output file " + path.string());
}

// Routes a finished result. Nothing is written until the whole result exists,
// so a failing command leaves the output path untouched.
void emit(const RunConfig& config, const std::string& text, const Plot* plot,
          std::ostream& out) {
    if (config.format == OutputFormat::svg) {
        if (plot == nullptr) throw ValidationError("this command has no SVG output");
        const std::string svg = render_svg(*plot);
        write_file(config.output_path, svg);
        out << text;
        return;
    }
    if (config.output_path.empty()) {
        out << text;
    } else {
        write_file(config.output_path, text);
    }
}

// Samples [0,1] at step delta, always ending exactly at 1.
std::vector<double> closed_grid(double delta) {
    const auto steps = static_cast<std::size_t>(std::ceil(1.0 / delta - 1e-9));
    std::vector<double> xs;
    xs.reserve(steps + 1);
    for (std::size_t i = 0; i < steps; ++i) xs.push_back(static_cast<double>(i) * delta);
    xs.push_back(1.0);
    return xs;
}

KernelParams kernel_for(const RunConfig& config) { return KernelParams(config.a); }

}  // namespace

void RunConfig::validate() const {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ValidationError("--a must be finite and >= 0");
    if (!(delta > 0.0 && delta <= 0.5)) throw ValidationError("--delta must lie in (0, 0.5]");
    if (queries) {
        if (queries->empty()) throw ValidationError("--queries must not be empty");
        for (double q : *queries) {
            if (!(q > 0.0 && q < 1.0)) {
                throw ValidationError("query " + format_number(q) + " is outside (0,1)");
            }
        }
    }
    if (format == OutputFormat::svg && output_path.empty()) {
        throw ValidationError("--format svg requires --out");
    }
}

SampleSet parse_samples(const std::string& text) {
    std::vector<std::pair<double, double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        view = trim(view);
        if (view.empty()) continue;
        if (rows.empty() && view == "x,y") continue;

        const auto comma = view.find(',');
        double x = 0.0;
        double y = 0.0;
        if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos ||
            !parse_double(view.substr(0, comma), x) || !parse_double(view.substr(comma + 1), y)) {
            throw ParseError(line_no, "expected two numeric fields \"x,y\", got \"" +
                                          std::string(view) + "\"");
        }
        rows.emplace_back(x, y);
    }
    if (rows.empty()) throw ValidationError("no data rows found");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<double> xi;
    std::vector<double> eta;
    for (const auto& [x, y] : rows) {
        xi.push_back(x);
        eta.push_back(y);
    }
    return SampleSet(std::move(xi), std::move(eta));
}

SampleSet load_samples(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot read data file " + path.string());
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_samples(buf.str());
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_prediction_csv(const Prediction& p) {
    std::string out = "x_star,mean,variance,std,band_lo,band_hi\n";
    for (std::size_t i = 0; i < p.x_star.size(); ++i) {
        out += format_number(p.x_star[i]) + ',' + format_number(p.mu[i]) + ',' +
               format_number(p.variance[i]) + ',' + format_number(p.std[i]) + ',' +
               format_number(p.band_lo[i]) + ',' + format_number(p.band_hi[i]) + '\n';
    }
    out += "# clamped=" + std::to_string(p.clamped_count) + '\n';
    return out;
}

std::string format_matrix(const DenseMatrix& m) {
    std::string out;
    char buf[40];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.3f", m(r, c));
            if (c > 0) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string format_density(const KernelParams& params, double y, const DensityStats& s) {
    std::string out;
    out += "a=" + format_number(params.a()) + '\n';
    out += "y=" + format_number(y) + '\n';
    out += "mean=" + format_number(s.mean) + '\n';
    out += "variance=" + format_number(s.variance) + '\n';
    out += "std=" + format_number(s.std) + '\n';
    out += "p_1s=" + format_number(s.p_1s) + '\n';
    out += "p_2s=" + format_number(s.p_2s) + '\n';
    return out;
}

int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const SampleSet samples = load_samples(config.data_path);
        const QueryGrid grid = config.queries ? QueryGrid(*config.queries, config.delta)
                                              : QueryGrid::uniform(config.delta);
        const Prediction p = predict(kernel_for(config), samples, grid);
        if (p.clamped_count > 0) {
            err << "warning: " << p.clamped_count << " negative predictive variance(s) clamped\n";
        }
        const Plot plot{p.x_star, p.mu, p.band_lo, p.band_hi, samples.xi(), samples.eta()};
        emit(config, format_prediction_csv(p), &plot, out);
    });
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const SampleSet samples = load_samples(config.data_path);
        emit(config, format_matrix(build_cov_matrix(kernel_for(config), samples)), nullptr, out);
    });
}

int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const KernelParams params = kernel_for(config);
        const DensityStats stats = density_stats(params, config.y);
        Plot plot;
        plot.xs = closed_grid(config.delta);
        for (double x : plot.xs) plot.line.push_back(normalized_green(params, x, config.y));
        emit(config, format_density(params, config.y, stats), &plot, out);
    });
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const SampleSet samples = load_samples(config.data_path);
        const KernelParams params = kernel_for(config);
        Plot plot;
        plot.xs = closed_grid(config.delta);
        std::string csv = "x,u\n";
        for (double x : plot.xs) {
            const double u = discretized_solution(params, samples, config.delta, x);
            plot.line.push_back(u);
            csv += format_number(x) + ',' + format_number(u) + '\n';
        }
        emit(config, csv, &plot, out);
    });
}

}  // namespace greenreg::cli
