#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "greenreg/density.hpp"
#include "greenreg/regression.hpp"

namespace greenreg::cli {

enum class OutputFormat { csv, svg };

struct RunConfig {
    double a = 1.0;
    double delta = 0.01;
    std::filesystem::path data_path;
    std::optional<std::vector<double>> queries;
    // Empty means the text result goes to the caller's output stream.
    std::filesystem::path output_path;
    OutputFormat format = OutputFormat::csv;
    // Column of H examined by the density command.
    double y = 0.5;

    /// Throws ValidationError for out-of-range settings.
    void validate() const;
};

enum ExitStatus : int { kSuccess = 0, kInputError = 1, kNumericalError = 2 };

/// Reads "x,y" rows (optional "x,y" header, LF or CRLF) and sorts them by x.
SampleSet load_samples(const std::filesystem::path& path);
SampleSet parse_samples(const std::string& text);

/// Shortest round-trippable-enough rendering used in machine output (12 significant digits).
std::string format_number(double v);

std::string format_prediction_csv(const Prediction& prediction);
std::string format_matrix(const DenseMatrix& m);
std::string format_density(const KernelParams& params, double y, const DensityStats& stats);

// Each command writes its result per the routing in RunConfig and reports
// failures on `err`. The return value is an ExitStatus.
int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace greenreg::cli
