#ifndef RELTHERMO_SWEEP_HPP
#define RELTHERMO_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "relthermo/partition.hpp"
#include "relthermo/thermo.hpp"

namespace relthermo {

enum class GridSpacing { Linear, Log };
enum class OutputFormat { Csv, PlotDat };
enum class Quantity { LnZ, F, U, S, C };

struct MubarGrid {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    GridSpacing spacing = GridSpacing::Linear;
};

struct SweepConfig {
    SpectrumModel model;
    EngineSpec engine;
    ShiftPolicy shift = ShiftPolicy::GroundShifted;
    MubarGrid grid;
    std::vector<double> couplings; // Dirac a-values; for KG holds the single a ratio
    OutputFormat format = OutputFormat::Csv;
    Quantity quantity = Quantity::LnZ;
    std::string out_path; // empty = stdout
    int precision = 12;
    bool report = false;
};

// Parses CLI tokens (argv without the program name). A --config FILE is read
// as key=value lines ('#' comments allowed) whose keys mirror the flags;
// explicit flags override file values. Unknown keys are rejected.
// Throws UsageError naming the offending key.
SweepConfig parse_config(const std::vector<std::string>& args);

// key=value text -> equivalent flag tokens (exposed for tests).
std::vector<std::string> config_file_tokens(std::istream& text);

// The grid points in evaluation order.
std::vector<double> grid_points(const MubarGrid& grid);

// One engine evaluation composed through the generic thermal layer:
// lnZ from the engine, U and C by central differences with relative step
// kFdStepScale, S from the identity.
ThermoPoint thermo_point_from_engine(const SpectrumModel& model, double mubar,
                                     ShiftPolicy shift, const EngineSpec& engine);

struct SweepRow {
    double coupling;
    ThermoPoint point;
};

struct SweepResult {
    std::vector<SweepRow> rows;          // ordered by (coupling, mubar)
    std::vector<std::string> row_errors; // failed rows, in row order
    std::string model_name;
    std::string engine_name;
    std::string variant_name;
};

// Evaluates the grid for every coupling. Rows may be computed concurrently
// (workers = 0 picks a thread count automatically); results are placed by
// index so the output is identical for any worker count. Failing rows are
// skipped and reported in row_errors.
SweepResult run_sweep(const SweepConfig& config, unsigned workers = 0);

// Header `coupling,mubar,lnZ,Fbar,Ubar,Sbar,Cbar,engine,variant`, one line
// per row, reals in scientific notation with `precision` significant digits,
// trailing newline. Byte-identical across runs for identical input.
void emit_csv(const SweepResult& result, std::ostream& out, int precision);

// One `mubar value` block per coupling, blank-line separated, for direct use
// with plotting tools.
void emit_plotdat(const SweepResult& result, std::ostream& out, int precision,
                  Quantity quantity);

const char* quantity_name(Quantity q);

// Adjudication of the published-vs-rederived constants against the direct
// sum: the Klein-Gordon closed-form constant (probes at mubar >= 1), the
// strong-field leading coefficient (probes at mubar >= 5, one fit over all
// couplings), the high-temperature Dirac mean-energy slope, and the location
// of the entropy inflection of the Klein-Gordon family.
std::string discrepancy_report(const std::vector<double>& mubar_probes,
                               const std::vector<double>& couplings = {1.0, 0.5, 0.1});

} // namespace relthermo

#endif
