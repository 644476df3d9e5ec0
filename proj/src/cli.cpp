#include "relthermo/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "relthermo/sweep.hpp"

namespace relthermo {

namespace {

const char* kUsage =
    "usage: thermo --model {kg-linear|dirac-exact|dirac-strong} [--a LIST] [--kg-a RATIO]\n"
    "              [--r RATIO] --mubar START:STOP:COUNT [--log] [--engine {direct|em|mellin}]\n"
    "              [--variant {published|rederived}] [--shift {ground|absolute}]\n"
    "              [--quantity {lnZ|F|U|S|C}] [--format {csv|plotdat}] [--out PATH]\n"
    "              [--precision N] [--config FILE] [--report]\n";

int emit_to_destination(const SweepConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << payload;
        if (!out) return 3;
        return 0;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) return 3;
    file << payload;
    file.flush();
    return file ? 0 : 3;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    SweepConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    }

    try {
        if (cfg.report) {
            std::string report = discrepancy_report(grid_points(cfg.grid), cfg.couplings);
            int rc = emit_to_destination(cfg, report, out);
            if (rc != 0) err << "error: cannot write report to '" << cfg.out_path << "'\n";
            return rc;
        }

        SweepResult result = run_sweep(cfg);
        for (const std::string& msg : result.row_errors)
            err << "row skipped: " << msg << "\n";
        if (result.rows.empty()) {
            err << "error: no sweep row could be evaluated\n";
            return 4;
        }

        std::ostringstream payload;
        if (cfg.format == OutputFormat::Csv)
            emit_csv(result, payload, cfg.precision);
        else
            emit_plotdat(result, payload, cfg.precision, cfg.quantity);

        int rc = emit_to_destination(cfg, payload.str(), out);
        if (rc != 0) {
            err << "error: cannot write output to '" << cfg.out_path << "'\n";
            return rc;
        }
        return result.row_errors.empty() ? 0 : 4;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace relthermo
