#ifndef KNOTSURG_CLI_COMMANDS_HPP
#define KNOTSURG_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/report_json.hpp"

namespace knotsurg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;

/// Runs one invocation. `args` excludes the program name. The JSON envelope
/// goes to `out`; usage text and error messages go to `err`.
///
/// Exit status is 0 whenever a result was computed (HypothesesUnmet and
/// InsufficientData are results) and 2 on any input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TableRecord {
    std::size_t line = 0;
    std::string name;
    std::string alexander;
};

struct TableScan {
    std::vector<ReportEnvelope> results;
    std::vector<std::string> warnings;
};

/// Options shared by the per-record templates of scan-table.
struct ScanTemplate {
    std::string command = "knot-invariants";
    std::string coeff;        // check-t11
    std::string q;            // check-main1
    std::uint64_t d = 0;      // norm, norm-total
    unsigned jobs = 1;
};

/// Reads a JSON-lines knot table; malformed lines become warnings.
/// Throws ValidationError when the file cannot be opened.
std::vector<TableRecord> read_table(const std::string& path, std::vector<std::string>& warnings);

/// One envelope per valid record in input order; records that fail are
/// reported as warnings and skipped.
TableScan scan_table(const std::vector<TableRecord>& records, const ScanTemplate& tmpl);

} // namespace knotsurg::cli

#endif
