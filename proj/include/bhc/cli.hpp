/**
 * The commands behind the bhclass executable, as library functions that
 * return the rendered report and an exit status. Every report is built
 * once as a structured document and rendered either as indented text or
 * as JSON (schema "bhc-report/1"), so both formats carry the same content.
 */
#ifndef BHC_CLI_HPP
#define BHC_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "bhc/catalog.hpp"
#include "bhc/tables.hpp"

namespace bhc::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_invalid_input = 2,
    exit_unsupported = 3,
    exit_internal = 4,
};

enum class Format
{
    Text,
    Machine,
};

inline constexpr const char* report_schema = "bhc-report/1";
inline constexpr int default_bound = 10;

struct CommandResult
{
    int status = exit_ok;
    std::string out;
    std::string err;
};

struct ClassifyOptions
{
    Integer bound = default_bound;
    std::optional<IntVector> per_class;
    Format format = Format::Text;
    std::size_t candidate_limit = default_candidate_limit;
    /// Records classified concurrently; output order is input order.
    unsigned jobs = 1;
};

CommandResult cmd_classify(const std::vector<ManifoldRecord>& records, const ClassifyOptions& options);

struct BhImageOptions
{
    Integer bound = default_bound;
    /// Square of the enumerated classes; the signature when empty.
    std::optional<Integer> target;
    /// Negate the form (and hence the default target).
    bool reverse_orientation = false;
    Format format = Format::Text;
    std::size_t candidate_limit = default_candidate_limit;
};

CommandResult cmd_bh_image(const std::vector<ManifoldRecord>& records, const BhImageOptions& options);
/// The same for a bare Gram matrix.
CommandResult cmd_bh_image(const IntegralLattice& lattice, const BhImageOptions& options);

CommandResult cmd_pi3(const IntVector& attaching, Format format);

CommandResult cmd_embed6(const std::vector<ManifoldRecord>& records, Format format);

/// query: a table key ("E7 S4", "pi4(G3,SO3)"), "list", or
/// "action-criterion <n>".
CommandResult cmd_tables(const GroupTable& table, const std::vector<std::string>& query, Format format);

/// space: S2, CPinf, pt, S<k>, CP<n>.
CommandResult cmd_ahss(const GroupTable& table, const std::string& space, int degree, Format format);

} // namespace bhc::cli

#endif // BHC_CLI_HPP
