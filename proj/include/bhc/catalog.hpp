/**
 * Plain-text manifold records.
 *
 *     bhc-catalog 1
 *
 *     manifold CP2
 *       gram: 1
 *       h1: 0
 *       h1_mod2_rank: 0
 *       orientable: true
 *       spin: false
 *       simply_connected: true
 *       suspension_retracts: unknown
 *       summands:
 *       provenance: complex projective plane
 *     end
 *
 * gram rows are separated by ';' (empty for b_2 = 0); h1 uses the group
 * notation of parse_group; h1_mod2_rank defaults to the value H_1
 * determines. Lines starting with '#' are comments. docs/formats.md has
 * the full description.
 */
#ifndef BHC_CATALOG_HPP
#define BHC_CATALOG_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bhc/classify.hpp"

namespace bhc {

struct ManifoldRecord
{
    Manifold4Data data;
    std::string provenance;
};

/// Malformed or invalid record; the message names the record, the line and
/// the violated invariant.
class RecordError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int catalog_format_version = 1;

/// Parses every record; each is validated. Throws RecordError.
std::vector<ManifoldRecord> parse_catalog(std::istream& in, const std::string& origin = "<stream>");
std::vector<ManifoldRecord> parse_catalog(std::string_view text, const std::string& origin = "<string>");
std::vector<ManifoldRecord> load_catalog(const std::string& path);

/// The catalog shipped in data/catalog.txt.
const std::vector<ManifoldRecord>& builtin_catalog();

/// Canonical text of one record (no header).
std::string serialize_record(const ManifoldRecord& record);
/// Header plus records separated by blank lines.
std::string serialize_catalog(const std::vector<ManifoldRecord>& records);

/// "0 1; 1 0" -> 2x2 matrix; "" -> 0x0. Throws std::invalid_argument.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

/// "2 0" or "2, 0" or "(2, 0)" -> vector.
IntVector parse_vector(std::string_view text);

} // namespace bhc

#endif // BHC_CATALOG_HPP
