/**
 * Tabulated homotopy and knot groups.
 *
 * Values live in a plain-text data file (data/tables.txt, compiled in as
 * the builtin table). One record per line:
 *
 *     key | free rank | torsion list | source
 *
 * with torsion written comma separated ("12", "2,2") or "-" when empty.
 * The first non-comment line must be "bhc-group-table 1".
 */
#ifndef BHC_TABLES_HPP
#define BHC_TABLES_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bhc/fg_ab_group.hpp"
#include "bhc/verdict.hpp"

namespace bhc {

struct GroupTableEntry
{
    std::string key;
    FgAbGroup value;
    std::string source;
};

/// Lookup of a key the table does not contain.
class NotTabulated : public std::out_of_range
{
public:
    explicit NotTabulated(const std::string& key)
        : std::out_of_range("not tabulated: " + key), key_(key)
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Malformed table file.
class TableFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class GroupTable
{
public:
    static constexpr int format_version = 1;

    GroupTable() = default;

    static GroupTable parse(std::istream& in, const std::string& origin = "<stream>");
    static GroupTable parse(std::string_view text, const std::string& origin = "<string>");
    static GroupTable load(const std::string& path);
    /// The table shipped with the library.
    static const GroupTable& builtin();

    /// Keys compare after dropping everything but letters and digits and
    /// case folding, so "pi4(G3,SO3)", "pi4 G3 SO3" and "PI4(g3,so3)"
    /// name the same entry.
    static std::string normalize_key(std::string_view key);

    const GroupTableEntry* find(std::string_view key) const;
    /// Throws NotTabulated.
    const GroupTableEntry& lookup(std::string_view key) const;

    const std::vector<GroupTableEntry>& entries() const { return entries_; }
    /// Adds or replaces; throws std::invalid_argument on an empty source.
    void insert(GroupTableEntry entry);

    void write(std::ostream& out) const;

private:
    std::vector<GroupTableEntry> entries_;
};

/**
 * Whether the suspension pi_{n+2}(S^2) -> pi_n^S fails to be injective,
 * which forces E^{n+3}(S^n) to act nontrivially on E^{n+3}(N) for every
 * homology n-sphere N. Yes for 3 <= n <= 19 except n in {6, 7, 9, 15}, No
 * on that exception set (the criterion says nothing there), Undetermined
 * above 19. Throws std::invalid_argument for n < 3.
 */
Judgement nontrivial_action_criterion(int n);

} // namespace bhc

#endif // BHC_TABLES_HPP
