#include "bhc/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bhc/builtin_tables.hpp"

namespace bhc {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;) {
        const auto next = s.find(sep, pos);
        parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return parts;
}

} // namespace

std::string GroupTable::normalize_key(std::string_view key)
{
    std::string out;
    for (char c : key)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

GroupTable GroupTable::parse(std::istream& in, const std::string& origin)
{
    GroupTable table;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#')
            continue;
        const auto where = origin + ":" + std::to_string(lineno) + ": ";
        if (!header_seen) {
            if (body != "bhc-group-table " + std::to_string(format_version))
                throw TableFormatError(where + "expected header 'bhc-group-table "
                                       + std::to_string(format_version) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = split(body, '|');
        if (fields.size() != 4)
            throw TableFormatError(where + "expected 'key | free rank | torsion | source'");
        GroupTableEntry e;
        e.key = fields[0];
        if (e.key.empty())
            throw TableFormatError(where + "empty key");
        std::size_t free_rank = 0;
        try {
            const Integer r = parse_integer(fields[1]);
            if (r < 0)
                throw std::invalid_argument("negative");
            free_rank = static_cast<std::size_t>(r);
        } catch (const std::invalid_argument&) {
            throw TableFormatError(where + "bad free rank '" + fields[1] + "'");
        }
        std::vector<Integer> torsion;
        if (fields[2] != "-") {
            for (const auto& t : split(fields[2], ',')) {
                try {
                    torsion.push_back(parse_integer(t));
                } catch (const std::invalid_argument&) {
                    throw TableFormatError(where + "bad torsion entry '" + t + "'");
                }
                if (torsion.back() < 2)
                    throw TableFormatError(where + "torsion entries must be >= 2");
            }
        }
        e.value = FgAbGroup(free_rank, std::span<const Integer>(torsion));
        e.source = fields[3];
        if (e.source.empty())
            throw TableFormatError(where + "entry '" + e.key + "' has no source");
        if (table.find(e.key))
            throw TableFormatError(where + "duplicate key '" + e.key + "'");
        table.entries_.push_back(std::move(e));
    }
    if (!header_seen)
        throw TableFormatError(origin + ": missing header");
    return table;
}

GroupTable GroupTable::parse(std::string_view text, const std::string& origin)
{
    std::istringstream in{std::string(text)};
    return parse(in, origin);
}

GroupTable GroupTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw TableFormatError("cannot open table file '" + path + "'");
    return parse(in, path);
}

const GroupTable& GroupTable::builtin()
{
    static const GroupTable table = parse(std::string_view(builtin_group_table_text), "builtin tables.txt");
    return table;
}

const GroupTableEntry* GroupTable::find(std::string_view key) const
{
    const std::string k = normalize_key(key);
    for (const auto& e : entries_)
        if (normalize_key(e.key) == k)
            return &e;
    return nullptr;
}

const GroupTableEntry& GroupTable::lookup(std::string_view key) const
{
    if (const auto* e = find(key))
        return *e;
    throw NotTabulated(std::string(key));
}

void GroupTable::insert(GroupTableEntry entry)
{
    if (trim(entry.source).empty())
        throw std::invalid_argument("table entry '" + entry.key + "' needs a source");
    const std::string k = normalize_key(entry.key);
    for (auto& e : entries_)
        if (normalize_key(e.key) == k) {
            e = std::move(entry);
            return;
        }
    entries_.push_back(std::move(entry));
}

void GroupTable::write(std::ostream& out) const
{
    out << "bhc-group-table " << format_version << '\n';
    for (const auto& e : entries_) {
        out << e.key << " | " << e.value.free_rank() << " | ";
        if (e.value.torsion().empty())
            out << '-';
        for (std::size_t i = 0; i < e.value.torsion().size(); ++i)
            out << (i ? "," : "") << e.value.torsion()[i];
        out << " | " << e.source << '\n';
    }
}

Judgement nontrivial_action_criterion(int n)
{
    if (n < 3)
        throw std::invalid_argument("homology sphere dimension must be >= 3, got " + std::to_string(n));
    // Range where non-injectivity of pi_{n+2}(S^2) -> pi_n^S is read off
    // Toda's tables.
    constexpr int last_known = 19;
    constexpr int exceptions[] = {6, 7, 9, 15};
    if (n > last_known)
        return {Verdict::Undetermined, "n > 19: outside the range of Toda's tables used for the criterion"};
    if (std::find(std::begin(exceptions), std::end(exceptions), n) != std::end(exceptions))
        return {Verdict::No,
                "n = " + std::to_string(n)
                    + " is in the exception set {6, 7, 9, 15}: the suspension pi_{n+2}(S^2) -> pi_n^S is "
                      "injective there [To62], so the criterion gives nothing"};
    return {Verdict::Yes, "n = " + std::to_string(n)
                              + " <= 19, not in {6, 7, 9, 15}: pi_{n+2}(S^2) -> pi_n^S is not injective [To62]"};
}

} // namespace bhc
