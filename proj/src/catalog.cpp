#include "bhc/catalog.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "bhc/builtin_catalog.hpp"

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

std::vector<std::string> tokens(std::string_view s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == ',' || c == '(' || c == ')' || c == '[' || c == ']') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool parse_bool(const std::string& v, const std::string& field)
{
    if (v == "true" || v == "yes")
        return true;
    if (v == "false" || v == "no")
        return false;
    throw std::invalid_argument(field + ": expected true or false, got '" + v + "'");
}

const char* const known_fields[] = {"gram", "h1", "h1_mod2_rank", "orientable", "spin", "simply_connected",
                                    "suspension_retracts", "summands", "provenance"};

bool is_known_field(const std::string& f)
{
    for (const char* k : known_fields)
        if (f == k)
            return true;
    return false;
}

struct PendingRecord
{
    std::string name;
    int line = 0;
    std::map<std::string, std::pair<std::string, int>> fields;  // value, line
};

ManifoldRecord build(const PendingRecord& p, const std::string& origin)
{
    const auto where = [&](int line) {
        return origin + ":" + std::to_string(line) + ": manifold '" + p.name + "': ";
    };
    const auto require = [&](const char* f) -> const std::pair<std::string, int>& {
        const auto it = p.fields.find(f);
        if (it == p.fields.end())
            throw RecordError(where(p.line) + "missing field '" + f + "'");
        return it->second;
    };
    const auto optional_field = [&](const char* f) -> std::optional<std::pair<std::string, int>> {
        const auto it = p.fields.find(f);
        if (it == p.fields.end())
            return std::nullopt;
        return it->second;
    };

    ManifoldRecord r;
    Manifold4Data& m = r.data;
    m.name = p.name;
    int line = p.line;
    try {
        const auto& gram = require("gram");
        line = gram.second;
        m.lattice = IntegralLattice(parse_matrix(gram.first));

        line = p.line;
        FgAbGroup h1;
        if (const auto f = optional_field("h1")) {
            line = f->second;
            h1 = parse_group(f->first);
        }
        m.h1_rank = h1.free_rank();
        m.h1_torsion = h1.torsion();
        std::size_t even = 0;
        for (const auto& t : m.h1_torsion)
            if (t % 2 == 0)
                ++even;
        m.h1_mod2_rank = m.h1_rank + even;
        if (const auto f = optional_field("h1_mod2_rank")) {
            line = f->second;
            const Integer v = parse_integer(f->first);
            if (v < 0)
                throw std::invalid_argument("h1_mod2_rank must be non-negative");
            m.h1_mod2_rank = static_cast<std::size_t>(v);
        }

        const auto& o = require("orientable");
        line = o.second;
        m.orientable = parse_bool(o.first, "orientable");
        const auto& s = require("spin");
        line = s.second;
        m.spin = parse_bool(s.first, "spin");
        const auto& sc = require("simply_connected");
        line = sc.second;
        m.simply_connected = parse_bool(sc.first, "simply_connected");

        if (const auto f = optional_field("suspension_retracts")) {
            line = f->second;
            if (f->first != "unknown" && !f->first.empty())
                m.suspension_retracts = parse_bool(f->first, "suspension_retracts");
        }
        if (const auto f = optional_field("summands")) {
            line = f->second;
            for (auto& t : tokens(f->first))
                m.summands.push_back(t);
        }
        if (const auto f = optional_field("provenance"))
            r.provenance = f->first;

        line = p.line;
        m.validate();
    } catch (const ValidationError& e) {
        throw RecordError(origin + ":" + std::to_string(line) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw RecordError(where(line) + e.what());
    }
    return r;
}

} // namespace

IntMatrix parse_matrix(std::string_view text)
{
    const std::string body = trim(text);
    if (body.empty())
        return IntMatrix(0, 0);
    std::vector<std::vector<Integer>> rows;
    std::size_t pos = 0;
    for (;;) {
        const auto semi = body.find(';', pos);
        const std::string row = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<Integer> values;
        for (const auto& t : tokens(row))
            values.push_back(parse_integer(t));
        if (values.empty())
            throw std::invalid_argument("empty matrix row in '" + body + "'");
        rows.push_back(std::move(values));
        if (semi == std::string::npos)
            break;
        pos = semi + 1;
    }
    const Index n = static_cast<Index>(rows.size());
    const Index cols = static_cast<Index>(rows.front().size());
    IntMatrix m(n, cols);
    for (Index i = 0; i < n; ++i) {
        if (static_cast<Index>(rows[i].size()) != cols)
            throw std::invalid_argument("matrix rows have different lengths in '" + body + "'");
        for (Index j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::string format_matrix(const IntMatrix& m)
{
    std::ostringstream os;
    for (Index i = 0; i < m.rows(); ++i) {
        if (i)
            os << "; ";
        for (Index j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
    }
    return os.str();
}

IntVector parse_vector(std::string_view text)
{
    const auto t = tokens(text);
    IntVector v(static_cast<Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        v(static_cast<Index>(i)) = parse_integer(t[i]);
    return v;
}

std::vector<ManifoldRecord> parse_catalog(std::istream& in, const std::string& origin)
{
    std::vector<ManifoldRecord> out;
    std::optional<PendingRecord> current;
    bool header_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#')
            continue;
        const auto where = origin + ":" + std::to_string(lineno) + ": ";
        if (!header_seen) {
            if (body != "bhc-catalog " + std::to_string(catalog_format_version))
                throw RecordError(where + "expected header 'bhc-catalog " + std::to_string(catalog_format_version)
                                  + "'");
            header_seen = true;
            continue;
        }
        if (!current) {
            if (body.rfind("manifold ", 0) != 0)
                throw RecordError(where + "expected 'manifold <name>'");
            PendingRecord p;
            p.name = trim(body.substr(9));
            p.line = lineno;
            if (p.name.empty())
                throw RecordError(where + "manifold record has no name");
            for (const auto& r : out)
                if (r.data.name == p.name)
                    throw RecordError(where + "duplicate manifold name '" + p.name + "'");
            current = std::move(p);
            continue;
        }
        if (body == "end") {
            out.push_back(build(*current, origin));
            current.reset();
            continue;
        }
        const auto colon = body.find(':');
        if (colon == std::string::npos)
            throw RecordError(where + "expected 'field: value' or 'end'");
        const std::string field = trim(body.substr(0, colon));
        if (!is_known_field(field))
            throw RecordError(where + "unknown field '" + field + "'");
        if (current->fields.count(field))
            throw RecordError(where + "field '" + field + "' given twice");
        current->fields[field] = {trim(body.substr(colon + 1)), lineno};
    }
    if (current)
        throw RecordError(origin + ": record '" + current->name + "' is missing 'end'");
    if (!header_seen)
        throw RecordError(origin + ": missing header 'bhc-catalog " + std::to_string(catalog_format_version) + "'");
    return out;
}

std::vector<ManifoldRecord> parse_catalog(std::string_view text, const std::string& origin)
{
    std::istringstream in{std::string(text)};
    return parse_catalog(in, origin);
}

std::vector<ManifoldRecord> load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw RecordError("cannot open catalog '" + path + "'");
    return parse_catalog(in, path);
}

const std::vector<ManifoldRecord>& builtin_catalog()
{
    static const std::vector<ManifoldRecord> catalog =
        parse_catalog(std::string_view(builtin_catalog_text), "builtin catalog.txt");
    return catalog;
}

std::string serialize_record(const ManifoldRecord& record)
{
    const Manifold4Data& m = record.data;
    std::ostringstream os;
    os << "manifold " << m.name << '\n';
    os << "  gram: " << format_matrix(m.lattice.gram()) << '\n';
    os << "  h1: " << m.h1().to_string() << '\n';
    os << "  h1_mod2_rank: " << m.h1_mod2_rank << '\n';
    os << "  orientable: " << (m.orientable ? "true" : "false") << '\n';
    os << "  spin: " << (m.spin ? "true" : "false") << '\n';
    os << "  simply_connected: " << (m.simply_connected ? "true" : "false") << '\n';
    os << "  suspension_retracts: "
       << (m.suspension_retracts ? (*m.suspension_retracts ? "true" : "false") : "unknown") << '\n';
    os << "  summands:";
    for (const auto& s : m.summands)
        os << ' ' << s;
    os << '\n';
    os << "  provenance: " << record.provenance << '\n';
    os << "end\n";
    return os.str();
}

std::string serialize_catalog(const std::vector<ManifoldRecord>& records)
{
    std::string out = "bhc-catalog " + std::to_string(catalog_format_version) + "\n";
    for (const auto& r : records)
        out += "\n" + serialize_record(r);
    return out;
}

} // namespace bhc
