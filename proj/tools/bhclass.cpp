// bhclass: classification of embeddings of closed 4-manifolds in R^7 from
// intersection-form data. See README.md for the subcommands.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bhc/cli.hpp"

using namespace bhc;
using namespace bhc::cli;

namespace {

struct CommonFlags
{
    std::string format = "text";
    std::string catalog;
    std::string tables;
    std::vector<std::string> names;
    long long bound = default_bound;
};

Format format_of(const std::string& s)
{
    return s == "machine" ? Format::Machine : Format::Text;
}

void add_format(CLI::App* app, CommonFlags& f)
{
    app->add_option("--format", f.format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->default_val("text");
}

void add_catalog(CLI::App* app, CommonFlags& f)
{
    app->add_option("--catalog", f.catalog, "Catalog file (default: the builtin catalog)");
    app->add_option("--name", f.names, "Only the named records (repeatable)");
}

std::vector<ManifoldRecord> select(const CommonFlags& f)
{
    std::vector<ManifoldRecord> all = f.catalog.empty() ? builtin_catalog() : load_catalog(f.catalog);
    if (f.names.empty())
        return all;
    std::vector<ManifoldRecord> out;
    for (const auto& n : f.names) {
        bool found = false;
        for (const auto& r : all)
            if (r.data.name == n) {
                out.push_back(r);
                found = true;
            }
        if (!found)
            throw RecordError("no record named '" + n + "' in the catalog");
    }
    return out;
}

GroupTable table_of(const CommonFlags& f)
{
    return f.tables.empty() ? GroupTable::builtin() : GroupTable::load(f.tables);
}

int emit(const CommandResult& r)
{
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}

// Errors raised while loading inputs, before a command runs.
int input_error(const std::exception& e)
{
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid_input;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Embeddings of closed 4-manifolds in R^7: Boechat-Haefliger image, isotopy counts, "
                 "complement invariants and supporting tables"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string class_text;
    std::string gram_text;
    std::string target_text;
    bool reverse = false;
    unsigned jobs = 1;
    std::vector<std::string> query;
    std::string space;
    int degree = 7;

    auto* classify = app.add_subcommand("classify", "Full report per catalog record");
    add_catalog(classify, f);
    add_format(classify, f);
    classify->add_option("--bound", f.bound, "Box bound for the image enumeration")->default_val(default_bound);
    classify->add_option("--class", class_text, "Also report on this class x, e.g. \"1 0\"");
    classify->add_option("--jobs", jobs, "Records classified concurrently")->default_val(1)->check(CLI::Range(1, 64));

    auto* bh = app.add_subcommand("bh-image", "Characteristic classes x with x.x = target");
    add_catalog(bh, f);
    add_format(bh, f);
    bh->add_option("--bound", f.bound, "Box bound")->default_val(default_bound);
    bh->add_option("--gram", gram_text, "Gram matrix instead of a catalog, e.g. \"0 1; 1 0\"");
    bh->add_option("--target", target_text, "Target square (default: the signature)");
    bh->add_flag("--reverse-orientation", reverse, "Negate the form, and with it the default target");

    auto* pi3 = app.add_subcommand("pi3", "Complement model and pi_3 for an attaching vector");
    add_format(pi3, f);
    pi3->add_option("--class", class_text, "Attaching vector, e.g. \"2 4\"; empty for b_2 = 0");

    auto* embed6 = app.add_subcommand("embed6", "Embeddability in R^6 with the equivalent conditions");
    add_catalog(embed6, f);
    add_format(embed6, f);

    auto* tables = app.add_subcommand("tables", "Table lookup: a key, 'list', or 'action-criterion <n>'");
    add_format(tables, f);
    tables->add_option("--tables", f.tables, "Table file (default: the builtin table)");
    tables->add_option("query", query, "Key or query words")->required();

    auto* ahss = app.add_subcommand("ahss", "E2 line of Omega_*(X x BO<5>) and known differentials");
    add_format(ahss, f);
    ahss->add_option("--tables", f.tables, "Table file (default: the builtin table)");
    ahss->add_option("space", space, "S2, CPinf, pt, S<k> or CP<n>")->required();
    ahss->add_option("degree", degree, "Total degree")->default_val(7);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_input;
    }

    const Format fmt = format_of(f.format);
    try {
        if (*classify) {
            ClassifyOptions o;
            o.bound = f.bound;
            o.format = fmt;
            o.jobs = jobs;
            if (!class_text.empty())
                o.per_class = parse_vector(class_text);
            const auto records = select(f);
            return emit(cmd_classify(records, o));
        }
        if (*bh) {
            BhImageOptions o;
            o.bound = f.bound;
            o.format = fmt;
            o.reverse_orientation = reverse;
            if (!target_text.empty())
                o.target = parse_integer(target_text);
            if (!gram_text.empty()) {
                std::optional<IntegralLattice> l;
                try {
                    l.emplace(parse_matrix(gram_text));
                } catch (const std::invalid_argument& e) {
                    return input_error(e);
                }
                return emit(cmd_bh_image(*l, o));
            }
            return emit(cmd_bh_image(select(f), o));
        }
        if (*pi3)
            return emit(cmd_pi3(parse_vector(class_text), fmt));
        if (*embed6)
            return emit(cmd_embed6(select(f), fmt));
        if (*tables)
            return emit(cmd_tables(table_of(f), query, fmt));
        if (*ahss)
            return emit(cmd_ahss(table_of(f), space, degree, fmt));
    } catch (const RecordError& e) {
        return input_error(e);
    } catch (const TableFormatError& e) {
        return input_error(e);
    } catch (const std::invalid_argument& e) {
        return input_error(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}
