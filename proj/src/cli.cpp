#include "bhc/cli.hpp"

#include <future>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "bhc/ahss.hpp"
#include "bhc/complement.hpp"

namespace bhc::cli {

using Json = nlohmann::ordered_json;

namespace {

Json json_int(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json json_vector(const IntVector& v)
{
    Json a = Json::array();
    for (Index i = 0; i < v.size(); ++i)
        a.push_back(json_int(v(i)));
    return a;
}

Json json_group(const FgAbGroup& g)
{
    Json t = Json::array();
    for (const auto& d : g.torsion())
        t.push_back(json_int(d));
    return Json{{"group", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", t}};
}

Json json_judgement(const Judgement& j)
{
    return Json{{"verdict", to_string(j.verdict)}, {"reason", j.reason}};
}

bool is_scalar(const Json& j)
{
    return !j.is_object() && !j.is_array();
}

std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

bool inline_array(const Json& j)
{
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (!is_scalar(e) && !(e.is_array() && inline_array(e)))
            return false;
    return true;
}

std::string inline_text(const Json& j)
{
    if (!j.is_array())
        return scalar_text(j);
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? ", " : "") + inline_text(j[i]);
    return s + ")";
}

void render_text(const Json& j, int indent, std::ostringstream& os)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value))
                os << pad << key << ": " << scalar_text(value) << '\n';
            else if (inline_array(value) && inline_text(value).size() <= 80)
                os << pad << key << ": " << (value.empty() ? "(none)" : inline_text(value)) << '\n';
            else {
                os << pad << key << ":" << (value.empty() ? " (none)" : "") << '\n';
                render_text(value, indent + 2, os);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_scalar(e) || inline_array(e))
                os << pad << "- " << inline_text(e) << '\n';
            else {
                os << pad << "-\n";
                render_text(e, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

std::string render(const Json& doc, Format format)
{
    if (format == Format::Machine)
        return doc.dump(2) + "\n";
    std::ostringstream os;
    render_text(doc, 0, os);
    return os.str();
}

Json header(const char* command)
{
    return Json{{"schema", report_schema}, {"command", command}};
}

Json enumeration_json(const CharacteristicEnumeration& e)
{
    Json classes = Json::array();
    for (const auto& x : e.classes)
        classes.push_back(json_vector(x));
    std::size_t primitive = 0;
    for (const auto& x : e.classes)
        if (is_primitive(x))
            ++primitive;
    Json j{{"target_square", json_int(e.target)},
           {"bound", json_int(e.bound)},
           {"finiteness", to_string(e.finiteness)},
           {"complete", e.finiteness == Finiteness::Finite}};
    j["search_skipped"] = e.search_skipped;
    if (e.search_skipped)
        j["box_candidates"] = json_int(e.box_candidates);
    j["count"] = e.classes.size();
    j["primitive_count"] = primitive;
    j["classes"] = classes;
    return j;
}

Json split_json(const HyperbolicSplit& s)
{
    Json j{{"status", to_string(s.status)}, {"blocks", s.blocks}, {"reason", s.reason}};
    if (s.status == HyperbolicSplit::Status::Split && s.transform.size() > 0) {
        Json cols = Json::array();
        for (Index c = 0; c < s.transform.cols(); ++c)
            cols.push_back(json_vector(s.transform.col(c)));
        j["basis"] = cols;
    }
    return j;
}

Json r6_json(const R6Embedding& r)
{
    Json j = json_judgement(r.judgement);
    Json conds = Json::array();
    for (const auto& [name, v] : r.conditions)
        conds.push_back(Json{{"condition", name}, {"verdict", to_string(v)}});
    j["conditions"] = conds;
    if (r.certificate)
        j["hyperbolic_splitting"] = split_json(*r.certificate);
    return j;
}

Json knot_entry_json(const KnotTableEntry& e)
{
    Json j;
    if (!e.supported) {
        j["supported"] = false;
    } else if (std::holds_alternative<FgAbGroup>(e.value)) {
        j["value"] = std::get<FgAbGroup>(e.value).to_string();
    } else {
        j["cardinality"] = json_int(std::get<Integer>(e.value));
    }
    j["source"] = e.source;
    return j;
}

std::string count_summary(const std::string& name, const IsotopyCount& c)
{
    const std::string prefix = "E^7(" + name + "): ";
    switch (c.kind) {
    case IsotopyCount::Kind::Exact:
        return prefix + c.value.str() + " isotopy classes (exact)";
    case IsotopyCount::Kind::LowerBound:
        return prefix + "at least " + c.value.str() + " isotopy classes (infinite family within box)";
    case IsotopyCount::Kind::Undetermined:
        break;
    }
    return prefix + "number of isotopy classes not determined";
}

Json classify_one(const ManifoldRecord& rec, const ClassifyOptions& opt)
{
    const Manifold4Data& m = rec.data;
    Json j{{"name", m.name}, {"provenance", rec.provenance}, {"b2", m.lattice.rank()}, {"h1", m.h1().to_string()}};

    Json knots = Json::object();
    knots["E8"] = knot_entry_json(knot_table(8, 4, m));
    knots["E9_and_above"] = knot_entry_json(knot_table(9, 4, m));

    if (!m.orientable) {
        j["summary"] = "out of scope: N is non-orientable";
        j["embeds_r7"] = json_judgement(embeds_in_r7(m));
        j["hypotheses_failed"] = Json::array({"orientability (needed for the intersection form, the image formula "
                                              "and the triviality theorem)"});
        j["knot_tables"] = knots;
        return j;
    }

    const ClassificationReport r = classify_r7(m, opt.bound, opt.candidate_limit);
    j["signature"] = r.signature;
    j["summary"] = count_summary(m.name, r.isotopy_classes) + (r.triviality.yes() ? "" : "; triviality theorem not "
                                                                                         "applicable: "
                                                                                         + r.triviality.reason);
    j["embeds_r7"] = json_judgement(r.embeds_r7);
    j["embeds_r6"] = r6_json(r.embeds_r6);
    Json triv = json_judgement(r.triviality);
    j["triviality_theorem"] = triv;
    j["bh_image"] = enumeration_json(r.bh_classes);
    j["isotopy_classes"] = Json{{"kind", to_string(r.isotopy_classes.kind)},
                                {"count", r.isotopy_classes.kind == IsotopyCount::Kind::Undetermined
                                              ? Json(nullptr)
                                              : json_int(r.isotopy_classes.value)},
                                {"note", r.isotopy_classes.note}};
    j["action_trivial"] = json_judgement(action_trivial(m));
    j["suspension_retracts"] = json_judgement(suspension_retracts(m));
    j["action_effective"] = json_judgement(action_effective(m));

    if (opt.per_class) {
        const IntVector& x = *opt.per_class;
        Json pc{{"class", json_vector(x)}};
        if (x.size() != m.lattice.rank()) {
            pc["skipped"] = "class has " + std::to_string(x.size()) + " coordinates, b_2 = "
                            + std::to_string(m.lattice.rank());
        } else {
            pc["in_image"] = is_characteristic(m.lattice, x) && m.lattice.square(x) == Integer(r.signature);
            pc["divisibility"] = json_int(divisibility(x));
            pc["pi3_complement"] = pi3_of(ComplementModel{x}).to_string();
            pc["action_trivial"] = json_judgement(action_trivial(m, x));
            pc["compressible"] = json_judgement(compressible(m, x));
        }
        j["per_class"] = pc;
    }
    j["knot_tables"] = knots;
    Json notes = Json::array();
    for (const auto& n : r.notes)
        notes.push_back(n);
    j["notes"] = notes;
    return j;
}

template <class F>
CommandResult guarded(F&& body)
{
    CommandResult res;
    try {
        res = body();
    } catch (const RecordError& e) {
        res = {exit_invalid_input, "", std::string("error: ") + e.what() + "\n"};
    } catch (const ValidationError& e) {
        res = {exit_invalid_input, "", std::string("error: ") + e.what() + "\n"};
    } catch (const NotTabulated& e) {
        res = {exit_unsupported, "", std::string("error: ") + e.what() + "\n"};
    } catch (const UnsupportedSpace& e) {
        res = {exit_unsupported, "", std::string("unsupported: ") + e.what() + "\n"};
    } catch (const OutOfScope& e) {
        res = {exit_unsupported, "", std::string("out of scope: ") + e.what() + "\n"};
    } catch (const DegenerateFormError& e) {
        res = {exit_invalid_input, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        // invalid_argument and domain_error derive from logic_error too;
        // they are input problems, the rest are broken internal checks.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e))
            res = {exit_invalid_input, "", std::string("error: ") + e.what() + "\n"};
        else
            res = {exit_internal, "", std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        res = {exit_internal, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return res;
}

} // namespace

CommandResult cmd_classify(const std::vector<ManifoldRecord>& records, const ClassifyOptions& options)
{
    return guarded([&] {
        if (options.bound < 1)
            throw std::invalid_argument("--bound must be positive");
        std::vector<Json> sections(records.size());
        const unsigned jobs = std::max(1u, options.jobs);
        if (jobs == 1) {
            for (std::size_t i = 0; i < records.size(); ++i)
                sections[i] = classify_one(records[i], options);
        } else {
            for (std::size_t start = 0; start < records.size(); start += jobs) {
                std::vector<std::future<Json>> batch;
                for (std::size_t i = start; i < std::min(records.size(), start + jobs); ++i)
                    batch.push_back(std::async(std::launch::async, classify_one, std::cref(records[i]),
                                               std::cref(options)));
                for (std::size_t k = 0; k < batch.size(); ++k)
                    sections[start + k] = batch[k].get();
            }
        }
        Json doc = header("classify");
        doc["bound"] = json_int(options.bound);
        Json list = Json::array();
        for (auto& s : sections)
            list.push_back(std::move(s));
        doc["manifolds"] = list;
        return CommandResult{exit_ok, render(doc, options.format), ""};
    });
}

namespace {

Json bh_image_one(const std::string& name, const IntegralLattice& given, const BhImageOptions& opt)
{
    const IntegralLattice lattice = opt.reverse_orientation ? IntegralLattice(IntMatrix(-given.gram())) : given;
    const Index sigma = signature(lattice);
    const Integer target = opt.target ? *opt.target : Integer(sigma);
    const auto e = enumerate_characteristic(lattice, target, opt.bound, opt.candidate_limit);
    Json j{{"name", name}, {"signature", sigma}, {"orientation", opt.reverse_orientation ? "reversed" : "as given"}};
    j["enumeration"] = enumeration_json(e);
    return j;
}

} // namespace

CommandResult cmd_bh_image(const std::vector<ManifoldRecord>& records, const BhImageOptions& options)
{
    return guarded([&] {
        if (options.bound < 1)
            throw std::invalid_argument("--bound must be positive");
        Json doc = header("bh-image");
        Json list = Json::array();
        for (const auto& r : records) {
            if (!r.data.orientable)
                throw OutOfScope("'" + r.data.name + "' is non-orientable: no integral intersection form");
            list.push_back(bh_image_one(r.data.name, r.data.lattice, options));
        }
        doc["manifolds"] = list;
        return CommandResult{exit_ok, render(doc, options.format), ""};
    });
}

CommandResult cmd_bh_image(const IntegralLattice& lattice, const BhImageOptions& options)
{
    return guarded([&] {
        if (options.bound < 1)
            throw std::invalid_argument("--bound must be positive");
        Json doc = header("bh-image");
        doc["manifolds"] = Json::array({bh_image_one("gram", lattice, options)});
        return CommandResult{exit_ok, render(doc, options.format), ""};
    });
}

CommandResult cmd_pi3(const IntVector& attaching, Format format)
{
    return guarded([&] {
        const ComplementModel model{attaching};
        Json doc = header("pi3");
        doc["model"] = model.describe();
        doc["attaching"] = json_vector(attaching);
        Json h = Json::array();
        for (const auto& g : homology_of(model))
            h.push_back(g.to_string());
        doc["homology"] = h;
        doc["euler_characteristic"] = json_int(model.euler_characteristic());
        const FgAbGroup pi3 = pi3_of(model);
        const Integer d = divisibility(attaching);
        const bool agree = pi3 == FgAbGroup::cyclic(d);
        if (!agree)
            throw std::logic_error("internal: pi_3 by cokernel is " + pi3.to_string() + " but Z/d with d = "
                                   + d.str());
        doc["pi3"] = json_group(pi3);
        doc["divisibility"] = json_int(d);
        doc["paths_agree"] = agree;
        const auto wedge = wedge_form(model);
        doc["wedge"] = wedge ? Json(*wedge) : Json(nullptr);
        doc["pl_compressible"] = attaching.isZero();
        return CommandResult{exit_ok, render(doc, format), ""};
    });
}

CommandResult cmd_embed6(const std::vector<ManifoldRecord>& records, Format format)
{
    return guarded([&] {
        Json doc = header("embed6");
        Json list = Json::array();
        for (const auto& r : records) {
            Json j{{"name", r.data.name}};
            j["embeds_r6"] = r6_json(embeds_in_r6(r.data));
            j["triviality_theorem"] = json_judgement(triviality_applicable(r.data));
            list.push_back(j);
        }
        doc["manifolds"] = list;
        return CommandResult{exit_ok, render(doc, format), ""};
    });
}

CommandResult cmd_tables(const GroupTable& table, const std::vector<std::string>& query, Format format)
{
    return guarded([&] {
        if (query.empty())
            throw std::invalid_argument("tables: give a key, 'list', or 'action-criterion <n>'");
        Json doc = header("tables");
        const std::string head = GroupTable::normalize_key(query[0]);
        if (head == "list" && query.size() == 1) {
            Json list = Json::array();
            for (const auto& e : table.entries())
                list.push_back(Json{{"key", e.key}, {"value", e.value.to_string()}, {"source", e.source}});
            doc["entries"] = list;
        } else if (head == "actioncriterion") {
            if (query.size() != 2)
                throw std::invalid_argument("tables " + query[0] + ": expected one integer n");
            const Integer n = parse_integer(query[1]);
            if (n > 1000000 || n < -1000000)
                throw std::invalid_argument("n out of range");
            const Judgement j = nontrivial_action_criterion(static_cast<int>(n));
            doc["query"] = "nontrivial action criterion";
            doc["n"] = json_int(n);
            doc["holds"] = to_string(j.verdict);
            doc["reason"] = j.reason;
        } else {
            std::string key;
            for (const auto& q : query)
                key += (key.empty() ? "" : " ") + q;
            const auto& e = table.lookup(key);
            doc["key"] = e.key;
            doc["value"] = json_group(e.value);
            doc["source"] = e.source;
        }
        return CommandResult{exit_ok, render(doc, format), ""};
    });
}

namespace {

SpaceDescriptor parse_space(const std::string& text)
{
    const std::string s = GroupTable::normalize_key(text);
    if (s == "s2")
        return SpaceDescriptor::sphere(2);
    if (s == "cpinf" || s == "cpinfinity" || s == "cp")
        return SpaceDescriptor::complex_projective_infinite();
    if (s == "pt" || s == "point")
        return SpaceDescriptor::point();
    try {
        if (s.size() > 1 && s[0] == 's')
            return SpaceDescriptor::sphere(std::stoi(s.substr(1)));
        if (s.size() > 2 && s.rfind("cp", 0) == 0)
            return SpaceDescriptor::complex_projective(std::stoi(s.substr(2)));
    } catch (const std::logic_error&) {
    }
    throw UnsupportedSpace("unsupported space '" + text + "' (use S2, CPinf, pt, S<k> or CP<n>)");
}

std::string entry_name(int i, int j)
{
    return "E2_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

} // namespace

CommandResult cmd_ahss(const GroupTable& table, const std::string& space, int degree, Format format)
{
    return guarded([&] {
        const SpaceDescriptor x = parse_space(space);
        if (degree < 0 || degree > max_total_degree)
            throw UnsupportedSpace("degree " + std::to_string(degree) + " exceeds the supported window 0.."
                                   + std::to_string(max_total_degree));
        const CoefficientRow row = CoefficientRow::from_table(table, "Omega", "(BO<5>)");
        const AHSSPage page = e2_page(x, row, degree);

        Json doc = header("ahss");
        doc["space"] = x.name();
        doc["coefficients"] = row.name;
        doc["degree"] = degree;
        Json line = Json::object();
        for (int j = 0; j <= std::min(degree, 7); ++j)
            line[entry_name(degree - j, j)] = page.at(degree - j, j).to_string();
        doc["e2_line"] = line;

        const bool analysable = degree == 7 && (x.name() == "S^2" || x.name() == "CP^inf");
        if (analysable) {
            const Degree7Analysis a = degree7_after_known_differentials(x, row);
            Json d = Json::array();
            for (const auto& s : a.differentials)
                d.push_back(s);
            doc["differentials"] = d;
            doc["upper_bound"] = a.upper_bound.to_string();
            doc["vanishes"] = a.vanishes;
            doc["conclusion"] = a.conclusion;
            Json notes = Json::array();
            for (const auto& n : a.notes)
                notes.push_back(n);
            doc["notes"] = notes;
        } else {
            Json nontrivial = Json::array();
            for (const auto& [i, j] : page.nontrivial_on_line(degree))
                nontrivial.push_back(entry_name(i, j) + " = " + page.at(i, j).to_string());
            doc["nontrivial"] = nontrivial;
            doc["conclusion"] = nontrivial.empty()
                                    ? "Omega_" + std::to_string(degree) + "(" + x.name() + " x BO<5>) = 0"
                                    : "E2 page only; differentials are modeled for degree 7 over S2 and CPinf";
        }
        return CommandResult{exit_ok, render(doc, format), ""};
    });
}

} // namespace bhc::cli
