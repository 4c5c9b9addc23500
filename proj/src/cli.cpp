#include "bing/cli.hpp"

#include "bing/chart_dynamics.hpp"
#include "bing/groups.hpp"
#include "bing/homology.hpp"
#include "bing/presentation.hpp"
#include "bing/two_complex.hpp"
#include "bing/verdict.hpp"
#include "bing/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace bing::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitNumerical = 4;

std::string read_inline_or_file(const std::string& arg) {
    if (arg.empty() || arg[0] != '@')
        return arg;
    std::ifstream in(arg.substr(1));
    if (!in)
        throw std::invalid_argument("cannot read file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json make_report(const std::string& command, json inputs, json result) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"version", kVersion}};
}

void emit(std::ostream& out, const json& report, bool as_json, const std::string& text) {
    if (as_json)
        out << report.dump(2) << "\n";
    else
        out << text;
}

std::vector<std::int64_t> parse_factor_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size())
            throw std::invalid_argument("malformed integer list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

std::string chart_name(KPPoint::Chart c) {
    switch (c) {
        case KPPoint::Chart::Torus:
            return "Torus";
        case KPPoint::Chart::DiskA:
            return "DiskA";
        case KPPoint::Chart::DiskB:
            return "DiskB";
    }
    return "?";
}

// ---- subcommand bodies -------------------------------------------------

int cmd_snf(const std::string& matrix_arg, bool as_json, std::ostream& out) {
    IntMatrix m = matrix_from_json(json::parse(read_inline_or_file(matrix_arg)));
    auto snf = smith_normal_form(m);
    auto factors = invariant_factors(m);

    json fact_json = json::array();
    for (const auto& f : factors.nontrivial)
        fact_json.push_back(bigint_to_json(f));
    json result{{"U", matrix_to_json(snf.U)},
                {"D", matrix_to_json(snf.D)},
                {"V", matrix_to_json(snf.V)},
                {"invariant_factors",
                 json{{"nontrivial", fact_json},
                      {"unit_count", factors.unit_count},
                      {"zero_cols", factors.zero_cols}}},
                {"check",
                 json{{"umv_equals_d", snf.U * m * snf.V == snf.D},
                      {"det_u", bigint_to_json(determinant(snf.U))},
                      {"det_v", bigint_to_json(determinant(snf.V))}}}};

    std::ostringstream text;
    text << "D = " << snf.D.to_string() << "\n"
         << "U = " << snf.U.to_string() << "\n"
         << "V = " << snf.V.to_string() << "\n";
    emit(out, make_report("snf", json{{"matrix", matrix_to_json(m)}}, std::move(result)),
         as_json, text.str());
    return kExitOk;
}

int cmd_homology(const std::string& pres_arg, bool as_json, std::ostream& out) {
    Presentation p = parse_presentation(read_inline_or_file(pres_arg));
    TwoComplex x = standard_complex(p);
    HomologySummary h = homology(x);

    json result{{"presentation", print_presentation(p)},
                {"chi", euler_characteristic(x)},
                {"homology", homology_to_json(h)},
                {"rational_acyclic", rational_acyclicity(x)}};

    std::ostringstream text;
    text << print_presentation(p) << "\n"
         << "chi = " << euler_characteristic(x) << "\n"
         << "H0 = Z\n"
         << "H1 = ";
    bool first = true;
    for (std::size_t i = 0; i < h.h1_rank; ++i, first = false)
        text << (first ? "" : " + ") << "Z";
    for (const auto& t : h.h1_torsion) {
        text << (first ? "" : " + ") << "Z_" << t;
        first = false;
    }
    text << (first ? "0" : "") << "\nH2 = "
         << (h.h2_rank ? "Z^" + std::to_string(h.h2_rank) : "0") << "\n";
    emit(out, make_report("homology", json{{"presentation", print_presentation(p)}},
                          std::move(result)),
         as_json, text.str());
    return kExitOk;
}

int cmd_analyze(const std::string& pres_arg, const std::string& group_arg, bool as_json,
                std::ostream& out) {
    Presentation p = parse_presentation(read_inline_or_file(pres_arg));
    GroupSpec spec = group_spec_from_string(group_arg);
    Verdict v = analyze(p, spec);

    std::ostringstream text;
    text << "outcome: " << to_string(v.outcome) << "\n";
    for (const auto& s : v.certificate.steps)
        text << "  [" << s.theorem_ref << "] " << s.claim << "\n";
    emit(out,
         make_report("analyze",
                     json{{"presentation", print_presentation(p)}, {"group", group_arg}},
                     verdict_to_json(v)),
         as_json, text.str());
    return v.outcome == Outcome::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_classify(const std::string& factors_arg, bool as_json, std::ostream& out) {
    FiniteAbelianGroup g = canonicalize_abelian(parse_factor_list(factors_arg));
    if (g.factor_count() < 2)
        throw std::invalid_argument(
            "classification needs a noncyclic group (at least two invariant factors)");
    auto reps = browning_representatives(g);
    json pres = json::array();
    for (std::int64_t d : reps)
        pres.push_back(json{{"d", d}, {"text", print_presentation(build_Td(g.factors, d))}});

    GroupSpec spec = GroupSpec::make_abelian(g);
    json result{{"invariant_factors", g.factors},
                {"homotopy_type_count", browning_count(g)},
                {"representative_d", reps},
                {"presentations", pres},
                {"schur_multiplier", group_to_json(schur_multiplier_abelian(g))},
                {"deficiency_lower_bound", *deficiency_lower_bound(spec)}};

    std::ostringstream text;
    text << "homotopy types at minimum chi: " << browning_count(g) << "\n";
    for (const auto& row : pres)
        text << "  d = " << row.at("d").get<std::int64_t>() << ": "
             << row.at("text").get<std::string>() << "\n";
    emit(out, make_report("classify-abelian", json{{"factors", factors_arg}},
                          std::move(result)),
         as_json, text.str());
    return kExitOk;
}

int cmd_simulate_kp(int m, int n, std::size_t grid, bool as_json, std::ostream& out) {
    KPNielsenSummary s = kp_nielsen_summary(m, n, grid);
    bigint lambda =
        lefschetz_number(standard_complex(build_Rd(m, n, 1)), r1_selfmap_chain_data());

    json fps = json::array();
    for (const auto& p : s.fixed_points)
        fps.push_back(json{{"chart", chart_name(p.chart)},
                           {"x", p.x},
                           {"y", p.y},
                           {"residual", kp_residual(m, n, p)}});
    json idx = json::array();
    for (const auto& r : s.indices)
        idx.push_back(json{{"chart", chart_name(r.fixed_point.chart)},
                           {"index", r.index},
                           {"radius", r.radius},
                           {"samples", r.samples},
                           {"winding_defect", r.winding_defect}});
    json result{{"m", m},
                {"n", n},
                {"grid", grid},
                {"fixed_points", fps},
                {"index_reports", idx},
                {"seam_residual", s.seam_residual},
                {"path_check",
                 json{{"eq1_max_err", s.paths.eq1_max_err},
                      {"eq2_max_err", s.paths.eq2_max_err},
                      {"eq3_max_err", s.paths.eq3_max_err}}},
                {"classes", s.classes},
                {"class_index_sum", s.class_index_sum},
                {"lefschetz_chain", bigint_to_json(lambda)},
                {"nielsen_number", s.nielsen_number}};

    std::ostringstream text;
    text << "fixed points: " << s.fixed_points.size();
    for (const auto& r : s.indices)
        text << "  " << chart_name(r.fixed_point.chart) << "(0) index " << r.index;
    text << "\nindex sum = " << s.class_index_sum << " = Lefschetz " << lambda
         << ", N = " << s.nielsen_number << "\n";
    emit(out, make_report("simulate-kp", json{{"m", m}, {"n", n}, {"grid", grid}},
                          std::move(result)),
         as_json, text.str());
    return kExitOk;
}

int cmd_simulate_x(int l, int m, int n, std::size_t resolution, bool as_json,
                   std::ostream& out) {
    XNielsenSummary s = x_nielsen_summary(l, m, n, resolution);
    int chi_kp = euler_characteristic(standard_complex(build_triangle(l, m, n)));

    json comps = json::array();
    for (const auto& c : s.components)
        comps.push_back(json{{"component_id", c.component_id},
                             {"sampled_vertices", c.sampled_vertices},
                             {"sampled_edges", c.sampled_edges},
                             {"estimated_chi", c.estimated_chi}});
    json result{{"l", l},
                {"m", m},
                {"n", n},
                {"resolution", resolution},
                {"components", comps},
                {"component_indices", s.component_indices},
                {"nielsen_number", s.nielsen_number},
                {"index_hypotheses", s.index_hypotheses},
                {"chi_X", x_euler_characteristic()},
                {"chi_standard_complex", chi_kp},
                {"boundary_residual", x_boundary_residual(l, m, n, 1000)}};

    std::ostringstream text;
    text << "fixed set components: " << s.components.size() << "\n";
    for (const auto& c : s.components)
        text << "  component " << c.component_id << ": V = " << c.sampled_vertices
             << ", E = " << c.sampled_edges << ", chi = " << c.estimated_chi << "\n";
    text << "N = " << s.nielsen_number << ", chi(X) = " << x_euler_characteristic() << "\n";
    emit(out,
         make_report("simulate-x",
                     json{{"l", l}, {"m", m}, {"n", n}, {"resolution", resolution}},
                     std::move(result)),
         as_json, text.str());
    return kExitOk;
}

int cmd_catalog(bool as_json, std::ostream& out) {
    json entries = json::array();
    std::ostringstream text;
    for (const CatalogEntry& e : catalog_entries()) {
        json row{{"name", e.name},
                 {"family", e.family},
                 {"trivial_multiplier", e.trivial_multiplier},
                 {"covered_by_theorem_5_3", e.covered_by_theorem_5_3},
                 {"citation", e.citation}};
        if (e.has_triangle) {
            json tri = json::array();
            for (std::int64_t t : e.triangle)
                tri.push_back(t == 0 ? json("n") : json(t));
            row["triangle"] = std::move(tri);
        }
        entries.push_back(std::move(row));
        text << e.name << ": " << e.family
             << (e.trivial_multiplier ? " [trivial multiplier]" : "")
             << (e.covered_by_theorem_5_3 ? " [Thm 5.3]" : "") << "\n";
    }
    emit(out, make_report("catalog", json::object(), json{{"entries", std::move(entries)}}),
         as_json, text.str());
    return kExitOk;
}

}  // namespace

GroupSpec group_spec_from_string(const std::string& text) {
    if (text == "unknown")
        return GroupSpec::make_unknown();
    if (text.rfind("abelian:", 0) == 0)
        return GroupSpec::make_abelian(canonicalize_abelian(parse_factor_list(text.substr(8))));
    if (text.rfind("catalog:", 0) == 0) {
        std::string name = text.substr(8);
        catalog_lookup(name);  // validates
        return GroupSpec::make_catalog(name);
    }
    throw std::invalid_argument(
        "group must be 'abelian:<m1,m2,...>', 'catalog:<name>' or 'unknown'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bing-space obstruction checker for 2-complexes"};
    app.require_subcommand(1);

    std::string matrix_arg, pres_arg, group_arg = "unknown", factors_arg, format = "text";
    bool json_snf = false, json_hom = false, json_analyze = false, json_classify = false;
    bool json_kp = false, json_x = false, json_cat = false;
    int kp_m = 2, kp_n = 2, x_l = 2, x_m = 3, x_n = 4;
    std::size_t grid = 256, resolution = 256;

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", matrix_arg, "JSON 2-d array, inline or @file")->required();
    snf->add_flag("--json", json_snf, "emit a JSON report");

    auto* hom = app.add_subcommand("homology", "integral homology of a standard complex");
    hom->add_option("-p,--presentation", pres_arg, "presentation text, inline or @file")
        ->required();
    hom->add_flag("--json", json_hom, "emit a JSON report");

    auto* ana = app.add_subcommand("analyze", "Bing-space verdict with certificate");
    ana->add_option("-p,--presentation", pres_arg, "presentation text, inline or @file")
        ->required();
    ana->add_option("--group", group_arg, "abelian:<m1,...> | catalog:<name> | unknown");
    ana->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    ana->add_flag("--json", json_analyze, "shorthand for --format json");

    auto* cls = app.add_subcommand("classify-abelian",
                                   "minimal homotopy types for a finite abelian group");
    cls->add_option("--factors", factors_arg, "cyclic orders, e.g. 2,4,4")->required();
    cls->add_flag("--json", json_classify, "emit a JSON report");

    auto* skp = app.add_subcommand("simulate-kp",
                                   "fixed points, indices and Nielsen data of the torus model");
    skp->add_option("--m", kp_m, "order of the first generator")->required();
    skp->add_option("--n", kp_n, "order of the second generator")->required();
    skp->add_option("--grid", grid, "search grid per chart (default 256)");
    skp->add_flag("--json", json_kp, "emit a JSON report");

    auto* sx = app.add_subcommand("simulate-x",
                                  "fixed-set components of the triangle model X(l,m,n)");
    sx->add_option("--l", x_l, "degree of the first disk")->required();
    sx->add_option("--m", x_m, "degree of the second disk")->required();
    sx->add_option("--n", x_n, "degree of the third disk")->required();
    sx->add_option("--resolution", resolution, "samples per piece (default 256)");
    sx->add_flag("--json", json_x, "emit a JSON report");

    auto* cat = app.add_subcommand("catalog", "groups with known multiplier status");
    cat->add_flag("--json", json_cat, "emit a JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (snf->parsed())
            return cmd_snf(matrix_arg, json_snf, out);
        if (hom->parsed())
            return cmd_homology(pres_arg, json_hom, out);
        if (ana->parsed())
            return cmd_analyze(pres_arg, group_arg, json_analyze || format == "json", out);
        if (cls->parsed())
            return cmd_classify(factors_arg, json_classify, out);
        if (skp->parsed())
            return cmd_simulate_kp(kp_m, kp_n, grid, json_kp, out);
        if (sx->parsed())
            return cmd_simulate_x(x_l, x_m, x_n, resolution, json_x, out);
        if (cat->parsed())
            return cmd_catalog(json_cat, out);
    } catch (const NumericalCheckError& e) {
        err << "numerical check failed: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const json::exception& e) {
        err << "malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

namespace {

bool type_matches(const json& value, const std::string& type) {
    if (type == "object")
        return value.is_object();
    if (type == "array")
        return value.is_array();
    if (type == "string")
        return value.is_string();
    if (type == "integer")
        return value.is_number_integer();
    if (type == "number")
        return value.is_number();
    if (type == "boolean")
        return value.is_boolean();
    return false;
}

void validate_node(const json& value, const json& schema, const std::string& path,
                   std::vector<std::string>& errors) {
    if (schema.contains("type") && !type_matches(value, schema.at("type")))
        errors.push_back(path + ": expected " + schema.at("type").get<std::string>());
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& v : schema.at("enum"))
            hit = hit || v == value;
        if (!hit)
            errors.push_back(path + ": value not in enum");
    }
    if (schema.contains("required") && value.is_object())
        for (const auto& key : schema.at("required"))
            if (!value.contains(key.get<std::string>()))
                errors.push_back(path + ": missing required key '" +
                                 key.get<std::string>() + "'");
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema.at("properties").items())
            if (value.contains(key))
                validate_node(value.at(key), sub, path + "." + key, errors);
    if (schema.contains("items") && value.is_array())
        for (std::size_t i = 0; i < value.size(); ++i)
            validate_node(value.at(i), schema.at("items"),
                          path + "[" + std::to_string(i) + "]", errors);
}

}  // namespace

bool validate_report(const json& report, const json& schema,
                     std::vector<std::string>& errors) {
    validate_node(report, schema, "$", errors);
    if (report.contains("command") && report.contains("result") && schema.contains("$defs")) {
        const std::string cmd = report.at("command").get<std::string>();
        if (schema.at("$defs").contains(cmd))
            validate_node(report.at("result"), schema.at("$defs").at(cmd), "$.result",
                          errors);
        else
            errors.push_back("$.command: no result schema for '" + cmd + "'");
    }
    return errors.empty();
}

}  // namespace bing::cli
