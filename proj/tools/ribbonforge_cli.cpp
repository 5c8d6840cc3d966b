// Command-line front end.
//
// Exit codes: 0 ok, 1 I/O or internal error, 2 invalid input, 3 failed
// allowed-check (or no feasible width), 4 failed certification, 5 a claimed
// table inequality does not hold.

#include "ribbonforge/bounds.hpp"
#include "ribbonforge/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>

using namespace ribbonforge;

namespace {

enum Exit { kOk = 0, kError = 1, kInvalid = 2, kNotAllowed = 3, kNotCertified = 4, kClaimFails = 5 };

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FamilySpec parse_or_throw(const std::string& text) {
    try {
        return parse_family(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

Rational parse_width(const std::string& text) {
    Rational w;
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            w = Rational(boost::multiprecision::mpz_int(text.substr(0, slash)),
                         boost::multiprecision::mpz_int(text.substr(slash + 1)));
        } else {
            w = rational_from_double(std::stod(text));
        }
    } catch (const std::exception&) {
        throw InvalidInput("width must be a number or a fraction, got '" + text + "'");
    }
    if (w <= 0) throw InvalidInput("width must be positive");
    return w;
}

std::string file_stem(const FamilySpec& s) {
    std::string out = s.str();
    for (char& c : out)
        if (c == ':' || c == ',') c = '_';
    return out;
}

struct GenOptions {
    std::string spec;
    std::string width = "1";
    std::string out_dir;
    std::string format = "json";
    bool svg = false;
    double explode = 0;
};

int cmd_gen(const GenOptions& o) {
    FamilySpec spec = parse_or_throw(o.spec);
    if (spec.kind == FamilyKind::half_twists) throw InvalidInput("half twists are an open patch; use render");
    if (o.explode < 0) throw InvalidInput("--explode must be non-negative");
    Rational w = parse_width(o.width);
    RunReport rep = run_family(spec, w);
    std::string body = o.format == "text" ? report_text(rep) : report_json(rep) + "\n";
    std::cout << body;
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        std::string stem = (std::filesystem::path(o.out_dir) / file_stem(spec)).string();
        ConstructionResult c = generate(spec);
        write_text_file(stem + ".report.json", report_json(rep) + "\n");
        write_text_file(stem + ".pd", to_text(extract_pd(c.diagram(), {true})) + "\n");
        write_text_file(stem + ".diagram.json", diagram_to_json(c.diagram()) + "\n");
        if (o.svg) write_text_file(stem + ".svg", render_svg(c.ribbon, {o.explode}));
    }
    if (!rep.allowed) return kNotAllowed;
    if (rep.certification.rfind("failed", 0) == 0) return kNotCertified;
    return kOk;
}

int cmd_table(int q_max, const std::string& format) {
    if (q_max < 2) throw InvalidInput("table needs q_max >= 2");
    auto rows = comparison_table(q_max);
    if (format == "text") {
        std::cout << table_text(rows);
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"family", r.family},
                         {"params", r.params},
                         {"crossing_number", r.crossing_number},
                         {"our_bound", r.this_bound.str()},
                         {"prior_source", r.prior.source},
                         {"prior_value", r.prior.value},
                         {"holds", r.holds},
                         {"claimed", r.claimed}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << table_csv(rows);
    }
    for (const auto& r : rows)
        if (r.claimed && !r.holds) return kClaimFails;
    return kOk;
}

int cmd_render(const std::string& spec_text, const std::string& path, double explode, const std::string& width) {
    FamilySpec spec = parse_or_throw(spec_text);
    if (explode < 0) throw InvalidInput("--explode must be non-negative");
    SvgOptions opt{explode};
    std::string svg;
    if (spec.kind == FamilyKind::half_twists) {
        svg = render_svg(gen_half_twists(spec.params[0]), opt);
    } else {
        Rational w = parse_width(width);
        KnotDiagram d = generate(spec).diagram();
        for (Strand& s : d.strands)
            for (Point& p : s.vertices) p = w * p;
        svg = render_svg(build_ribbon(d, w, derive_folding(d)), opt);
    }
    write_text_file(path, svg);
    std::cerr << "wrote " << path << '\n';
    return kOk;
}

int cmd_maxwidth(const std::string& path, const std::string& format) {
    KnotDiagram d;
    try {
        d = read_diagram_file(path);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    FoldingInfo f = derive_folding(d);
    if (!is_regular(d)) {
        std::cerr << "diagram is not regular; no width search\n";
        return kNotAllowed;
    }
    WidthSearch ws = max_allowed_width(d, f);
    if (!(ws.w_star > 0)) {
        std::cerr << "no feasible width found\n";
        return kNotAllowed;
    }
    double rib = ribbonlength(d, ws.w_star);
    if (format == "json") {
        nlohmann::json trace = nlohmann::json::array();
        for (auto [w, ok] : ws.trace) trace.push_back({{"width", w}, {"feasible", ok}});
        std::cout << nlohmann::json{{"w_star", ws.w_star}, {"ribbonlength", rib}, {"trace", trace}}.dump(2) << '\n';
    } else {
        std::cout << std::setprecision(12) << "w*            " << ws.w_star << '\n'
                  << "ribbonlength  " << rib << '\n'
                  << "trace\n";
        for (auto [w, ok] : ws.trace) std::cout << "  " << w << (ok ? "  feasible\n" : "  infeasible\n");
    }
    return kOk;
}

int cmd_certify(const std::string& spec_text, const std::string& format) {
    FamilySpec spec = parse_or_throw(spec_text);
    if (spec.kind == FamilyKind::half_twists) throw InvalidInput("half twists have no knot type");
    Certification c = certify(generate(spec));
    if (format == "json") {
        std::cout << nlohmann::json{{"spec", spec.str()},
                                    {"method", c.method},
                                    {"reference", c.reference},
                                    {"match", c.match},
                                    {"generated", c.generated.str()},
                                    {"expected", c.expected.str()},
                                    {"generated_components", c.generated_components},
                                    {"expected_components", c.expected_components}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << spec.str() << ": " << (c.match ? "match" : "MISMATCH") << " by " << c.method << " against "
                  << c.reference << '\n'
                  << "  generated " << c.generated << '\n'
                  << "  expected  " << c.expected << '\n';
    }
    return c.match ? kOk : kNotCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Folded ribbon knot constructions: generate, check, certify, tabulate, render"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Generate a family instance and report on it");
    g->add_option("spec", gen.spec, "family spec, e.g. torus:3,2 or pretzel:3,-2,3")->required();
    g->add_option("--width", gen.width, "ribbon width (number or p/q)");
    g->add_option("--out", gen.out_dir, "directory for report, PD code, diagram and SVG");
    g->add_option("--format", gen.format, "report format")->check(CLI::IsMember({"json", "text"}));
    g->add_flag("--svg", gen.svg, "also write an SVG into --out");
    g->add_option("--explode", gen.explode, "layer offset for the SVG");

    int q_max = 0;
    std::string table_format = "csv";
    auto* t = app.add_subcommand("table", "Comparison of bounds as CSV");
    t->add_option("q_max", q_max, "largest q in the torus families")->required();
    t->add_option("--format", table_format)->check(CLI::IsMember({"csv", "text", "json"}));

    std::string render_spec, render_out, render_width = "1";
    double explode = 0;
    auto* r = app.add_subcommand("render", "Write an SVG of a construction");
    r->add_option("spec", render_spec)->required();
    r->add_option("svg_path", render_out, "SVG path");
    r->add_option("--out", render_out, "SVG path");
    r->add_option("--explode", explode, "offset per layer, so that stacks separate");
    r->add_option("--width", render_width);

    std::string mw_file, mw_format = "text";
    auto* m = app.add_subcommand("maxwidth", "Largest allowed width for a diagram file");
    m->add_option("file", mw_file)->required();
    m->add_option("--format", mw_format)->check(CLI::IsMember({"json", "text"}));

    std::string cert_spec, cert_format = "text";
    auto* c = app.add_subcommand("certify", "Compare a construction's invariant with the reference diagram");
    c->add_option("spec", cert_spec)->required();
    c->add_option("--format", cert_format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*t) return cmd_table(q_max, table_format);
        if (*r) {
            if (render_out.empty()) throw InvalidInput("render needs an output path");
            return cmd_render(render_spec, render_out, explode, render_width);
        }
        if (*m) return cmd_maxwidth(mw_file, mw_format);
        if (*c) return cmd_certify(cert_spec, cert_format);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
