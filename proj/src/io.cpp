#include "ribbonforge/io.hpp"

#include "ribbonforge/bounds.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

using nlohmann::json;

namespace {

json integer_json(const boost::multiprecision::mpz_int& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return json(z.convert_to<long long>());
    return json(z.str());
}

boost::multiprecision::mpz_int integer_from(const json& j) {
    if (j.is_number_integer()) return boost::multiprecision::mpz_int(j.get<long long>());
    if (j.is_string()) {
        try {
            return boost::multiprecision::mpz_int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Rational rational_from(const json& num, const json& den) {
    auto d = integer_from(den);
    if (d == 0) throw std::invalid_argument("zero denominator in diagram file");
    return Rational(integer_from(num), d);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::string diagram_to_json(const KnotDiagram& d) {
    json strands = json::array(), layers = json::array(), orientation = json::array();
    for (const Strand& s : d.strands) {
        json pts = json::array();
        for (const Point& p : s.vertices)
            pts.push_back({integer_json(numerator(p.x)), integer_json(denominator(p.x)), integer_json(numerator(p.y)),
                           integer_json(denominator(p.y))});
        strands.push_back(pts);
        layers.push_back(s.layers);
        orientation.push_back(s.reversed ? -1 : 1);
    }
    return json{{"strands", strands}, {"layers", layers}, {"orientation", orientation}}.dump();
}

KnotDiagram diagram_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("diagram file is not JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j["strands"].is_array())
        throw std::invalid_argument("diagram file needs a \"strands\" array");
    const json& strands = j["strands"];
    if (strands.empty()) throw std::invalid_argument("diagram has no strands");
    KnotDiagram d;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        Strand s;
        for (const json& p : strands[i]) {
            if (!p.is_array() || p.size() != 4) throw std::invalid_argument("a vertex is [x_num, x_den, y_num, y_den]");
            s.vertices.push_back({rational_from(p[0], p[1]), rational_from(p[2], p[3])});
        }
        if (j.contains("layers") && i < j["layers"].size()) {
            for (const json& l : j["layers"][i]) s.layers.push_back(l.get<int>());
        } else {
            s.layers.assign(s.vertices.size(), 0);
        }
        if (s.layers.size() != s.vertices.size())
            throw std::invalid_argument("strand " + std::to_string(i) + " needs one layer per edge");
        if (j.contains("orientation") && i < j["orientation"].size()) {
            int o = j["orientation"][i].get<int>();
            if (o != 1 && o != -1) throw std::invalid_argument("orientation entries are 1 or -1");
            s.reversed = o == -1;
        }
        d.strands.push_back(std::move(s));
    }
    validate(d);
    return d;
}

KnotDiagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return diagram_from_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

RunReport run_family(const FamilySpec& spec, const Rational& width, bool with_certification) {
    if (width <= 0) throw std::domain_error("width must be positive");
    RunReport rep;
    rep.spec = spec.str();
    rep.width = width;
    auto t0 = std::chrono::steady_clock::now();
    ConstructionResult c = generate(spec);
    KnotDiagram d = c.diagram();
    for (Strand& s : d.strands)
        for (Point& p : s.vertices) p = width * p;
    FoldedRibbon ribbon = build_ribbon(d, width, derive_folding(d));
    rep.generate_ms = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    rep.ribbonlength = ribbonlength(d, width);
    rep.ribbonlength_float = to_float(rep.ribbonlength);
    rep.sticks = stick_count(d);
    rep.components = static_cast<int>(d.strands.size());
    if (d.strands.size() == 1) rep.topology = ribbon_topology(d, ribbon.folding);
    rep.allowed = check_allowed(ribbon).verdict;
    rep.pd_crossings = static_cast<int>(extract_pd(d, {true}).size());
    if (c.pretzel_case) rep.pretzel_case = "case " + std::to_string(c.pretzel_case);
    rep.note = c.note;
    rep.check_ms = elapsed_ms(t0);

    if (with_certification) {
        t0 = std::chrono::steady_clock::now();
        Certification cert = certify(c);
        if (!cert.available) rep.certification = "skipped";
        else if (cert.match) rep.certification = cert.method + " match (" + cert.reference + ")";
        else rep.certification = "failed (" + cert.method + " vs " + cert.reference + ")";
        rep.certify_ms = elapsed_ms(t0);
    }
    return rep;
}

std::string report_json(const RunReport& r) {
    json j{{"spec", r.spec},
           {"width", r.width.str()},
           {"ribbonlength", {{"exact", r.ribbonlength.str()}, {"float", r.ribbonlength_float}}},
           {"sticks", r.sticks},
           {"pd_crossings", r.pd_crossings},
           {"components", r.components},
           {"topology", r.topology ? json(to_string(*r.topology)) : json(nullptr)},
           {"allowed", r.allowed},
           {"certification", r.certification},
           {"timings_ms", {{"generate", r.generate_ms}, {"check", r.check_ms}, {"certify", r.certify_ms}}}};
    if (!r.pretzel_case.empty()) j["pretzel_case"] = r.pretzel_case;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(2);
}

std::string report_text(const RunReport& r) {
    std::ostringstream os;
    os << "spec           " << r.spec << '\n'
       << "ribbonlength   " << r.ribbonlength.str() << " (" << std::setprecision(10) << r.ribbonlength_float
       << ") at width " << r.width.str() << '\n'
       << "sticks         " << r.sticks << '\n'
       << "pd crossings   " << r.pd_crossings << '\n'
       << "components     " << r.components << '\n'
       << "topology       " << (r.topology ? to_string(*r.topology) : "n/a") << '\n'
       << "allowed        " << (r.allowed ? "yes" : "no") << '\n'
       << "certification  " << r.certification << '\n';
    if (!r.pretzel_case.empty()) os << "pretzel        " << r.pretzel_case << '\n';
    if (!r.note.empty()) os << "note           " << r.note << '\n';
    return os.str();
}

// ---------------------------------------------------------------- SVG

namespace {

struct Canvas {
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    double scale = 80;
    double margin = 20;

    void add(Vec2 p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    // SVG y points down.
    std::string xy(Vec2 p) const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << margin + (p.x - min_x) * scale << ','
           << margin + (max_y - p.y) * scale;
        return os.str();
    }
    std::string text_at(Vec2 p) const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << "x=\"" << margin + (p.x - min_x) * scale << "\" y=\""
           << margin + (max_y - p.y) * scale << '"';
        return os.str();
    }
    std::string header() const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(0);
        double w = (max_x - min_x) * scale + 2 * margin, h = (max_y - min_y) * scale + 2 * margin;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
           << w << ' ' << h << "\">\n";
        return os.str();
    }
};

Vec2 shifted(Vec2 p, int layer, double explode) { return {p.x + explode * layer, p.y + explode * layer}; }

const char* fill_for(FaceKind k) { return k == FaceKind::trapezoid ? "#9ecae1" : "#fdae6b"; }

}  // namespace

std::string render_svg(const FoldedRibbon& r, const SvgOptions& opt) {
    if (opt.explode < 0) throw std::invalid_argument("explode must be non-negative");
    Canvas cv;
    cv.scale = opt.scale;
    for (const auto& f : r.faces)
        for (const auto& p : f.polygon) cv.add(shifted(p, f.layer, opt.explode));
    for (std::size_t s = 0; s < r.diagram.strands.size(); ++s) {
        const Strand& st = r.diagram.strands[s];
        for (std::size_t i = 0; i < st.size(); ++i) cv.add(shifted(to_vec(st.vertex(i)), st.layers[i], opt.explode));
    }
    std::ostringstream os;
    os << cv.header();
    // Faces from the bottom layer up, so the drawing order matches the stacking.
    std::vector<const RibbonFace*> faces;
    for (const auto& f : r.faces) faces.push_back(&f);
    std::stable_sort(faces.begin(), faces.end(), [](auto* a, auto* b) { return a->layer < b->layer; });
    os << "<g id=\"faces\" stroke=\"#3182bd\" stroke-width=\"0.5\" fill-opacity=\"0.6\">\n";
    for (const RibbonFace* f : faces) {
        os << "<polygon class=\"" << to_string(f->kind) << "\" fill=\"" << fill_for(f->kind) << "\" points=\"";
        for (const auto& p : f->polygon) os << cv.xy(shifted(p, f->layer, opt.explode)) << ' ';
        os << "\"/>\n";
    }
    os << "</g>\n<g id=\"fold-lines\" stroke=\"#d62728\" stroke-width=\"1.5\">\n";
    for (const auto& fl : r.fold_lines) {
        int layer = std::max(fl.layer_in, fl.layer_out);
        os << "<polyline class=\"fold\" points=\"" << cv.xy(shifted(fl.line.a, layer, opt.explode)) << ' '
           << cv.xy(shifted(fl.line.b, layer, opt.explode)) << "\"/>\n";
    }
    os << "</g>\n<g id=\"centreline\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    for (const Strand& st : r.diagram.strands)
        for (std::size_t i = 0; i < st.size(); ++i) {
            Vec2 a = shifted(to_vec(st.vertex(i)), st.layers[i], opt.explode);
            Vec2 b = shifted(to_vec(st.vertex(i + 1)), st.layers[i], opt.explode);
            os << "<polyline class=\"stick\" points=\"" << cv.xy(a) << ' ' << cv.xy(b) << "\"/>\n";
        }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_svg(const HalfTwistPatch& h, const SvgOptions& opt) {
    if (opt.explode < 0) throw std::invalid_argument("explode must be non-negative");
    Canvas cv;
    cv.scale = opt.scale;
    struct Square {
        Vec2 centre;
        int layer;
    };
    std::vector<Square> squares;
    for (int s = 0; s < 2; ++s)
        for (std::size_t k = 0; k < h.layers[s].size(); ++k)
            squares.push_back({{0, 0}, h.layers[s][k]});
    for (const auto& sq : squares) {
        cv.add(shifted({sq.centre.x - 0.5, sq.centre.y - 0.5}, sq.layer, opt.explode));
        cv.add(shifted({sq.centre.x + 0.5, sq.centre.y + 0.5}, sq.layer, opt.explode));
    }
    for (const auto& e : h.ends) cv.add(to_vec(e.at + e.direction));
    std::ostringstream os;
    os << cv.header();
    std::stable_sort(squares.begin(), squares.end(), [](auto& a, auto& b) { return a.layer < b.layer; });
    os << "<g id=\"squares\" stroke=\"#3182bd\" fill=\"#9ecae1\" fill-opacity=\"0.6\">\n";
    for (const auto& sq : squares) {
        Vec2 c = shifted(sq.centre, sq.layer, opt.explode);
        os << "<polygon class=\"unit-square\" points=\"" << cv.xy({c.x - 0.5, c.y - 0.5}) << ' '
           << cv.xy({c.x + 0.5, c.y - 0.5}) << ' ' << cv.xy({c.x + 0.5, c.y + 0.5}) << ' '
           << cv.xy({c.x - 0.5, c.y + 0.5}) << "\"/>\n";
    }
    os << "</g>\n<g id=\"ends\" stroke=\"black\">\n";
    for (const auto& e : h.ends) {
        os << "<polyline class=\"end\" points=\"" << cv.xy(to_vec(e.at)) << ' ' << cv.xy(to_vec(e.at + e.direction))
           << "\"/>\n<text class=\"label\" " << cv.text_at(to_vec(e.at + e.direction)) << ">" << e.label
           << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace ribbonforge
