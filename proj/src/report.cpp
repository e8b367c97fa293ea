#include "newton/report.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "newton/parser.hpp"

namespace newton {

namespace {

using Json = nlohmann::ordered_json;

// Display hints for the roots of a rational polynomial (Durand-Kerner on doubles;
// purely cosmetic).
std::vector<std::string> approx_roots(const UniPoly& p) {
    std::vector<std::string> out;
    int n = p.degree();
    if (n < 1) return out;
    std::vector<std::complex<double>> c(n + 1), z(n);
    for (int i = 0; i <= n; ++i) {
        const AlgebraicScalar& a = p[i];
        c[i] = a.is_rational() ? a.rational().get_d() : 0.0;
    }
    for (int i = 0; i < n; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int iter = 0; iter < 200; ++iter) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = c[n];
            for (int k = n - 1; k >= 0; --k) num = num * z[i] + c[k];
            std::complex<double> den = c[n];
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            z[i] -= num / den;
        }
    }
    std::sort(z.begin(), z.end(), [](auto a, auto b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (const auto& r : z) {
        std::ostringstream os;
        os.precision(4);
        if (std::abs(r.imag()) < 1e-8)
            os << r.real();
        else
            os << r.real() << (r.imag() < 0 ? " - " : " + ") << std::abs(r.imag()) << "i";
        out.push_back(os.str());
    }
    return out;
}

std::string orbit_key(const ValueOrbit& o) {
    if (o.minpoly.degree() == 1) {
        AlgebraicScalar root = -o.minpoly[0];
        return root.to_string();
    }
    return "{c : " + o.minpoly.to_string() + " = 0}";
}

Json orbit_json(const ValueOrbit& o) {
    Json j;
    j["minpoly"] = o.minpoly.to_string();
    j["degree"] = o.minpoly.degree();
    j["provenance"] = o.provenance;
    bool rational_coeffs = true;
    for (const auto& c : o.minpoly.coeffs())
        if (!c.is_rational()) rational_coeffs = false;
    if (rational_coeffs) j["approx_roots"] = approx_roots(o.minpoly);
    return j;
}

Json tree_json(const NewtonTreeNode& node) {
    Json j;
    j["id"] = node.id;
    j["poly"] = node.poly.to_string();
    j["vars"] = node.poly.xvar() + "," + node.poly.yvar();
    if (node.base) {
        Json b;
        b["kind"] = node.base->kind == BaseCase::Kind::monomial ? "monomial" : "smooth-branch";
        b["M"] = node.base->M;
        b["m"] = node.base->m;
        if (node.base->kind == BaseCase::Kind::smooth_branch) b["q"] = node.base->q;
        j["base_case"] = b;
    }
    Json children = Json::array();
    for (const auto& e : node.children) {
        const Face& face = node.polygon.faces[e.face_index];
        Json c;
        c["face"] = std::to_string(e.p) + "a" + (e.q < 0 ? "" : "+") + std::to_string(e.q) +
                    "b=" + std::to_string(e.p * face.v0.first + e.q * face.v0.second);
        c["transform"] = e.at_infinity ? "infinity" : "local";
        c["factor"] = e.branch_factor.to_string();
        c["multiplicity"] = e.multiplicity;
        c["degree"] = e.degree;
        c["mu"] = e.mu.to_string();
        c["child"] = tree_json(*e.child);
        children.push_back(std::move(c));
    }
    if (!children.empty()) j["children"] = std::move(children);
    return j;
}

void svg_polygon(std::ostringstream& os, const NewtonPolygon& poly, double ox, double oy,
                 double scale, const std::string& color) {
    for (const auto& f : poly.faces) {
        double x0 = ox + scale * f.v0.first, y0 = oy - scale * f.v0.second;
        if (f.dim == 1) {
            double x1 = ox + scale * f.v1.first, y1 = oy - scale * f.v1.second;
            os << "<line x1='" << x0 << "' y1='" << y0 << "' x2='" << x1 << "' y2='" << y1
               << "' stroke='" << color << "' stroke-width='2'/>\n";
            double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
            double nx = f.p, ny = -static_cast<double>(f.q);
            double nn = std::sqrt(nx * nx + ny * ny);
            os << "<line x1='" << mx << "' y1='" << my << "' x2='" << mx + 12 * nx / nn
               << "' y2='" << my + 12 * ny / nn << "' stroke='" << color
               << "' stroke-dasharray='2,2'/>\n";
        } else {
            os << "<circle cx='" << x0 << "' cy='" << y0 << "' r='3' fill='" << color
               << "'/>\n";
        }
    }
}

}  // namespace

std::string polygon_svg(const LaurentPoly& f) {
    NewtonPolygon global = polygon_global(f);
    NewtonPolygon infin = polygon_infinity(f);
    Exp maxx = 1, maxy = 1;
    for (const auto& p : global.support) {
        maxx = std::max(maxx, p.first);
        maxy = std::max(maxy, p.second);
    }
    double scale = std::min(360.0 / (maxx + 2), 360.0 / (maxy + 2));
    double ox = 30, oy = 410;
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='440' height='440'>\n";
    os << "<rect width='440' height='440' fill='white'/>\n";
    os << "<line x1='" << ox << "' y1='" << oy << "' x2='430' y2='" << oy
       << "' stroke='#bbb'/>\n";
    os << "<line x1='" << ox << "' y1='" << oy << "' x2='" << ox << "' y2='10' stroke='#bbb'/>\n";
    svg_polygon(os, global, ox, oy, scale, "#1f77b4");
    svg_polygon(os, infin, ox, oy, scale, "#d62728");
    os << "</svg>\n";
    return os.str();
}

Report run_report(const LaurentPoly& f, const ReportOptions& options) {
    Report out;
    BifurcationReport rep = bifurcation_report(f);

    Json j;
    j["input"] = print_polynomial(f);
    j["chi_generic"] = rep.chi_generic;
    Json lambda = Json::object();
    for (const auto& cr : rep.candidates) lambda[orbit_key(cr.orbit)] = cr.lambda;
    // extra user-supplied candidate values
    std::vector<std::pair<std::string, long>> extra;
    for (const auto& text : options.extra_values) {
        LaurentPoly v = parse_polynomial(text);
        if (v.depends_on_x() || v.depends_on_y())
            throw precondition_error("--value must be a constant expression");
        AlgebraicScalar a = v.constant_coeff();
        long l = lambda_invariant(f, a);
        extra.push_back({a.to_string(), l});
        lambda[a.to_string()] = l;
    }
    j["lambda"] = std::move(lambda);
    Json bn = Json::array();
    for (const auto& o : rep.b_newton) bn.push_back(orbit_json(o));
    j["b_newton"] = std::move(bn);
    Json bt = Json::array();
    for (const auto& o : rep.b_top) bt.push_back(orbit_json(o));
    j["b_top"] = std::move(bt);
    j["motive_at_infinity"] = rep.motive_at_infinity.motive.to_string();
    j["chi_terms_at_infinity"] = rep.motive_at_infinity.chi_terms;
    j["isolated_singularities"] = rep.isolated;
    if (!rep.isolated) j["isolated_note"] = rep.isolated_note;
    j["lambda_total"] = rep.lambda_total;
    j["mu_derived"] = rep.mu_total;
    Json cons;
    cons["identity"] = "chi_generic = 1 - (mu + lambda)";
    cons["holds"] = rep.chi_generic == 1 - (rep.mu_total + rep.lambda_total);
    cons["generic_sentinel_value"] = rep.sentinel_value.get_str();
    cons["generic_sentinel_lambda_zero"] = rep.sentinel_ok;
    j["consistency"] = std::move(cons);
    if (options.include_motives) {
        Json m = Json::object();
        for (const auto& cr : rep.candidates)
            m[orbit_key(cr.orbit)] = cr.nearby.motive.to_string();
        j["nearby_motives"] = std::move(m);
    }
    if (options.include_tree) {
        NewtonTree tree = newton_algorithm_infinity(f);
        j["tree"] = tree_json(*tree.root);
    }
    if (!options.svg_path.empty()) {
        std::ofstream svg(options.svg_path);
        if (!svg) throw precondition_error("cannot open SVG output path");
        svg << polygon_svg(f);
        j["svg"] = options.svg_path;
    }
    out.json = j.dump(2) + "\n";

    std::ostringstream text;
    text << "f = " << print_polynomial(f) << "\n";
    text << "chi_c(generic fiber) = " << rep.chi_generic << "\n";
    text << "S_{f,infinity} = " << rep.motive_at_infinity.motive.to_string() << "\n";
    text << "Newton bifurcation set B^Newton:";
    if (rep.b_newton.empty()) text << " (empty)";
    text << "\n";
    for (const auto& cr : rep.candidates) {
        text << "  " << orbit_key(cr.orbit) << "  lambda = " << cr.lambda << "  [";
        for (size_t i = 0; i < cr.orbit.provenance.size(); ++i)
            text << (i ? ", " : "") << cr.orbit.provenance[i];
        text << "]\n";
        if (options.include_motives)
            text << "    S_{f,a}^infinity = " << cr.nearby.motive.to_string() << "\n";
    }
    for (const auto& [key, l] : extra) text << "  " << key << "  lambda = " << l << "  [user]\n";
    text << "Topological bifurcation set B^top:";
    if (rep.b_top.empty()) text << " (empty)";
    text << "\n";
    for (const auto& o : rep.b_top) text << "  " << orbit_key(o) << "\n";
    text << "lambda(f) = " << rep.lambda_total << ", mu(f) = " << rep.mu_total
         << " (derived from chi = 1 - (mu + lambda))\n";
    text << "generic sentinel: lambda(" << rep.sentinel_value.get_str() << ") = "
         << (rep.sentinel_ok ? "0 [ok]" : "NONZERO [inconsistent]") << "\n";
    out.text = text.str();
    return out;
}

}  // namespace newton
