#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pfol/bundled_examples.hpp"
#include "pfol/report.hpp"

namespace {

using namespace pfol;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PencilDocument load_document(const std::string& path) {
    return parse_pencil_file(read_input(path));
}

Pencil pencil_of(const PencilDocument& doc) { return Pencil(doc.omega, doc.eta); }

std::optional<Scalar> parse_alpha(const std::string& text, const FieldSpec& field) {
    if (text == "inf" || text == "infinity") return std::nullopt;
    return parse_scalar(text, field);
}

void print_json(const Json& j) { std::cout << emit_report(j); }

int run_tangency(const std::string& file) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j["tangency"] = p.tangency_polynomial().to_string();
    j["degree"] = p.tangency_polynomial().degree();
    j["pencil_degree"] = p.degree();
    j["degree_bound"] = 2 * p.degree() + 1;
    print_json(j);
    return 0;
}

int run_flat(const std::string& file) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    CurvatureData c = curvature(p);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j.update(to_json(c));
    print_json(j);
    return 0;
}

int run_member(const std::string& file, const std::string& alpha_text) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    auto alpha = parse_alpha(alpha_text, doc.field);
    auto [fol, factor] = p.member(alpha);
    Json j;
    j["alpha"] = alpha ? alpha->to_string() : "inf";
    j["omega"] = one_form_to_string(OneForm{fol.A(), fol.B()});
    j["extracted_factor"] = factor.to_string();
    j["degree"] = fol.degree();
    j["isolated_singularities"] = factor.is_constant();
    print_json(j);
    return 0;
}

int run_ni(const std::string& file) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    NiReport r = ni_set(p);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j.update(to_json(r));
    print_json(j);
    return 0;
}

int run_indices(const std::string& file, const std::string& alpha_text,
                const std::string& point_text) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    auto alpha = parse_alpha(alpha_text, doc.field);
    auto [fol, factor] = p.member(alpha);
    Json j;
    j["alpha"] = alpha ? alpha->to_string() : "inf";
    j["degree"] = fol.degree();
    if (!factor.is_constant()) {
        j["isolated_singularities"] = false;
        j["extracted_factor"] = factor.to_string();
        print_json(j);
        return 0;
    }
    j["isolated_singularities"] = true;
    j["milnor_total"] = milnor_total(fol).value;
    j["baum_bott_total"] = baum_bott_total(fol).to_string();
    LineBundleDegrees lb = fol.bundles();
    Json bundles;
    bundles["normal"] = lb.normal();
    bundles["tangent"] = lb.tangent();
    bundles["canonical"] = lb.canonical();
    j["bundle_degrees"] = std::move(bundles);
    if (!point_text.empty()) {
        auto comma = point_text.find(',');
        if (comma == std::string::npos)
            throw InputError("--point expects 'x,y'");
        Point pt(parse_scalar(point_text.substr(0, comma), doc.field),
                 parse_scalar(point_text.substr(comma + 1), doc.field));
        Json jp;
        jp["point"] = pt.to_string();
        Multiplicity mu = milnor_number(fol, pt);
        jp["milnor"] = mu.to_string();
        if (!mu.infinite && mu.value > 0) jp["baum_bott"] = baum_bott_at(fol, pt).to_string();
        j["at_point"] = std::move(jp);
    }
    print_json(j);
    return 0;
}

int run_invariant(const std::string& file, const std::string& curve) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    MultiPoly f(doc.field);
    bool found = false;
    for (const auto& [label, poly] : doc.curves)
        if (label == curve) {
            f = poly;
            found = true;
            break;
        }
    if (!found) f = parse_poly(curve, doc.field);
    Json j;
    j["curve"] = f.to_string();
    j["invariant_omega"] = form_invariant(doc.omega, f);
    j["invariant_eta"] = form_invariant(doc.eta, f);
    j["invariant_pencil"] = j["invariant_omega"].get<bool>() && j["invariant_eta"].get<bool>();
    j["divides_tangency"] = divides(f, p.tangency_polynomial());
    print_json(j);
    return 0;
}

int run_delta_check(const std::string& file) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j["tangency"] = p.tangency_polynomial().to_string();

    std::vector<MultiPoly> factors;
    for (const auto& [label, poly] : doc.curves) factors.push_back(poly);
    if (!factors.empty()) {
        DeltaInvarianceReport r = delta_component_invariance(p, factors);
        j["invariance"] = to_json(r);
    }

    bool mismatch = false;
    if (doc.expect_tangency) {
        const MultiPoly& T = p.tangency_polynomial();
        const MultiPoly& E = *doc.expect_tangency;
        bool match = proportional(T, E);
        Json je;
        je["expected"] = E.to_string();
        je["computed"] = T.to_string();
        je["match_up_to_scalar"] = match;
        if (!match) {
            mismatch = true;
            Json diag;
            diag["expected_degree"] = E.degree();
            diag["computed_degree"] = T.degree();
            diag["expected_divides_computed"] = divides(E, T);
            diag["computed_divides_expected"] = divides(T, E);
            if (!E.is_zero() && !T.is_zero()) diag["gcd"] = gcd_multivariate(T, E).to_string();
            je["diagnostics"] = std::move(diag);
        }
        j["expect_tangency"] = std::move(je);
    }
    if (doc.expect_flat) {
        bool flat = is_flat(p);
        Json je;
        je["expected"] = *doc.expect_flat;
        je["computed"] = flat;
        je["match"] = flat == *doc.expect_flat;
        if (flat != *doc.expect_flat) mismatch = true;
        j["expect_flat"] = std::move(je);
    }
    print_json(j);
    return mismatch ? 3 : 0;
}

int run_riccati(const std::string& file, bool classify) {
    PencilDocument doc = load_document(file);
    Pencil p = pencil_of(doc);
    RiccatiPencil r = riccati_normal_form(p);
    HolonomyPresentation h = holonomy_generators(r);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j["riccati"] = to_json(r);
    j["holonomy"] = to_json(h);
    if (classify) j["classification"] = to_json(classify_ip(h));
    print_json(j);
    return 0;
}

int run_torus(const std::string& tau, const std::string& alpha_text) {
    TorusSpec spec = tau == "generic" ? TorusSpec::make_generic() : [&] {
        FieldSpec f = parse_minimal_polynomial(tau);
        return TorusSpec::quadratic(f.u(), f.v());
    }();
    Json j;
    j["tau"] = tau;
    EndomorphismAlgebra alg = endomorphism_algebra(spec);
    j["endomorphism_algebra"] = alg.to_string();
    if (!alpha_text.empty()) {
        const FieldSpec& K = spec.generic ? FieldSpec::rationals() : spec.tau_field;
        Scalar alpha = parse_scalar(alpha_text, K);
        j["alpha"] = alpha.to_string();
        j["in_ip"] = ip_linear_torus_membership(spec, alpha);
    }
    print_json(j);
    return 0;
}

int run_hopf(const std::string& params, long n, const std::string& alpha_text, long meets) {
    Rat a(1, 2), b(1, 2), lambda(0);
    long r = 1;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--params expects k=v pairs: " + item);
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "a") a = parse_scalar(value).rational_part();
        else if (key == "b") b = parse_scalar(value).rational_part();
        else if (key == "lambda") lambda = parse_scalar(value).rational_part();
        else if (key == "r") r = std::stol(value);
        else throw InputError("unknown Hopf parameter '" + key + "'");
    }
    HopfSpec spec{Scalar(a), Scalar(b), Scalar(lambda), r};
    Json j;
    j["a"] = rat_to_string(a);
    j["b"] = rat_to_string(b);
    j["lambda"] = rat_to_string(lambda);
    j["r"] = r;
    j["n"] = n;
    HopfIterate it = hopf_iterate(spec, n);
    HopfIterate cf = hopf_closed_form(spec, n);
    j["iterate_x"] = it.x.to_string();
    j["iterate_y"] = it.y.to_string();
    j["closed_form_x"] = cf.x.to_string();
    j["closed_form_y"] = cf.y.to_string();
    j["closed_form_match"] = hopf_closed_form_check(spec, n);
    if (meets > 0) {
        std::optional<Scalar> alpha;
        if (!alpha_text.empty() && alpha_text != "0") alpha = parse_scalar(alpha_text);
        j["section_meets"] = to_json(hopf_section_meets(spec, alpha, meets));
    }
    print_json(j);
    return 0;
}

int run_example(const std::string& name, bool emit) {
    const char* text = nullptr;
    if (name == "P2") text = bundled::kP2;
    else if (name == "P3") text = bundled::kP3;
    else if (name == "P3p") text = bundled::kP3p;
    else if (name == "P4") text = bundled::kP4;
    else throw InputError("unknown example '" + name + "' (P2, P3, P3p, P4)");
    PencilDocument doc = parse_pencil_file(text);
    std::cout << print_pencil_file(doc, emit);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for pencils of foliations on the projective plane"};
    app.require_subcommand(1);

    std::string file, alpha_text, point_text, curve, tau, params, example_name;
    long n = 0, meets = 0;
    bool emit = false;

    auto* tangency = app.add_subcommand("tangency", "tangency polynomial of a pencil");
    tangency->add_option("file", file, "pencil file ('-' for stdin)")->required();

    auto* flat = app.add_subcommand("flat", "connection form and curvature");
    flat->add_option("file", file)->required();

    auto* member = app.add_subcommand("member", "normalized member foliation at alpha");
    member->add_option("file", file)->required();
    member->add_option("--alpha", alpha_text, "parameter value or 'inf'")->required();

    auto* ni = app.add_subcommand("ni", "parameters with non-isolated singularities");
    ni->add_option("file", file)->required();

    auto* indices = app.add_subcommand("indices", "index totals of a member foliation");
    indices->add_option("file", file)->required();
    indices->add_option("--alpha", alpha_text)->required();
    indices->add_option("--point", point_text, "local indices at 'x,y'");

    auto* invariant = app.add_subcommand("invariant", "invariance of a curve");
    invariant->add_option("file", file)->required();
    invariant->add_option("--curve", curve, "curve label from the file, or a polynomial")
        ->required();

    auto* delta = app.add_subcommand("delta-check", "component invariance and expectations");
    delta->add_option("file", file)->required();

    auto* riccati = app.add_subcommand("riccati", "Riccati normal form and holonomy generators");
    riccati->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify-ip", "first-integral parameter classification");
    classify->add_option("file", file)->required();

    auto* torus = app.add_subcommand("torus", "linear pencils on a torus");
    torus->add_option("--tau", tau, "'generic' or a minimal polynomial in t")->required();
    torus->add_option("--alpha", alpha_text);

    auto* hopf = app.add_subcommand("hopf", "Hopf surface iteration bookkeeping");
    hopf->add_option("--params", params, "a=..,b=..,lambda=..,r=..")->required();
    hopf->add_option("--n", n, "iteration count")->required();
    hopf->add_option("--alpha", alpha_text);
    hopf->add_option("--meets", meets, "enumerate N section intersections");

    auto* example = app.add_subcommand("example", "emit a bundled pencil document");
    example->add_option("name", example_name, "P2 | P3 | P3p | P4")->required();
    example->add_flag("--emit", emit, "include the [expect] section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tangency->parsed()) return run_tangency(file);
        if (flat->parsed()) return run_flat(file);
        if (member->parsed()) return run_member(file, alpha_text);
        if (ni->parsed()) return run_ni(file);
        if (indices->parsed()) return run_indices(file, alpha_text, point_text);
        if (invariant->parsed()) return run_invariant(file, curve);
        if (delta->parsed()) return run_delta_check(file);
        if (riccati->parsed()) return run_riccati(file, false);
        if (classify->parsed()) return run_riccati(file, true);
        if (torus->parsed()) return run_torus(tau, alpha_text);
        if (hopf->parsed()) return run_hopf(params, n, alpha_text, meets);
        if (example->parsed()) return run_example(example_name, emit);
    } catch (const InputError& e) {
        Json j;
        j["error"] = "InputError";
        j["message"] = e.what();
        if (e.offset() != InputError::npos) j["offset"] = e.offset();
        print_json(j);
        return 1;
    } catch (const MathError& e) {
        Json j;
        j["error"] = e.code();
        j["message"] = e.what();
        print_json(j);
        return 2;
    }
    return 1;
}
