#include "pfol/document.hpp"

#include <map>
#include <sstream>

namespace pfol {

FieldSpec parse_minimal_polynomial(const std::string& text) {
    MultiPoly p = parse_poly_t_variable(text);
    if (p.degree_in(Var::X) > 0 || p.degree_in(Var::Y) > 0 || p.degree_in(Var::T) != 2)
        throw InputError("minimal polynomial must be quadratic in t: " + text);
    Scalar lc = p.coefficient_of(Var::T, 2).as_constant();
    Scalar c1 = p.coefficient_of(Var::T, 1).as_constant() / lc;
    Scalar c0 = p.coefficient_of(Var::T, 0).as_constant() / lc;
    return FieldSpec::quadratic(-c1.rational_part(), -c0.rational_part());
}

std::string minimal_polynomial_string(const FieldSpec& f) {
    if (!f.is_quadratic())
        throw MathError("FieldMismatch", "the rational field has no minimal polynomial");
    MultiPoly t = MultiPoly::variable(FieldSpec::rationals(), Var::T);
    MultiPoly p = t * t - t * Scalar(f.u()) - MultiPoly::constant(Scalar(f.v()));
    return p.to_string();
}

std::string one_form_to_string(const OneForm& w) {
    std::string s;
    if (!w.A.is_zero()) s += "(" + w.A.to_string() + ") dx";
    if (!w.B.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + w.B.to_string() + ") dy";
    }
    if (s.empty()) s = "0 dx";
    return s;
}

namespace {

struct RawEntry {
    std::string value;
    std::size_t line;
    bool quoted;
};

using Section = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

PencilDocument parse_pencil_file(const std::string& text) {
    std::map<std::string, Section> sections;
    std::vector<std::pair<std::string, RawEntry>> curve_entries;  // ordered
    std::istringstream in(text);
    std::string line;
    std::string current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw InputError("unterminated section header", lineno);
            current = trim(s.substr(1, s.size() - 2));
            if (current != "field" && current != "pencil" && current != "curves" &&
                current != "expect")
                throw InputError("unknown section [" + current + "]", lineno);
            sections.try_emplace(current);
            continue;
        }
        if (current.empty()) throw InputError("key outside of any section", lineno);
        auto eq = s.find('=');
        if (eq == std::string::npos) throw InputError("expected key = value", lineno);
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw InputError("empty key", lineno);
        bool quoted = false;
        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                throw InputError("unterminated quoted value", lineno);
            value = value.substr(1, value.size() - 2);
            quoted = true;
        }
        RawEntry entry{value, lineno, quoted};
        if (current == "curves") {
            for (const auto& [k, e] : curve_entries)
                if (k == key) throw InputError("duplicate curve label '" + key + "'", lineno);
            curve_entries.emplace_back(key, entry);
        } else {
            auto [it, inserted] = sections[current].try_emplace(key, entry);
            if (!inserted)
                throw InputError("duplicate key '" + key + "' in [" + current + "]", lineno);
        }
    }

    auto get = [&](const std::string& sec, const std::string& key) -> const RawEntry* {
        auto sit = sections.find(sec);
        if (sit == sections.end()) return nullptr;
        auto kit = sit->second.find(key);
        return kit == sit->second.end() ? nullptr : &kit->second;
    };
    auto require = [&](const std::string& sec, const std::string& key) -> const RawEntry& {
        const RawEntry* e = get(sec, key);
        if (!e) throw InputError("missing key '" + key + "' in [" + sec + "]", lineno);
        return *e;
    };
    auto check_known_keys = [&](const std::string& sec, std::initializer_list<const char*> known) {
        auto sit = sections.find(sec);
        if (sit == sections.end()) return;
        for (const auto& [k, e] : sit->second) {
            bool ok = false;
            for (const char* kk : known) ok = ok || k == kk;
            if (!ok) throw InputError("unknown key '" + k + "' in [" + sec + "]", e.line);
        }
    };
    check_known_keys("field", {"kind", "minpoly"});
    check_known_keys("pencil", {"label", "omega", "eta", "first_integral"});
    check_known_keys("expect", {"tangency", "flat"});

    PencilDocument doc;
    const RawEntry& kind = require("field", "kind");
    if (kind.value == "Q") {
        if (get("field", "minpoly"))
            throw InputError("minpoly given for the rational field", get("field", "minpoly")->line);
        doc.field = FieldSpec::rationals();
    } else if (kind.value == "Q(t)") {
        const RawEntry& mp = require("field", "minpoly");
        try {
            doc.field = parse_minimal_polynomial(mp.value);
        } catch (const InputError& e) {
            throw InputError(e.what(), mp.line);
        }
    } else {
        throw InputError("field kind must be Q or Q(t), got '" + kind.value + "'", kind.line);
    }

    auto parse_form_at = [&](const RawEntry& e) {
        try {
            return parse_one_form(e.value, doc.field);
        } catch (const InputError& err) {
            throw InputError(std::string(err.what()) + " [line " + std::to_string(e.line) + "]",
                             e.line);
        }
    };
    const RawEntry& om = require("pencil", "omega");
    const RawEntry& et = require("pencil", "eta");
    doc.omega_src = om.value;
    doc.eta_src = et.value;
    doc.omega = parse_form_at(om);
    doc.eta = parse_form_at(et);
    if (const RawEntry* lb = get("pencil", "label")) doc.label = lb->value;
    if (const RawEntry* fi = get("pencil", "first_integral")) {
        doc.first_integral_src = fi->value;
        try {
            doc.first_integral = parse_rational_function(fi->value, doc.field);
        } catch (const InputError& err) {
            throw InputError(std::string(err.what()), fi->line);
        }
    }

    for (const auto& [label, entry] : curve_entries) {
        MultiPoly p;
        try {
            p = parse_poly(entry.value, doc.field);
        } catch (const InputError& err) {
            throw InputError(std::string(err.what()), entry.line);
        }
        if (p.is_constant())
            throw InputError("curve '" + label + "' is constant", entry.line);
        doc.curves.emplace_back(label, std::move(p));
    }

    if (const RawEntry* tg = get("expect", "tangency")) {
        doc.expect_tangency_src = tg->value;
        try {
            doc.expect_tangency = parse_poly(tg->value, doc.field);
        } catch (const InputError& err) {
            throw InputError(std::string(err.what()), tg->line);
        }
    }
    if (const RawEntry* fl = get("expect", "flat")) {
        if (fl->value == "true") doc.expect_flat = true;
        else if (fl->value == "false") doc.expect_flat = false;
        else throw InputError("flat must be true or false", fl->line);
    }
    return doc;
}

std::string print_pencil_file(const PencilDocument& doc, bool include_expect) {
    std::string out;
    out += "[field]\n";
    if (doc.field.is_rationals()) {
        out += "kind = Q\n";
    } else {
        out += "kind = Q(t)\n";
        out += "minpoly = \"" + minimal_polynomial_string(doc.field) + "\"\n";
    }
    out += "\n[pencil]\n";
    if (doc.label) out += "label = \"" + *doc.label + "\"\n";
    out += "omega = \"" + doc.omega_src + "\"\n";
    out += "eta = \"" + doc.eta_src + "\"\n";
    if (doc.first_integral_src) out += "first_integral = \"" + *doc.first_integral_src + "\"\n";
    if (!doc.curves.empty()) {
        out += "\n[curves]\n";
        for (const auto& [label, poly] : doc.curves)
            out += label + " = \"" + poly.to_string() + "\"\n";
    }
    if (include_expect && (doc.expect_tangency_src || doc.expect_flat)) {
        out += "\n[expect]\n";
        if (doc.expect_tangency_src) out += "tangency = \"" + *doc.expect_tangency_src + "\"\n";
        if (doc.expect_flat) out += std::string("flat = ") + (*doc.expect_flat ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace pfol
