#include "prab/cli/problem_file.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "prab/cli/expr.hpp"
#include "prab/errors.hpp"

namespace prab::cli {

namespace {

struct Value {
    std::string text;
    int line;
    int column;
};

using Section = std::map<std::string, Value>;

const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"params", {"alpha", "omega", "betas", "theta", "thetas"}},
        {"coefficients", {}},  // sigma<i>
        {"forcing", {"g"}},
        {"ic", {"e"}},
        {"domain", {"T", "n_points"}},
        {"psi", {"family", "a", "lambda", "c", "p"}},
        {"solver", {"picard_tol", "max_iters", "series_tol", "route"}},
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_sigma_key(const std::string& k) {
    if (k.size() < 6 || k.compare(0, 5, "sigma") != 0) return false;
    for (std::size_t i = 5; i < k.size(); ++i) {
        if (k[i] < '0' || k[i] > '9') return false;
    }
    return k[5] != '0';
}

double number(const std::string& text, int line, int column) {
    const std::string s = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
        throw ParseError("expected a number, got '" + s + "'", line, column);
    }
    return v;
}

double number(const Value& v) { return number(v.text, v.line, v.column); }

std::vector<double> number_list(const Value& v, bool brackets) {
    std::string s = trim(v.text);
    int col = v.column;
    if (brackets) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            throw ParseError("expected an inline table [v0, v1, ...]", v.line, v.column);
        }
        s = s.substr(1, s.size() - 2);
        ++col;
    }
    std::vector<double> out;
    if (trim(s).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
        out.push_back(number(item, v.line, col + static_cast<int>(start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::size_t count(const Value& v) {
    const double x = number(v);
    if (!(x >= 0.0) || x != static_cast<double>(static_cast<std::size_t>(x))) {
        throw ParseError("expected a nonnegative integer", v.line, v.column);
    }
    return static_cast<std::size_t>(x);
}

// Leading column of the value text within its line.
int value_column(const std::string& raw, std::size_t eq) {
    std::size_t p = eq + 1;
    while (p < raw.size() && (raw[p] == ' ' || raw[p] == '\t')) ++p;
    return static_cast<int>(p) + 1;
}

FunctionSource function_of(const Value& v, double T) {
    const std::string s = trim(v.text);
    if (!s.empty() && s.front() == '[') {
        auto values = number_list(v, true);
        if (values.size() < 2) throw ParseError("inline table needs at least two values", v.line, v.column);
        return FunctionSource(GridFn(T, std::move(values)));
    }
    const Expr e = Expr::parse(s, v.line, v.column);
    if (e.is_constant()) return FunctionSource::constant(e(0.0));
    return FunctionSource([e](double t) { return e(t); });
}

const Value* find(const std::map<std::string, Section>& doc, const std::string& sec,
                  const std::string& key) {
    const auto s = doc.find(sec);
    if (s == doc.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

const Value& require(const std::map<std::string, Section>& doc, const std::string& sec,
                     const std::string& key) {
    if (const Value* v = find(doc, sec, key)) return *v;
    throw ValidationError("missing [" + sec + "] " + key);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

const char* route_name(Route r) noexcept {
    switch (r) {
        case Route::picard: return "picard";
        case Route::const_coeff: return "const";
        case Route::automatic: break;
    }
    return "auto";
}

Route parse_route(const std::string& name) {
    if (name == "picard") return Route::picard;
    if (name == "const") return Route::const_coeff;
    if (name == "auto") return Route::automatic;
    throw ValidationError("route must be picard, const or auto, got '" + name + "'");
}

bool ProblemFile::const_eligible() const {
    if (psi || !single_theta) return false;
    for (const auto& s : spec.sigmas) {
        if (!s.constant_value()) return false;
    }
    return true;
}

Route ProblemFile::resolved_route() const {
    if (route == Route::automatic) return const_eligible() ? Route::const_coeff : Route::picard;
    if (route == Route::const_coeff && !const_eligible()) {
        throw ValidationError(
            "const route needs constant sigmas, a single theta and no psi");
    }
    return route;
}

ConstProblem ProblemFile::as_const() const {
    if (!const_eligible()) {
        throw ValidationError("const route needs constant sigmas, a single theta and no psi");
    }
    ConstProblem c;
    c.alpha = spec.alpha;
    c.betas = spec.betas;
    c.theta = spec.thetas.at(0);
    c.omega = spec.omega;
    for (const auto& s : spec.sigmas) c.sigmas.push_back(*s.constant_value());
    c.g = spec.g;
    c.e = spec.e;
    c.T = spec.T;
    return c;
}

PsiProblemSpec ProblemFile::as_psi() const {
    if (!psi) throw ValidationError("problem has no [psi] section");
    return {spec, *psi};
}

ProblemFile parse_problem_text(const std::string& text) {
    std::map<std::string, Section> doc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ParseError("unterminated section header", line, 1);
            section = trim(body.substr(1, body.size() - 2));
            if (!known_keys().count(section)) {
                throw ParseError("unknown section [" + section + "]", line, 1);
            }
            if (doc.count(section)) throw ParseError("duplicate section [" + section + "]", line, 1);
            doc[section];
            continue;
        }
        const auto eq = raw.find('=');
        if (eq == std::string::npos || (hash != std::string::npos && eq > hash)) {
            throw ParseError("expected key = value", line, 1);
        }
        if (section.empty()) throw ParseError("key outside of any section", line, 1);
        const std::string key = trim(raw.substr(0, eq));
        const auto& allowed = known_keys().at(section);
        const bool ok = section == "coefficients"
                            ? is_sigma_key(key)
                            : std::find(allowed.begin(), allowed.end(), key) != allowed.end();
        if (!ok) throw ParseError("unknown key '" + key + "' in [" + section + "]", line, 1);
        if (doc[section].count(key)) throw ParseError("duplicate key '" + key + "'", line, 1);
        const std::string value = hash == std::string::npos ? raw.substr(eq + 1)
                                                            : raw.substr(eq + 1, hash - eq - 1);
        doc[section][key] = {trim(value), line, value_column(raw, eq)};
    }

    ProblemFile pf;
    pf.text = text;
    auto& p = pf.spec;
    p.alpha = number(require(doc, "params", "alpha"));
    if (const Value* v = find(doc, "params", "omega")) p.omega = number(*v);
    p.betas = number_list(require(doc, "params", "betas"), false);
    const Value* th = find(doc, "params", "theta");
    const Value* ths = find(doc, "params", "thetas");
    if (th && ths) throw ValidationError("give either theta or thetas, not both");
    if (th) {
        pf.single_theta = true;
        p.thetas.assign(p.betas.size(), number(*th));
    } else if (ths) {
        p.thetas = number_list(*ths, false);
    } else {
        throw ValidationError("missing [params] theta or thetas");
    }
    p.T = number(require(doc, "domain", "T"));
    if (const Value* v = find(doc, "domain", "n_points")) pf.cfg.n_points = count(*v);

    if (const auto c = doc.find("coefficients"); c != doc.end()) {
        const std::size_t n = c->second.size();
        for (std::size_t i = 1; i <= n; ++i) {
            const Value* v = find(doc, "coefficients", "sigma" + std::to_string(i));
            if (!v) throw ValidationError("coefficients must be numbered sigma1..sigma" + std::to_string(n));
            p.sigmas.push_back(function_of(*v, p.T));
        }
    }
    p.g = function_of(require(doc, "forcing", "g"), p.T);
    if (const Value* v = find(doc, "ic", "e")) p.e = number_list(*v, false);

    if (const Value* v = find(doc, "solver", "picard_tol")) pf.cfg.picard_tol = number(*v);
    if (const Value* v = find(doc, "solver", "max_iters")) pf.cfg.max_iters = count(*v);
    if (const Value* v = find(doc, "solver", "series_tol")) pf.cfg.series_tol = number(*v);
    if (const Value* v = find(doc, "solver", "route")) pf.route = parse_route(trim(v->text));

    if (doc.count("psi")) {
        const std::string family = trim(require(doc, "psi", "family").text);
        auto param = [&](const char* key) { return number(require(doc, "psi", key)); };
        if (family == "identity") {
            pf.psi = psi_identity(p.T);
            pf.psi_description = "identity";
        } else if (family == "affine") {
            const double a = param("a");
            pf.psi = psi_affine(a, p.T);
            pf.psi_description = "affine a=" + fmt(a);
        } else if (family == "exp_sat") {
            const double lambda = param("lambda");
            pf.psi = psi_exp_sat(lambda, p.T);
            pf.psi_description = "exp_sat lambda=" + fmt(lambda);
        } else if (family == "power") {
            const double c = param("c");
            const double pw = param("p");
            pf.psi = psi_power(c, pw, p.T);
            pf.psi_description = "power c=" + fmt(c) + " p=" + fmt(pw);
        } else {
            const Value& v = require(doc, "psi", "family");
            throw ParseError("unknown psi family '" + family + "'", v.line, v.column);
        }
    }

    p.validate();
    pf.cfg.validate();
    if (pf.psi) pf.psi->validate();
    return pf;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw IoError("cannot read problem file '" + path + "'");
    return parse_problem_text(ss.str());
}

}  // namespace prab::cli
