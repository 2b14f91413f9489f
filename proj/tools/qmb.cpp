// qmb: spectral tables, verification suites, normal forms and factorial
// Schur polynomials over Q[q, q^-1].

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmb/fock.hpp"
#include "qmb/parser.hpp"
#include "qmb/symfun.hpp"
#include "qmb/verify.hpp"

namespace {

using qmb::Json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> lambda_max;
    std::string q = "sym";
    std::string format = "text";
    std::string out;
    std::string suite;
    int jobs = 1;
    std::string expression;
    std::string nu;
    std::string param = "p";
    std::string at;
    bool classical = false;
};

// nullopt for symbolic q.
std::optional<qmb::Rational> q_point(const std::string& text)
{
    if (text == "sym" || text == "symbolic") {
        return std::nullopt;
    }
    try {
        qmb::Rational r = qmb::Rational::parse(text);
        if (r.is_zero()) {
            throw UsageError("--q must be nonzero");
        }
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("--q expects 'sym' or a rational p/r, got '" + text + "'");
    }
}

Json scalar_json(const qmb::Scalar& s)
{
    Json j = Json::object();
    for (const auto& [e, c] : s.terms()) {
        j[std::to_string(e)] = c.to_string();
    }
    return j;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::string s;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ') {
            s += c;
        }
    }
    std::vector<int> out;
    if (s.empty()) {
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + " '" + text + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o)
{
    const int n = o.n.value_or(1);
    if (n < 1) {
        throw UsageError("--n must be positive");
    }
    const int bound = o.lambda_max.value_or(2);
    if (bound < 0) {
        throw UsageError("--lambda-max must be nonnegative");
    }
    std::vector<int> ks;
    for (int k = 1; k <= n; ++k) {
        if (!o.k || *o.k == k) {
            ks.push_back(k);
        }
    }
    if (ks.empty()) {
        throw UsageError("--k must lie in 1..n");
    }
    const auto q0 = q_point(o.q);
    std::vector<qmb::NcPoly> ys;
    for (int k : ks) {
        ys.push_back(qmb::build_y(n, k));
    }

    Output out(o.out);
    std::ostream& os = out.stream();
    Json rows = Json::array();
    if (o.format == "csv") {
        os << "lambda";
        for (int k : ks) {
            os << ",y" << k;
        }
        os << "\n";
    } else if (o.format == "text") {
        os << "lambda";
        for (int k : ks) {
            os << " | y" << k;
        }
        os << "\n";
    }
    for (const auto& lambda : qmb::partitions(n, bound)) {
        Json row = Json::object();
        row["lambda"] = lambda.parts();
        Json values = Json::object();
        std::string text = lambda.to_string();
        std::string csv = csv_quote(lambda.to_string());
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const qmb::Scalar fock = qmb::eigenvalue_on(ys[i], lambda);
            const qmb::Scalar formula = qmb::spectral_rhs(qmb::SpectralFormula::thm1(ks[i]), n, lambda);
            if (fock != formula) {
                std::cerr << "mismatch at lambda=" << lambda.to_string() << ", k=" << ks[i] << ": Fock action gives "
                          << fock.to_string() << ", spectral formula gives " << formula.to_string() << "\n";
                return kExitMismatch;
            }
            std::string rendered = q0 ? qmb::eval_at(fock, *q0).to_string() : fock.to_string();
            values["y" + std::to_string(ks[i])] = q0 ? Json(rendered) : scalar_json(fock);
            text += " | " + rendered;
            csv += "," + csv_quote(rendered);
        }
        row["eigenvalues"] = std::move(values);
        rows.push_back(std::move(row));
        if (o.format == "text") {
            os << text << "\n";
        } else if (o.format == "csv") {
            os << csv << "\n";
        }
    }
    if (o.format == "json") {
        Json doc = Json::object();
        doc["n"] = n;
        doc["q"] = q0 ? Json(q0->to_string()) : Json("sym");
        doc["rows"] = std::move(rows);
        os << doc.dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o)
{
    qmb::GridOptions grid;
    grid.n = o.n;
    grid.k = o.k;
    grid.lambda_max = o.lambda_max;
    if (o.q != "sym") {
        const auto q0 = q_point(o.q);
        grid.q_point = q0->to_string();
    }
    std::vector<std::string> names;
    if (o.suite.empty() || o.suite == "all" || o.suite == "default") {
        names = qmb::check_names();
    } else {
        std::stringstream ss(o.suite);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!qmb::is_check_name(item)) {
                throw UsageError("unknown check '" + item + "'");
            }
            names.push_back(item);
        }
    }
    std::vector<qmb::CheckId> selection;
    for (const auto& name : names) {
        auto part = qmb::expand_check(name, grid);
        selection.insert(selection.end(), part.begin(), part.end());
    }
    const qmb::VerificationReport report = qmb::run_suite(selection, o.jobs);

    Output out(o.out);
    std::ostream& os = out.stream();
    if (o.format == "json") {
        os << report.to_json().dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "check,params,status,witness,correction_factor,millis\n";
        for (const auto& e : report.entries) {
            os << e.id.name << "," << csv_quote(e.id.params.dump()) << "," << qmb::to_string(e.status) << ","
               << csv_quote(e.witness.value_or("")) << "," << csv_quote(e.correction_factor.value_or("")) << ","
               << e.millis << "\n";
        }
    } else {
        for (const auto& e : report.entries) {
            os << qmb::to_string(e.status) << "  " << e.id.name << " " << e.id.params.dump();
            if (e.correction_factor) {
                os << "  factor " << *e.correction_factor;
            }
            if (e.witness) {
                os << "  witness " << *e.witness;
            }
            os << "\n";
        }
        os << report.count(qmb::CheckStatus::Pass) << " pass, "
           << report.count(qmb::CheckStatus::PassWithConventionFactor) << " pass-with-convention-factor, "
           << report.count(qmb::CheckStatus::Fail) << " fail\n";
    }
    return report.ok() ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------- normal-form

int cmd_normal_form(const Options& o)
{
    const qmb::AlgebraKind kind = qmb::infer_kind(o.expression, o.n);
    const qmb::NcPoly value = qmb::parse_expression(o.expression, kind);
    const auto q0 = q_point(o.q);
    Output out(o.out);
    std::ostream& os = out.stream();
    if (o.format == "json") {
        Json terms = Json::array();
        for (const auto& [w, c] : value.sorted_terms()) {
            Json t = Json::object();
            t["word"] = value.algebra().presentation().render(w);
            t["coefficient"] = q0 ? Json(qmb::eval_at(c, *q0).to_string()) : scalar_json(c);
            terms.push_back(std::move(t));
        }
        Json doc = Json::object();
        doc["algebra"] = kind.name();
        doc["terms"] = std::move(terms);
        os << doc.dump(2) << "\n";
        return 0;
    }
    if (q0) {
        qmb::TermMap at;
        for (const auto& [w, c] : value.terms()) {
            const qmb::Rational r = qmb::eval_at(c, *q0);
            if (!r.is_zero()) {
                at.emplace(w, qmb::Scalar(r));
            }
        }
        os << qmb::NcPoly(value.algebra_ptr(), std::move(at)).to_string() << "\n";
        return 0;
    }
    if (o.format == "csv") {
        os << "word,coefficient\n";
        for (const auto& [w, c] : value.sorted_terms()) {
            os << csv_quote(value.algebra().presentation().render(w)) << "," << csv_quote(c.to_string()) << "\n";
        }
        return 0;
    }
    os << value.to_string() << "\n";
    return 0;
}

// ---------------------------------------------------------------- schur

int cmd_schur(const Options& o)
{
    std::vector<int> nu = parse_int_list(o.nu, "partition");
    while (!nu.empty() && nu.back() == 0) {
        nu.pop_back();
    }
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < 0 || (i > 0 && nu[i] > nu[i - 1])) {
            throw UsageError("malformed partition '" + o.nu + "'");
        }
    }
    std::vector<qmb::Scalar> points;
    if (!o.at.empty()) {
        std::stringstream ss(o.at);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                points.push_back(qmb::Scalar::parse(item));
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("malformed point: ") + e.what());
            }
        }
    }
    const int n = o.n.value_or(points.empty() ? std::max<int>(1, static_cast<int>(nu.size())) : static_cast<int>(points.size()));
    if (n < static_cast<int>(nu.size())) {
        throw UsageError("partition has more than n parts");
    }
    if (!points.empty() && static_cast<int>(points.size()) != n) {
        throw UsageError("--at needs exactly n points");
    }
    qmb::SchurVariant variant = qmb::SchurVariant::classic();
    std::string coeff_var = "q";
    if (!o.classical) {
        if (o.param == "p") {
            // The symbolic parameter is carried as q and renamed on output.
            variant = qmb::SchurVariant::q_param(qmb::Scalar::q());
            coeff_var = points.empty() ? "p" : "q";
        } else {
            qmb::Scalar p;
            try {
                p = qmb::Scalar::parse(o.param);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("malformed parameter: ") + e.what());
            }
            if (!p.is_monomial()) {
                throw UsageError("--param must be a single monomial such as q^2");
            }
            variant = qmb::SchurVariant::q_param(p);
        }
    }
    Output out(o.out);
    std::ostream& os = out.stream();
    const qmb::MultiPoly poly = qmb::factorial_schur(nu, n, variant);
    if (points.empty()) {
        os << (o.format == "json" ? Json(poly.to_string(coeff_var)).dump() : poly.to_string(coeff_var)) << "\n";
        return 0;
    }
    const qmb::Scalar value = poly.evaluate(points);
    const auto q0 = q_point(o.q);
    const std::string rendered = q0 ? qmb::eval_at(value, *q0).to_string() : value.to_string();
    if (o.format == "json") {
        os << (q0 ? Json(rendered) : scalar_json(value)).dump() << "\n";
    } else {
        os << rendered << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum matrix ball algebras: normal forms, Fock spectra and identity checks"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "matrix size n")->check(CLI::PositiveNumber);
        sub->add_option("--q", o.q, "'sym' or a rational point p/r");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of y_k on the components H_lambda");
    add_common(spectrum);
    spectrum->add_option("--k", o.k, "restrict to one k");
    spectrum->add_option("--lambda-max", o.lambda_max, "bound on lambda_1");

    auto* verify = app.add_subcommand("verify", "run verification checks and write a JSON report");
    add_common(verify);
    verify->add_option("--k", o.k, "restrict to one k");
    verify->add_option("--lambda-max", o.lambda_max, "bound on lambda_1");
    verify->add_option("--suite", o.suite, "comma-separated check names (default: all)");
    verify->add_option("--jobs", o.jobs, "parallel checks")->check(CLI::PositiveNumber);
    o.format = "text";

    auto* nf = app.add_subcommand("normal-form", "canonical form of an expression");
    add_common(nf);
    nf->add_option("expression", o.expression, "expression, e.g. 'zs[1,1]*z[1,1]'")->required();

    auto* schur = app.add_subcommand("schur", "factorial Schur polynomial s_nu");
    add_common(schur);
    schur->add_option("--nu", o.nu, "partition, e.g. 2,1 (empty for 0)");
    schur->add_option("--param", o.param, "'p' (symbolic) or a monomial such as q^2");
    schur->add_option("--at", o.at, "comma-separated points x_1..x_n");
    schur->add_flag("--classical", o.classical, "shifts x - m instead of x - p^m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*spectrum) {
            return cmd_spectrum(o);
        }
        if (*verify) {
            if (verify->count("--format") == 0) {
                o.format = "json";
            }
            return cmd_verify(o);
        }
        if (*nf) {
            return cmd_normal_form(o);
        }
        if (*schur) {
            return cmd_schur(o);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qmb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
