// dcheb: exact and asymptotic evaluation of discrete Chebyshev polynomials t_n(x, N+1).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "dcheb/asymptotic.hpp"
#include "dcheb/errors.hpp"
#include "dcheb/exact.hpp"
#include "dcheb/harness.hpp"
#include "dcheb/regime.hpp"

namespace {

using namespace dcheb;

constexpr int kExitArgs = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIO = 4;

struct ArgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer, p/q, or a finite decimal; all parsed exactly.
mpq_class parse_rational(const std::string& s) {
    try {
        const auto dot = s.find('.');
        if (dot == std::string::npos) {
            mpq_class q(s, 10);
            q.canonicalize();
            return q;
        }
        const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t places = s.size() - dot - 1;
        mpz_class num(digits.empty() ? "0" : digits, 10), den = 1;
        for (std::size_t i = 0; i < places; ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ArgError("--x: not a rational number: '" + s + "'");
    }
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ArgError("--N-list: bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ArgError("--N-list is empty");
    return out;
}

struct Common {
    long n = -1;
    std::string x = "0";
    long capN = -1;
    std::string thresholds;
    std::string out;
    std::string format = "csv";
};

void add_point(CLI::App* sub, Common& c) {
    sub->add_option("--n", c.n, "degree n >= 0")->required();
    sub->add_option("--x", c.x, "argument x (integer, p/q or decimal)")->required();
    sub->add_option("--capN", c.capN, "support parameter: the N in t_n(x, N+1); orthogonality on x = 0..N")
        ->required();
}

Thresholds thresholds_or(const Common& c, const Thresholds& fallback) {
    return c.thresholds.empty() ? fallback : load_thresholds(c.thresholds);
}

// stdout unless --out names a file
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::ios_base::failure("cannot open " + path + " for writing");
        }
    }
    std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish() {
        get().flush();
        if (!get()) throw std::ios_base::failure("write failed");
    }

private:
    std::ofstream file_;
};

std::string signed_log_text(const SignedLog& v) {
    return "sign=" + std::to_string(v.sign) + " log_abs=" + format_real(v.log_abs);
}

void print_constants(std::ostream& os, const RegimeConstants& rc) {
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, KummerConstants>)
                os << "eta=" << format_real(k.eta) << " gamma=" << format_real(k.gamma) << '\n';
            else if constexpr (std::is_same_v<T, AiryConstants>)
                os << "zeta=" << format_real(k.zeta) << " A=" << format_real(k.A) << '\n';
            else if constexpr (std::is_same_v<T, BesselConstants>)
                os << "m=" << format_real(k.m) << " gamma=" << format_real(k.gamma) << '\n';
            else if constexpr (std::is_same_v<T, GammaNegConstants>)
                os << "gamma=" << format_real(k.gamma) << '\n';
        },
        rc);
}

Format format_of(const Common& c) {
    if (auto f = parse_format(c.format)) return *f;
    throw ArgError("--format must be csv or json");
}

std::optional<Regime> regime_of(const std::string& s) {
    if (s == "auto") return std::nullopt;
    const auto r = parse_regime(s);
    if (!r || *r == Regime::ExactFallback) throw ArgError("--regime: unknown value '" + s + "'");
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic evaluation of discrete Chebyshev polynomials t_n(x, N+1)"};
    app.require_subcommand(1);

    Common c;
    std::string regime = "auto";
    long terms = -1;
    std::string path;
    std::string nlist;

    auto* eval = app.add_subcommand("eval", "exact rational value");
    add_point(eval, c);
    eval->add_option("--out", c.out, "write output to this file");

    auto* approx = app.add_subcommand("approx", "leading-order asymptotic approximation");
    add_point(approx, c);
    approx->add_option("--thresholds", c.thresholds, "key=value regime thresholds file");
    approx->add_option("--regime", regime, "auto|kummer|airy|bessel|gamma-neg|fixed-b|series");
    approx->add_option("--terms", terms, "terms K of the series approximation (default: all)");
    approx->add_option("--out", c.out, "write output to this file");

    auto* classify_cmd = app.add_subcommand("classify", "regime tag and scaled parameters");
    add_point(classify_cmd, c);
    classify_cmd->add_option("--thresholds", c.thresholds, "key=value regime thresholds file");
    classify_cmd->add_option("--out", c.out, "write output to this file");

    auto* compare_cmd = app.add_subcommand("compare", "approximation against the exact value, as a record");
    add_point(compare_cmd, c);
    compare_cmd->add_option("--thresholds", c.thresholds, "key=value regime thresholds file");
    compare_cmd->add_option("--regime", regime, "auto|kummer|airy|bessel|gamma-neg|fixed-b|series");
    compare_cmd->add_option("--terms", terms, "terms K of the series approximation (default: all)");
    compare_cmd->add_option("--out", c.out, "write records to this file");
    compare_cmd->add_option("--format", c.format, "csv|json");

    auto* sweep_cmd = app.add_subcommand("sweep", "error records along a canonical limit path");
    sweep_cmd->add_option("--path", path, "bessel|kummer|airy|gamma-neg|fixed-b")->required();
    sweep_cmd->add_option("--N-list", nlist, "comma-separated N values (default: the path's list)");
    sweep_cmd->add_option("--thresholds", c.thresholds, "key=value thresholds file (default: the path's)");
    sweep_cmd->add_option("--out", c.out, "write records to this file");
    sweep_cmd->add_option("--format", c.format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitArgs;
    }

    try {
        if (eval->parsed()) {
            const PolyTriple p(c.n, parse_rational(c.x), c.capN);
            const mpq_class v = eval_exact_series(p);
            Sink sink(c.out);
            const std::string text = v.get_str();
            if (text.size() <= 80)
                sink.get() << text << '\n';
            else
                sink.get() << signed_log_text(to_signed_log(v)) << '\n';
            sink.finish();
        } else if (approx->parsed()) {
            const PolyTriple p(c.n, parse_rational(c.x), c.capN);
            const ApproxResult r = approximate(p, thresholds_or(c, {}), {regime_of(regime), terms});
            Sink sink(c.out);
            auto& os = sink.get();
            os << "regime=" << regime_name(r.regime) << '\n' << signed_log_text(r.value) << '\n';
            print_constants(os, r.constants);
            if (!std::holds_alternative<std::monostate>(r.constants)) {
                os << "c0=" << format_real(r.coeffs.c0);
                if (r.coeffs.has_d0) os << " d0=" << format_real(r.coeffs.d0);
                os << '\n';
            }
            sink.finish();
            for (const auto& d : r.diagnostics) std::cerr << "note: " << d << '\n';
        } else if (classify_cmd->parsed()) {
            const PolyTriple p(c.n, parse_rational(c.x), c.capN);
            const Regime r = classify(p, thresholds_or(c, {}));
            Sink sink(c.out);
            sink.get() << regime_name(r);
            if (p.n >= 1) {
                const ScaledParams s = scaled_params(p);
                sink.get() << " rho=" << format_real(s.rho) << " a=" << format_real(s.a) << " b=" << format_real(s.b);
            }
            sink.get() << '\n';
            sink.finish();
        } else if (compare_cmd->parsed()) {
            const Format f = format_of(c);
            const PolyTriple p(c.n, parse_rational(c.x), c.capN);
            const ErrorRecord rec = compare(p, thresholds_or(c, {}), regime_of(regime), terms);
            Sink sink(c.out);
            emit({rec}, f, sink.get());
            sink.finish();
        } else if (sweep_cmd->parsed()) {
            const Format f = format_of(c);
            SweepSpec spec = canonical_path(path);
            if (!nlist.empty()) spec.N_list = parse_list(nlist);
            spec.thresholds = thresholds_or(c, spec.thresholds);
            const auto records = sweep(spec);
            Sink sink(c.out);
            emit(records, f, sink.get());
            sink.finish();
            for (const auto& rec : records)
                if (!rec.error.empty())
                    std::cerr << "error at n=" << rec.n << " x=" << rec.x << " capN=" << rec.capN << ": " << rec.error
                              << '\n';
            for (const auto& lvl : summarize(records))
                std::cerr << "N=" << lvl.capN << " median_rel_err=" << format_real(lvl.median_rel_err)
                          << " signs=" << (lvl.all_signs_match ? "ok" : "MISMATCH") << '\n';
            if (spec.N_list.size() >= 3)
                std::cerr << "convergence_order=" << format_real(convergence_order(records)) << '\n';
        }
    } catch (const ArgError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIO;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
