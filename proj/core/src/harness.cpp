#include "dcheb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "dcheb/errors.hpp"
#include "dcheb/exact.hpp"

namespace dcheb {

namespace {

long floor_pow(long N, double e) {
    long v = static_cast<long>(std::floor(std::pow(static_cast<double>(N), e)));
    // guard against pow landing a hair below an exact integer power
    while (std::pow(static_cast<double>(v + 1), 1.0 / e) <= static_cast<double>(N) * (1 + 1e-15)) ++v;
    return v;
}

}  // namespace

bool ErrorRecord::same_columns(const ErrorRecord& o) const {
    auto same = [](double p, double q) { return p == q || (std::isnan(p) && std::isnan(q)); };
    return n == o.n && x == o.x && capN == o.capN && regime == o.regime && exact.sign == o.exact.sign &&
           same(exact.log_abs, o.exact.log_abs) && approx.sign == o.approx.sign &&
           same(approx.log_abs, o.approx.log_abs) && same(rel_err, o.rel_err) && sign_match == o.sign_match;
}

std::vector<std::string> canonical_path_names() { return {"bessel", "kummer", "airy", "gamma-neg", "fixed-b"}; }

SweepSpec canonical_path(std::string_view name) {
    SweepSpec s;
    s.name = std::string(name);
    if (name == "bessel") {
        // b^2/a -> 0 with a fixed
        s.intended = Regime::BesselSmallB;
        s.N_list = {500, 2000, 8000};
        s.rule = [](long N) { return std::pair{floor_pow(N, 0.4), N / 4}; };
    } else if (name == "kummer") {
        // a/b^2 -> 0 with |eta| N -> inf; the jittered points reach rho ~ 0.58 at the smallest N
        s.intended = Regime::KummerSmallB;
        s.N_list = {1000, 4000, 16000};
        s.rule = [](long N) { return std::pair{floor_pow(N, 0.7), 5L}; };
        s.thresholds.rho_lo = 0.6;
        s.thresholds.b_hi = 0.15;
    } else if (name == "airy") {
        // rho ~ 1 with x slowly growing
        s.intended = Regime::AirySmallB;
        s.N_list = {2000, 8000, 32000};
        s.rule = [](long N) {
            const long x = static_cast<long>(std::ceil(std::pow(static_cast<double>(N), 0.2)));
            return std::pair{static_cast<long>(std::lround(std::sqrt(static_cast<double>(x * N)))), x};
        };
        s.thresholds.x_hi = 4.0;
    } else if (name == "gamma-neg") {
        s.intended = Regime::GammaNegSmallB;
        s.N_list = {1000, 4000, 16000};
        s.rule = [](long N) { return std::pair{floor_pow(N, 0.6), -3L}; };
        s.x_step = -1;
    } else if (name == "fixed-b") {
        s.intended = Regime::KummerFixedB;
        s.N_list = {200, 800, 3200};
        s.rule = [](long N) { return std::pair{N / 2, N / 8}; };
    } else {
        throw DomainError("unknown sweep path '" + std::string(name) + "'");
    }
    return s;
}

ErrorRecord compare(const PolyTriple& p, const Thresholds& t, std::optional<Regime> regime_override,
                    long series_terms) {
    if (p.n > kExactDegreeGuard) throw DomainError("exact oracle infeasible beyond n = 50000");
    if (!p.integer_x()) throw DomainError("compare records need integer x");
    ErrorRecord rec;
    rec.n = p.n;
    rec.x = p.x.get_num().get_si();
    rec.capN = p.capN;
    rec.exact = to_signed_log(eval_exact_series(p));
    const ApproxResult r = approximate(p, t, {regime_override, series_terms});
    rec.regime = r.regime;
    rec.constants = r.constants;
    rec.approx = r.value;
    rec.rel_err = relative_error(rec.approx, rec.exact);
    rec.sign_match = rec.approx.sign == rec.exact.sign;
    return rec;
}

std::vector<ErrorRecord> sweep(const SweepSpec& s, unsigned threads) {
    if (!s.rule) throw DomainError("sweep spec has no point rule");
    if (!std::is_sorted(s.N_list.begin(), s.N_list.end())) throw DomainError("sweep N_list must be increasing");
    std::vector<PolyTriple> points;
    for (long N : s.N_list) {
        const auto [n, x0] = s.rule(N);
        for (int j = 0; j < s.x_jitter; ++j) points.emplace_back(n, x0 + j * s.x_step, N);
    }
    for (const PolyTriple& p : points) {
        const Regime r = classify(p, s.thresholds);
        if (r != s.intended) {
            std::ostringstream msg;
            msg << "sweep " << s.name << ": point (n=" << p.n << ", x=" << p.x << ", capN=" << p.capN
                << ") classifies as " << regime_name(r) << ", not " << regime_name(s.intended);
            throw DomainError(msg.str());
        }
    }

    std::vector<ErrorRecord> out(points.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                out[i] = compare(points[i], s.thresholds);
            } catch (const std::exception& e) {
                ErrorRecord& r = out[i];
                r.n = points[i].n;
                r.x = points[i].x.get_num().get_si();
                r.capN = points[i].capN;
                r.regime = s.intended;
                r.rel_err = std::numeric_limits<double>::infinity();
                r.sign_match = false;
                r.error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    return out;
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<PathLevel> summarize(const std::vector<ErrorRecord>& records) {
    std::vector<long> Ns;
    for (const auto& r : records) Ns.push_back(r.capN);
    std::sort(Ns.begin(), Ns.end());
    Ns.erase(std::unique(Ns.begin(), Ns.end()), Ns.end());
    std::vector<PathLevel> out;
    for (long N : Ns) {
        PathLevel lvl;
        lvl.capN = N;
        std::vector<double> errs;
        for (const auto& r : records) {
            if (r.capN != N) continue;
            errs.push_back(r.rel_err);
            lvl.all_signs_match = lvl.all_signs_match && r.sign_match;
        }
        lvl.count = errs.size();
        lvl.median_rel_err = median(std::move(errs));
        out.push_back(lvl);
    }
    return out;
}

double convergence_order(const std::vector<ErrorRecord>& records) {
    const auto levels = summarize(records);
    if (levels.size() < 3) throw DomainError("convergence_order needs at least 3 distinct N");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& l : levels) {
        const double x = std::log(static_cast<double>(l.capN)), y = std::log(l.median_rel_err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(levels.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::optional<Format> parse_format(std::string_view s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace {

const char* kColumns[] = {"n", "x", "capN", "regime", "exact_sign", "exact_log", "approx_sign", "approx_log",
                          "rel_err", "sign_match"};

double parse_real(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw DomainError("bad number '" + s + "'");
    return v;
}

long parse_long(const std::string& s) {
    long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw DomainError("bad integer '" + s + "'");
    return v;
}

Regime parse_regime_or_throw(const std::string& s) {
    if (auto r = parse_regime(s)) return *r;
    throw DomainError("unknown regime '" + s + "'");
}

std::string json_real(double v) {
    if (std::isfinite(v)) return format_real(v);
    return "\"" + format_real(v) + "\"";
}

}  // namespace

void emit_csv(const std::vector<ErrorRecord>& records, std::ostream& out) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.x << ',' << r.capN << ',' << regime_name(r.regime) << ',' << r.exact.sign << ','
            << format_real(r.exact.log_abs) << ',' << r.approx.sign << ',' << format_real(r.approx.log_abs) << ','
            << format_real(r.rel_err) << ',' << (r.sign_match ? "true" : "false") << '\n';
    }
}

void emit_json(const std::vector<ErrorRecord>& records, std::ostream& out) {
    out << '[';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << (i ? ",\n " : "\n ") << "{\"n\":" << r.n << ",\"x\":" << r.x << ",\"capN\":" << r.capN
            << ",\"regime\":\"" << regime_name(r.regime) << "\",\"exact_sign\":" << r.exact.sign
            << ",\"exact_log\":" << json_real(r.exact.log_abs) << ",\"approx_sign\":" << r.approx.sign
            << ",\"approx_log\":" << json_real(r.approx.log_abs) << ",\"rel_err\":" << json_real(r.rel_err)
            << ",\"sign_match\":" << (r.sign_match ? "true" : "false") << '}';
    }
    out << (records.empty() ? "]\n" : "\n]\n");
}

void emit(const std::vector<ErrorRecord>& records, Format f, std::ostream& out) {
    if (f == Format::csv)
        emit_csv(records, out);
    else
        emit_json(records, out);
    if (!out) throw std::ios_base::failure("write failed");
}

void emit(const std::vector<ErrorRecord>& records, Format f, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + file.string() + " for writing");
    emit(records, f, out);
}

std::vector<ErrorRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("csv: missing header");
    std::vector<ErrorRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != std::size(kColumns)) throw DomainError("csv: expected 10 columns");
        ErrorRecord r;
        r.n = parse_long(f[0]);
        r.x = parse_long(f[1]);
        r.capN = parse_long(f[2]);
        r.regime = parse_regime_or_throw(f[3]);
        r.exact = {static_cast<int>(parse_long(f[4])), parse_real(f[5])};
        r.approx = {static_cast<int>(parse_long(f[6])), parse_real(f[7])};
        r.rel_err = parse_real(f[8]);
        r.sign_match = f[9] == "true";
        out.push_back(r);
    }
    return out;
}

}  // namespace dcheb
