#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcheb/asymptotic.hpp"
#include "dcheb/regime.hpp"
#include "dcheb/signed_log.hpp"

namespace dcheb {

// Largest degree the exact oracle is asked to evaluate.
inline constexpr long kExactDegreeGuard = 50000;

struct ErrorRecord {
    long n = 0, x = 0, capN = 0;
    Regime regime = Regime::ExactFallback;
    SignedLog exact, approx;
    double rel_err = 0;
    bool sign_match = true;
    RegimeConstants constants;
    std::string error;  // non-empty when the point could not be evaluated

    // Equality over the emitted columns.
    bool same_columns(const ErrorRecord& o) const;
};

struct SweepSpec {
    std::string name;
    Regime intended = Regime::ExactFallback;
    std::vector<long> N_list;
    std::function<std::pair<long, long>(long)> rule;  // N -> (n, first x)
    int x_jitter = 5;
    int x_step = 1;  // direction of the adjacent x values
    Thresholds thresholds;
};

// Canonical limit paths: bessel, kummer, airy, gamma-neg, fixed-b.
SweepSpec canonical_path(std::string_view name);
std::vector<std::string> canonical_path_names();

ErrorRecord compare(const PolyTriple& p, const Thresholds& t, std::optional<Regime> regime_override = std::nullopt,
                    long series_terms = -1);

// One record per (N, jittered x) in deterministic order; per-point failures are recorded, not thrown.
std::vector<ErrorRecord> sweep(const SweepSpec& s, unsigned threads = 0);

struct PathLevel {
    long capN = 0;
    double median_rel_err = 0;
    bool all_signs_match = true;
    std::size_t count = 0;
};

// Median over the jittered x values at each N, in N order.
std::vector<PathLevel> summarize(const std::vector<ErrorRecord>& records);
double median(std::vector<double> v);

// Least-squares slope of ln(median rel_err) against ln N.
double convergence_order(const std::vector<ErrorRecord>& records);

enum class Format { csv, json };
std::optional<Format> parse_format(std::string_view s);

void emit_csv(const std::vector<ErrorRecord>& records, std::ostream& out);
void emit_json(const std::vector<ErrorRecord>& records, std::ostream& out);
void emit(const std::vector<ErrorRecord>& records, Format f, std::ostream& out);
void emit(const std::vector<ErrorRecord>& records, Format f, const std::filesystem::path& file);

std::vector<ErrorRecord> parse_csv(std::istream& in);
std::vector<ErrorRecord> parse_json(std::istream& in);

// Shortest text that reads back to the same double; integral values keep a trailing ".0".
std::string format_real(double v);

}  // namespace dcheb
