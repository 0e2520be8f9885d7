// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the trdpois C interface.
//
// Exit codes: 0 success, 2 invalid parameters or arguments, 3 convergence
// failure (requested tolerance cannot be certified), 4 verification mismatch.
#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trdpois.h"

using nlohmann::json;

namespace {

constexpr double kDefaultCoverageTail = 1e-10;
constexpr std::int64_t kMaxTableRows = 1000000;

int precision_from_env() {
    const char* env = std::getenv("TRDPOIS_PRECISION");
    if (env == nullptr) return 15;
    char* end = nullptr;
    const long p = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || p < 1 || p > 17) return 15;
    return static_cast<int>(p);
}

std::string fmt_g(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string fmt_g17(double v) { return fmt_g(v, 17); }

// Accepts "p/q" fractions alongside the usual decimal/scientific literals.
bool parse_real(const std::string& text, double* out) {
    const auto parse_plain = [](const std::string& s, double* value) {
        if (s.empty()) return false;
        errno = 0;
        char* end = nullptr;
        *value = std::strtod(s.c_str(), &end);
        return errno == 0 && end == s.c_str() + s.size();
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_plain(text, out);
    double num = 0.0;
    double den = 0.0;
    if (!parse_plain(text.substr(0, slash), &num) ||
        !parse_plain(text.substr(slash + 1), &den) || den == 0.0) {
        return false;
    }
    *out = num / den;
    return true;
}

bool parse_seed(const std::string& text, std::uint64_t* out) {
    if (text.empty()) return false;
    const bool hex = text.size() > 2 && text[0] == '0' &&
                     (text[1] == 'x' || text[1] == 'X');
    errno = 0;
    char* end = nullptr;
    *out = std::strtoull(text.c_str(), &end, hex ? 16 : 10);
    return errno == 0 && end == text.c_str() + text.size();
}

int status_to_exit(trdp_status st) {
    switch (st) {
        case TRDP_OK: return 0;
        case TRDP_ERR_CONVERGENCE: return 3;
        default: return 2;
    }
}

int fail(trdp_status st, const std::string& context) {
    std::cerr << "trdpois: " << context << ": " << trdp_status_name(st)
              << "\n";
    return status_to_exit(st);
}

// Output sink: --out file or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    int open(const std::string& path) {
        if (path.empty()) return 0;
        file.open(path);
        if (!file) {
            std::cerr << "trdpois: cannot open output file: " << path << "\n";
            return 2;
        }
        out = &file;
        return 0;
    }
    std::ostream& stream() { return *out; }
};

struct DistArgs {
    std::string lambda_text = "0";
    double alpha = 1.0;
    std::int32_t r = 0;

    void attach(CLI::App* sub) {
        sub->add_option("--lambda", lambda_text,
                        "degeneracy parameter (accepts p/q fractions)")
            ->required();
        sub->add_option("--alpha", alpha, "rate parameter, > 0")->required();
        sub->add_option("--r", r, "truncation order, >= 0")
            ->default_val("0");
    }

    bool lambda(double* out) const { return parse_real(lambda_text, out); }
};

int create_dist(const DistArgs& args, trdp_dist** out) {
    double lambda = 0.0;
    if (!args.lambda(&lambda)) {
        std::cerr << "trdpois: cannot parse --lambda value '"
                  << args.lambda_text << "'\n";
        return 2;
    }
    const trdp_status st = trdp_dist_create(lambda, args.alpha, args.r, out);
    if (st != TRDP_OK) {
        if (st == TRDP_ERR_INVALID_PARAMS) {
            char reason[256] = {0};
            trdp_domain kind = TRDP_DOMAIN_INVALID;
            int64_t m = 0;
            trdp_classify_domain(lambda, args.alpha, args.r, &kind, &m, reason,
                                 sizeof reason);
            std::cerr << "trdpois: invalid parameters: " << reason << "\n";
            return 2;
        }
        return fail(st, "creating distribution");
    }
    return 0;
}

void write_provenance(std::ostream& os, const std::string& command,
                      const std::string& params_line) {
    os << "# trdpois " << trdp_version() << " " << command << "\n";
    os << "# " << params_line << "\n";
}

// ---- pmf / cdf table ------------------------------------------------------

struct TableArgs {
    DistArgs dist;
    std::int64_t k_max = -1;
    double coverage_tail = kDefaultCoverageTail;
    std::string out_path;
};

int run_table(const char* name, const TableArgs& args) {
    trdp_dist* dist = nullptr;
    if (const int rc = create_dist(args.dist, &dist)) return rc;
    Sink sink;
    if (const int rc = sink.open(args.out_path)) {
        trdp_dist_free(dist);
        return rc;
    }
    const int prec = precision_from_env();
    std::ostream& os = sink.stream();
    write_provenance(os, name,
                     "lambda=" + fmt_g17(trdp_dist_lambda(dist)) +
                         " alpha=" + fmt_g17(trdp_dist_alpha(dist)) +
                         " r=" + std::to_string(trdp_dist_r(dist)));
    os << "k,pmf,cdf\n";

    const std::int64_t lo = trdp_dist_support_min(dist);
    const std::int64_t hi = trdp_dist_support_max(dist);  // -1 when unbounded
    std::int64_t k = lo;
    for (std::int64_t rows = 0; rows < kMaxTableRows; ++rows, ++k) {
        const double pmf = trdp_dist_pmf(dist, k);
        const double cdf = trdp_dist_cdf(dist, static_cast<double>(k));
        os << k << "," << fmt_g(pmf, prec) << "," << fmt_g(cdf, prec) << "\n";
        if (hi >= 0 && k >= hi) break;
        if (args.k_max >= 0) {
            if (k >= args.k_max) break;
        } else if (cdf >= 1.0 - args.coverage_tail) {
            break;
        }
    }
    trdp_dist_free(dist);
    return 0;
}

// ---- moments ----------------------------------------------------------------

struct MomentsArgs {
    DistArgs dist;
    std::int32_t order = 4;
    double tol = 1e-12;
    std::string out_path;
};

int run_moments(const MomentsArgs& args) {
    trdp_dist* dist = nullptr;
    if (const int rc = create_dist(args.dist, &dist)) return rc;
    Sink sink;
    if (const int rc = sink.open(args.out_path)) {
        trdp_dist_free(dist);
        return rc;
    }

    json doc;
    doc["lambda"] = trdp_dist_lambda(dist);
    doc["alpha"] = trdp_dist_alpha(dist);
    doc["r"] = trdp_dist_r(dist);
    doc["order"] = args.order;
    doc["oracle_tolerance"] = args.tol;
    doc["mean_closed_form"] = trdp_dist_mean(dist);
    doc["variance_closed_form"] = trdp_dist_variance(dist);
    doc["moments"] = json::array();
    for (std::int32_t n = 0; n <= args.order; ++n) {
        double closed = 0.0;
        trdp_status st = trdp_dist_moment(dist, n, &closed);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "moment order " + std::to_string(n));
        }
        double series = 0.0;
        st = trdp_oracle_series_moment(trdp_dist_lambda(dist),
                                       trdp_dist_alpha(dist),
                                       trdp_dist_r(dist), n, args.tol, &series);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "series moment order " + std::to_string(n));
        }
        const double scale = std::max(std::fabs(series), 1e-300);
        json entry;
        entry["order"] = n;
        entry["closed_form"] = closed;
        entry["oracle_series"] = series;
        entry["relative_deviation"] = std::fabs(closed - series) / scale;
        doc["moments"].push_back(entry);
    }
    sink.stream() << doc.dump(2) << "\n";
    trdp_dist_free(dist);
    return 0;
}

// ---- sample -----------------------------------------------------------------

struct SampleArgs {
    DistArgs dist;
    std::int64_t count = 10;
    std::string seed_text = "1";
    std::string out_path;
};

int run_sample(const SampleArgs& args) {
    std::uint64_t seed = 0;
    if (!parse_seed(args.seed_text, &seed)) {
        std::cerr << "trdpois: cannot parse --seed value '" << args.seed_text
                  << "'\n";
        return 2;
    }
    if (args.count < 0) {
        std::cerr << "trdpois: --count must be >= 0\n";
        return 2;
    }
    trdp_dist* dist = nullptr;
    if (const int rc = create_dist(args.dist, &dist)) return rc;
    trdp_sampler* sampler = nullptr;
    trdp_status st = trdp_sampler_create(dist, seed, &sampler);
    if (st != TRDP_OK) {
        trdp_dist_free(dist);
        return fail(st, "creating sampler");
    }
    std::vector<std::int64_t> values(static_cast<size_t>(args.count), 0);
    st = trdp_sampler_draw_batch(sampler, args.count, values.data());
    trdp_sampler_free(sampler);
    if (st != TRDP_OK) {
        trdp_dist_free(dist);
        return fail(st, "drawing batch");
    }

    Sink sink;
    if (const int rc = sink.open(args.out_path)) {
        trdp_dist_free(dist);
        return rc;
    }
    std::ostream& os = sink.stream();
    for (std::int64_t v : values) os << v << "\n";

    json footer;
    footer["lambda"] = trdp_dist_lambda(dist);
    footer["alpha"] = trdp_dist_alpha(dist);
    footer["r"] = trdp_dist_r(dist);
    footer["seed"] = seed;
    footer["count"] = args.count;
    if (values.empty()) {
        footer["mean"] = nullptr;
        footer["variance"] = nullptr;
        footer["min"] = nullptr;
        footer["max"] = nullptr;
    } else {
        double sum = 0.0;
        std::int64_t mn = values.front();
        std::int64_t mx = values.front();
        for (std::int64_t v : values) {
            sum += static_cast<double>(v);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        const double mean = sum / static_cast<double>(values.size());
        double ss = 0.0;
        for (std::int64_t v : values) {
            const double d = static_cast<double>(v) - mean;
            ss += d * d;
        }
        footer["mean"] = mean;
        footer["variance"] = ss / static_cast<double>(values.size());
        footer["min"] = mn;
        footer["max"] = mx;
    }
    os << "# " << footer.dump() << "\n";
    trdp_dist_free(dist);
    return 0;
}

// ---- stirling ----------------------------------------------------------------

struct StirlingArgs {
    std::string lambda_text = "0";
    std::int32_t r = 0;
    std::int32_t k = 1;
    std::int32_t n_max = 10;
    bool with_exact = false;
    std::string out_path;
};

int run_stirling(const StirlingArgs& args) {
    double lambda = 0.0;
    if (!parse_real(args.lambda_text, &lambda)) {
        std::cerr << "trdpois: cannot parse --lambda value '"
                  << args.lambda_text << "'\n";
        return 2;
    }
    std::vector<double> values(static_cast<size_t>(args.n_max) + 1, 0.0);
    int32_t warn = 0;
    trdp_status st = trdp_stirling_r_truncated(lambda, args.r, args.k,
                                               args.n_max, values.data(),
                                               &warn);
    if (st != TRDP_OK) return fail(st, "stirling sequence");

    std::vector<double> exact;
    if (args.with_exact) {
        exact.assign(static_cast<size_t>(args.n_max) + 1, 0.0);
        st = trdp_oracle_stirling_exact(args.lambda_text.c_str(), args.r,
                                        args.k, args.n_max, exact.data());
        if (st != TRDP_OK) return fail(st, "exact stirling oracle");
    }

    Sink sink;
    if (const int rc = sink.open(args.out_path)) return rc;
    const int prec = precision_from_env();
    std::ostream& os = sink.stream();
    write_provenance(os, "stirling",
                     "lambda=" + fmt_g17(lambda) +
                         " r=" + std::to_string(args.r) +
                         " k=" + std::to_string(args.k) +
                         " n_max=" + std::to_string(args.n_max));
    if (warn != 0) {
        os << "# warning: magnitudes exceeded 1e300; entries may be inf\n";
    }
    os << (args.with_exact ? "n,k,value,exact_value,relative_deviation\n"
                           : "n,k,value\n");
    for (std::int32_t n = 0; n <= args.n_max; ++n) {
        os << n << "," << args.k << ","
           << fmt_g(values[static_cast<size_t>(n)], prec);
        if (args.with_exact) {
            const double e = exact[static_cast<size_t>(n)];
            const double v = values[static_cast<size_t>(n)];
            const double scale =
                std::max(std::max(std::fabs(e), std::fabs(v)), 1e-300);
            os << "," << fmt_g(e, prec) << ","
               << fmt_g(std::fabs(v - e) / scale, prec);
        }
        os << "\n";
    }
    return 0;
}

// ---- bell ---------------------------------------------------------------------

struct BellArgs {
    std::string lambda_text = "0";
    double x = 1.0;
    std::int32_t n_max = 10;
    double tol = 1e-12;
    std::string out_path;
};

int run_bell(const BellArgs& args) {
    double lambda = 0.0;
    if (!parse_real(args.lambda_text, &lambda)) {
        std::cerr << "trdpois: cannot parse --lambda value '"
                  << args.lambda_text << "'\n";
        return 2;
    }
    std::vector<double> values(static_cast<size_t>(args.n_max) + 1, 0.0);
    for (std::int32_t n = 0; n <= args.n_max; ++n) {
        const trdp_status st = trdp_degenerate_bell(
            n, args.x, lambda, args.tol, &values[static_cast<size_t>(n)]);
        if (st != TRDP_OK) {
            return fail(st, "bell order " + std::to_string(n));
        }
    }
    Sink sink;
    if (const int rc = sink.open(args.out_path)) return rc;
    const int prec = precision_from_env();
    std::ostream& os = sink.stream();
    write_provenance(os, "bell",
                     "lambda=" + fmt_g17(lambda) + " x=" + fmt_g17(args.x) +
                         " n_max=" + std::to_string(args.n_max));
    os << "n,value\n";
    for (std::int32_t n = 0; n <= args.n_max; ++n) {
        os << n << "," << fmt_g(values[static_cast<size_t>(n)], prec) << "\n";
    }
    return 0;
}

// ---- sum-dist -----------------------------------------------------------------

struct SumArgs {
    DistArgs dist;
    std::int32_t k = 2;
    std::int64_t n_max = 30;
    std::string out_path;
};

int run_sum(const SumArgs& args) {
    trdp_dist* dist = nullptr;
    if (const int rc = create_dist(args.dist, &dist)) return rc;
    std::vector<double> masses(static_cast<size_t>(args.n_max) + 1, 0.0);
    int32_t warn = 0;
    trdp_status st =
        trdp_dist_sum_pmf(dist, args.k, args.n_max, masses.data(), &warn);
    if (st != TRDP_OK) {
        trdp_dist_free(dist);
        return fail(st, "sum distribution");
    }
    std::vector<double> conv(static_cast<size_t>(args.n_max) + 1, 0.0);
    st = trdp_oracle_convolve_pmf(dist, args.k, args.n_max, conv.data());
    if (st != TRDP_OK) {
        trdp_dist_free(dist);
        return fail(st, "convolution oracle");
    }

    Sink sink;
    if (const int rc = sink.open(args.out_path)) {
        trdp_dist_free(dist);
        return rc;
    }
    const int prec = precision_from_env();
    std::ostream& os = sink.stream();
    write_provenance(os, "sum-dist",
                     "lambda=" + fmt_g17(trdp_dist_lambda(dist)) +
                         " alpha=" + fmt_g17(trdp_dist_alpha(dist)) +
                         " r=" + std::to_string(trdp_dist_r(dist)) +
                         " k=" + std::to_string(args.k) +
                         " n_max=" + std::to_string(args.n_max));
    if (warn != 0) {
        os << "# warning: magnitudes exceeded 1e300; entries may be inf\n";
    }
    os << "n,mass,oracle_convolution,relative_deviation\n";
    for (std::int64_t n = 0; n <= args.n_max; ++n) {
        const double m = masses[static_cast<size_t>(n)];
        const double c = conv[static_cast<size_t>(n)];
        const double scale =
            std::max(std::max(std::fabs(m), std::fabs(c)), 1e-300);
        os << n << "," << fmt_g(m, prec) << "," << fmt_g(c, prec) << ","
           << fmt_g(std::fabs(m - c) / scale, prec) << "\n";
    }
    trdp_dist_free(dist);
    return 0;
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
    DistArgs dist;
    double tol = 1e-9;
    std::string out_path;
};

struct Check {
    std::string name;
    double deviation = 0.0;
    bool pass = false;
};

int run_verify(const VerifyArgs& args) {
    trdp_dist* dist = nullptr;
    if (const int rc = create_dist(args.dist, &dist)) return rc;
    // The oracle runs 1000x tighter than the pass threshold; thresholds whose
    // oracle tolerance falls below the certifiable floor are refused (exit 3).
    const double otol = args.tol * 1e-3;
    const double lambda = trdp_dist_lambda(dist);
    const double alpha = trdp_dist_alpha(dist);
    const std::int32_t r = trdp_dist_r(dist);

    std::vector<Check> checks;
    const auto add = [&](const std::string& name, double dev) {
        checks.push_back({name, dev, dev <= args.tol});
    };

    // normalization: pmf walk against 1
    {
        const std::int64_t lo = trdp_dist_support_min(dist);
        const std::int64_t hi = trdp_dist_support_max(dist);
        double sum = 0.0;
        for (std::int64_t k = lo; k - lo < kMaxTableRows; ++k) {
            const double p = trdp_dist_pmf(dist, k);
            sum += p;
            if (p == 0.0 || (hi >= 0 && k >= hi)) break;
        }
        add("normalization", std::fabs(sum - 1.0));
    }

    // closed forms against the independent series route
    {
        double series = 0.0;
        trdp_status st =
            trdp_oracle_series_moment(lambda, alpha, r, 1, otol, &series);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "series moment order 1");
        }
        add("mean_closed_vs_series",
            std::fabs(trdp_dist_mean(dist) - series) /
                std::max(std::fabs(series), 1e-300));

        double second = 0.0;
        st = trdp_oracle_series_moment(lambda, alpha, r, 2, otol, &second);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "series moment order 2");
        }
        const double var_series = second - series * series;
        add("variance_closed_vs_series",
            std::fabs(trdp_dist_variance(dist) - var_series) /
                std::max(std::fabs(var_series), 1e-300));

        double worst = 0.0;
        for (std::int32_t n = 1; n <= 4; ++n) {
            double closed = 0.0;
            double oracle = 0.0;
            st = trdp_dist_moment(dist, n, &closed);
            if (st == TRDP_OK) {
                st = trdp_oracle_series_moment(lambda, alpha, r, n, otol,
                                               &oracle);
            }
            if (st != TRDP_OK) {
                trdp_dist_free(dist);
                return fail(st, "moment order " + std::to_string(n));
            }
            worst = std::max(worst, std::fabs(closed - oracle) /
                                        std::max(std::fabs(oracle), 1e-300));
        }
        add("moments_bell_vs_series", worst);
    }

    // cdf increments against the pmf (absolute deviation)
    {
        const std::int64_t lo = trdp_dist_support_min(dist);
        const std::int64_t hi = trdp_dist_support_max(dist);
        std::int64_t end = lo + 30;
        if (hi >= 0) end = std::min(end, hi);
        double worst = 0.0;
        double prev = 0.0;
        for (std::int64_t k = lo; k <= end; ++k) {
            const double cur = trdp_dist_cdf(dist, static_cast<double>(k));
            worst = std::max(
                worst, std::fabs(cur - prev - trdp_dist_pmf(dist, k)));
            prev = cur;
        }
        add("cdf_pmf_consistency", worst);
    }

    // pgf: value at 1 and central-difference slope against the mean
    {
        double at1 = 0.0;
        trdp_status st = trdp_dist_pgf(dist, 1.0, &at1);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "pgf at 1");
        }
        add("pgf_at_one", std::fabs(at1 - 1.0));

        const double h = 1e-6;
        double up = 0.0;
        double down = 0.0;
        st = trdp_dist_pgf(dist, 1.0 + h, &up);
        if (st == TRDP_OK) st = trdp_dist_pgf(dist, 1.0 - h, &down);
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "pgf near 1");
        }
        const double slope = (up - down) / (2.0 * h);
        const double mean = trdp_dist_mean(dist);
        add("pgf_slope_vs_mean",
            std::fabs(slope - mean) / std::max(std::fabs(mean), 1e-300));
    }

    // two-fold sum against brute-force convolution
    if (2 * (static_cast<std::int64_t>(r) + 1) <= 30) {
        const std::int64_t n_max = 30;
        std::vector<double> masses(static_cast<size_t>(n_max) + 1, 0.0);
        std::vector<double> conv(static_cast<size_t>(n_max) + 1, 0.0);
        trdp_status st =
            trdp_dist_sum_pmf(dist, 2, n_max, masses.data(), nullptr);
        if (st == TRDP_OK) {
            st = trdp_oracle_convolve_pmf(dist, 2, n_max, conv.data());
        }
        if (st != TRDP_OK) {
            trdp_dist_free(dist);
            return fail(st, "sum distribution check");
        }
        double worst = 0.0;
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const double scale = std::max(
                std::max(std::fabs(masses[static_cast<size_t>(n)]),
                         std::fabs(conv[static_cast<size_t>(n)])),
                1e-300);
            worst = std::max(worst,
                             std::fabs(masses[static_cast<size_t>(n)] -
                                       conv[static_cast<size_t>(n)]) /
                                 scale);
        }
        add("sum_vs_convolution", worst);
    }

    bool all_pass = true;
    json doc;
    doc["lambda"] = lambda;
    doc["alpha"] = alpha;
    doc["r"] = r;
    doc["threshold"] = args.tol;
    doc["oracle_tolerance"] = otol;
    doc["checks"] = json::array();
    for (const Check& c : checks) {
        json entry;
        entry["check"] = c.name;
        entry["deviation"] = c.deviation;
        entry["pass"] = c.pass;
        entry["threshold"] = args.tol;
        doc["checks"].push_back(entry);
        all_pass = all_pass && c.pass;
    }
    doc["pass"] = all_pass;

    Sink sink;
    if (const int rc = sink.open(args.out_path)) {
        trdp_dist_free(dist);
        return rc;
    }
    sink.stream() << doc.dump(2) << "\n";
    trdp_dist_free(dist);
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "r-truncated degenerate Poisson distributions: tables, moments, "
        "special numbers, sampling, and self-verification"};
    app.require_subcommand(1);
    int rc = 0;

    TableArgs pmf_args;
    auto* pmf_cmd = app.add_subcommand(
        "pmf", "probability mass table (k, pmf, cdf)");
    pmf_args.dist.attach(pmf_cmd);
    pmf_cmd->add_option("--k-max", pmf_args.k_max,
                        "last support point to print (default: coverage cut)");
    pmf_cmd->add_option("--coverage-tail", pmf_args.coverage_tail,
                        "stop once cdf >= 1 - this tail")
        ->default_val("1e-10");
    pmf_cmd->add_option("--out", pmf_args.out_path, "write to file");
    pmf_cmd->callback([&] { rc = run_table("pmf", pmf_args); });

    TableArgs cdf_args;
    auto* cdf_cmd = app.add_subcommand(
        "cdf", "cumulative table; same columns as pmf");
    cdf_args.dist.attach(cdf_cmd);
    cdf_cmd->add_option("--k-max", cdf_args.k_max,
                        "last support point to print (default: coverage cut)");
    cdf_cmd->add_option("--coverage-tail", cdf_args.coverage_tail,
                        "stop once cdf >= 1 - this tail")
        ->default_val("1e-10");
    cdf_cmd->add_option("--out", cdf_args.out_path, "write to file");
    cdf_cmd->callback([&] { rc = run_table("cdf", cdf_args); });

    MomentsArgs moments_args;
    auto* moments_cmd = app.add_subcommand(
        "moments", "closed-form moments against the series oracle (JSON)");
    moments_args.dist.attach(moments_cmd);
    moments_cmd->add_option("--order", moments_args.order,
                            "highest moment order")
        ->default_val("4");
    moments_cmd
        ->add_option("--tol", moments_args.tol, "oracle series tolerance")
        ->default_val("1e-12");
    moments_cmd->add_option("--out", moments_args.out_path, "write to file");
    moments_cmd->callback([&] { rc = run_moments(moments_args); });

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand(
        "sample", "draw values (one per line) with a JSON stats footer");
    sample_args.dist.attach(sample_cmd);
    sample_cmd->add_option("--count", sample_args.count, "number of draws")
        ->default_val("10");
    sample_cmd->add_option("--seed", sample_args.seed_text,
                           "decimal or 0x-prefixed hex seed")
        ->default_val("1");
    sample_cmd->add_option("--out", sample_args.out_path, "write to file");
    sample_cmd->callback([&] { rc = run_sample(sample_args); });

    StirlingArgs stirling_args;
    auto* stirling_cmd = app.add_subcommand(
        "stirling", "r-truncated degenerate Stirling numbers");
    stirling_cmd
        ->add_option("--lambda", stirling_args.lambda_text,
                     "degeneracy parameter (p/q kept exact for --exact)")
        ->required();
    stirling_cmd->add_option("--r", stirling_args.r, "truncation order")
        ->default_val("0");
    stirling_cmd->add_option("--k", stirling_args.k, "number of blocks")
        ->required();
    stirling_cmd->add_option("--n-max", stirling_args.n_max, "last order")
        ->default_val("10");
    stirling_cmd->add_flag("--exact", stirling_args.with_exact,
                           "add the exact-rational oracle column");
    stirling_cmd->add_option("--out", stirling_args.out_path, "write to file");
    stirling_cmd->callback([&] { rc = run_stirling(stirling_args); });

    BellArgs bell_args;
    auto* bell_cmd = app.add_subcommand(
        "bell", "degenerate Bell polynomial values Bel_n(x)");
    bell_cmd
        ->add_option("--lambda", bell_args.lambda_text, "degeneracy parameter")
        ->required();
    bell_cmd->add_option("--x", bell_args.x, "evaluation point, > 0")
        ->required();
    bell_cmd->add_option("--n-max", bell_args.n_max, "last order")
        ->default_val("10");
    bell_cmd->add_option("--tol", bell_args.tol, "series tolerance")
        ->default_val("1e-12");
    bell_cmd->add_option("--out", bell_args.out_path, "write to file");
    bell_cmd->callback([&] { rc = run_bell(bell_args); });

    SumArgs sum_args;
    auto* sum_cmd = app.add_subcommand(
        "sum-dist", "k-fold i.i.d. sum masses with the convolution oracle");
    sum_args.dist.attach(sum_cmd);
    sum_cmd->add_option("--k", sum_args.k, "number of copies")->required();
    sum_cmd->add_option("--n-max", sum_args.n_max, "last sum value")
        ->default_val("30");
    sum_cmd->add_option("--out", sum_args.out_path, "write to file");
    sum_cmd->callback([&] { rc = run_sum(sum_args); });

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand(
        "verify", "cross-check all routes at one parameter point (JSON)");
    verify_args.dist.attach(verify_cmd);
    verify_cmd->add_option("--tol", verify_args.tol, "pass threshold")
        ->default_val("1e-9");
    verify_cmd->add_option("--out", verify_args.out_path, "write to file");
    verify_cmd->callback([&] { rc = run_verify(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
