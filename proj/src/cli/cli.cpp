#include "cubecurve/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubecurve/counting.hpp"
#include "cubecurve/curve.hpp"
#include "cubecurve/identities.hpp"
#include "cubecurve/zeta.hpp"

namespace cubecurve::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string command;
    i64 p = 0;
    i64 a = 0;
    std::vector<i64> range;
    int r_max = 1;
    Format format = Format::Text;
    bool parallel = false;
    std::size_t workers = 0;
    std::optional<u64> cap_flag;
    u64 enumeration_cap = kDefaultEnumerationCap;
};

struct Failure {
    std::string check;
    u64 p = 0;
    u64 a = 0;  // 0 for per-prime checks
    std::string detail;

    friend bool operator<(const Failure& l, const Failure& r) {
        return std::tie(l.p, l.a, l.check, l.detail) < std::tie(r.p, r.a, r.check, r.detail);
    }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

json failures_json(const std::vector<Failure>& failures) {
    json arr = json::array();
    for (const Failure& f : failures) {
        arr.push_back({{"check", f.check},
                       {"p", f.p},
                       {"a", f.a == 0 ? json(nullptr) : json(f.a)},
                       {"detail", f.detail}});
    }
    return arr;
}

void emit_json(std::ostream& out, const RunConfig& cfg, json params, json result,
               const std::vector<Failure>& failures) {
    json doc;
    doc["command"] = cfg.command;
    doc["params"] = std::move(params);
    doc["result"] = std::move(result);
    doc["failures"] = failures_json(failures);
    out << doc.dump(2) << '\n';
}

void text_failures(std::ostream& out, const std::vector<Failure>& failures) {
    for (const Failure& f : failures) {
        out << "FAIL " << f.check << " p=" << f.p;
        if (f.a != 0) out << " a=" << f.a;
        out << ": " << f.detail << '\n';
    }
}

std::string curve_label(const CurveParams& c) {
    return "y^2 = x^3 + " + std::to_string(c.a().value()) + "^3 over F_" + std::to_string(c.p());
}

// count ---------------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const CurveParams c = new_curve(cfg.p, cfg.a);
    const CountReport r = count_report(c, cfg.enumeration_cap);

    std::vector<Failure> failures;
    if (!r.methods_agree()) {
        std::ostringstream d;
        d << "enum=" << (r.n_enum ? std::to_string(*r.n_enum) : "skipped") << " quad=" << r.n_quad
          << " rho=" << r.n_rho << " cubic=" << r.n_cubic;
        failures.push_back({"method_agreement", r.p, r.a, d.str()});
    }
    if (!r.hasse_ok) {
        failures.push_back({"hasse", r.p, r.a, "delta=" + std::to_string(r.delta)});
    }

    switch (cfg.format) {
        case Format::Json:
            emit_json(out, cfg, {{"p", r.p}, {"a", r.a}, {"enumeration_cap", cfg.enumeration_cap}},
                      {{"p", r.p},
                       {"a", r.a},
                       {"n_enum", r.n_enum ? json(*r.n_enum) : json(nullptr)},
                       {"n_quad", r.n_quad},
                       {"n_rho", r.n_rho},
                       {"n_cubic", r.n_cubic},
                       {"n", r.n()},
                       {"delta", r.delta},
                       {"hasse_ok", r.hasse_ok},
                       {"methods_agree", r.methods_agree()}},
                      failures);
            break;
        case Format::Csv:
            out << "p,a,n_enum,n_quad,n_rho,n_cubic,n,delta,hasse_ok,methods_agree\n";
            out << r.p << ',' << r.a << ',' << (r.n_enum ? std::to_string(*r.n_enum) : "") << ','
                << r.n_quad << ',' << r.n_rho << ',' << r.n_cubic << ',' << r.n() << ',' << r.delta
                << ',' << bool_str(r.hasse_ok) << ',' << bool_str(r.methods_agree()) << '\n';
            for (const Failure& f : failures) out << "# failure," << f.check << ',' << csv_field(f.detail) << '\n';
            break;
        case Format::Text:
            out << "curve: " << curve_label(c) << '\n'
                << "n_enum: " << (r.n_enum ? std::to_string(*r.n_enum) : "skipped") << '\n'
                << "n_quad: " << r.n_quad << '\n'
                << "n_rho: " << r.n_rho << '\n'
                << "n_cubic: " << r.n_cubic << '\n'
                << "n: " << r.n() << '\n'
                << "delta: " << r.delta << '\n'
                << "hasse_ok: " << bool_str(r.hasse_ok) << '\n'
                << "methods_agree: " << bool_str(r.methods_agree()) << '\n';
            text_failures(out, failures);
            break;
    }
    return failures.empty() ? kSuccess : kVerificationFailure;
}

// points --------------------------------------------------------------------

int cmd_points(const RunConfig& cfg, std::ostream& out) {
    const CurveParams c = new_curve(cfg.p, cfg.a);
    const PointSet points = enumerate_points(c, cfg.enumeration_cap);

    switch (cfg.format) {
        case Format::Json: {
            json arr = json::array();
            for (const Point& pt : points) {
                arr.push_back(pt.is_infinity() ? json("O") : json::array({pt.x, pt.y}));
            }
            emit_json(out, cfg, {{"p", c.p()}, {"a", c.a().value()}},
                      {{"n", points.size()}, {"points", std::move(arr)}}, {});
            break;
        }
        case Format::Csv:
            out << "x,y\n";
            for (const Point& pt : points) {
                if (pt.is_infinity()) {
                    out << "O,\n";
                } else {
                    out << pt.x << ',' << pt.y << '\n';
                }
            }
            break;
        case Format::Text:
            for (const Point& pt : points) out << to_string(pt) << '\n';
            break;
    }
    return kSuccess;
}

// verify --------------------------------------------------------------------

struct PrimeOutcome {
    u64 checks_run = 0;
    std::vector<Failure> failures;
};

PrimeOutcome verify_prime(u64 p, u64 cap) {
    PrimeOutcome outcome;
    auto check = [&](bool ok, const char* name, u64 a, auto&& detail) {
        ++outcome.checks_run;
        if (!ok) outcome.failures.push_back({name, p, a, detail()});
    };
    const i64 ip = static_cast<i64>(p);
    const bool enumerate = p <= cap;

    // Cube-root sums vanish for every t.
    {
        std::optional<u64> bad_t;
        for (u64 t = 0; t < p && !bad_t; ++t) {
            if (identities::cube_root_sum(static_cast<i64>(t), ip) != 0) bad_t = t;
        }
        check(!bad_t, "cube_root_sum", 0, [&] { return "nonzero sum at t=" + std::to_string(*bad_t); });
    }

    const u64 n_base = count_quadratic_sum(new_curve(ip, 1));
    u64 family_total = 0;
    for (u64 a = 1; a < p; ++a) {
        const CurveParams c = new_curve(ip, static_cast<i64>(a));
        const CountReport r = count_report(c, cap);
        family_total += r.n_quad;

        check(r.methods_agree(), "method_agreement", a, [&] {
            return "enum=" + (r.n_enum ? std::to_string(*r.n_enum) : std::string("skipped")) +
                   " quad=" + std::to_string(r.n_quad) + " rho=" + std::to_string(r.n_rho) +
                   " cubic=" + std::to_string(r.n_cubic);
        });
        check(r.hasse_ok, "hasse", a, [&] { return "delta=" + std::to_string(r.delta); });
        check(r.n_quad <= 2 * p + 1, "count_bound", a, [&] { return "n=" + std::to_string(r.n_quad); });

        const identities::AbscissaSums sums = identities::abscissa_sums(ip, static_cast<i64>(a), cap);
        check(sums.j_div_p, "j_divisible", a, [&] { return "j=" + std::to_string(sums.j); });
        check(sums.s_div_p, "s_divisible", a, [&] { return "s=" + std::to_string(sums.s); });

        // Twist relation, with the left side from enumeration when available.
        const i64 n_a = static_cast<i64>(r.n_enum.value_or(r.n_quad));
        const i64 lhs = n_a - ip - 1;
        const i64 rhs = value_of(legendre_symbol(c.b())) * (static_cast<i64>(n_base) - ip - 1);
        check(lhs == rhs, "twist_relation", a,
              [&] { return "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs); });

        if (enumerate) {
            const PointSet points = enumerate_points(c, cap);
            std::vector<u64> by_ordinate(p, 0);
            u64 on_axis = 0;
            for (const Point& pt : points) {
                if (pt.is_infinity()) continue;
                by_ordinate[pt.y] = add_mod(by_ordinate[pt.y], pt.x, p);
                if (pt.x == 0) ++on_axis;
            }
            const auto bad = std::find_if(by_ordinate.begin(), by_ordinate.end(), [](u64 s) { return s != 0; });
            check(bad == by_ordinate.end(), "same_ordinate_sum", a, [&] {
                return "nonzero sum at y=" + std::to_string(bad - by_ordinate.begin());
            });
            const u64 expected_axis = legendre_symbol(c.a()) == QuadChar::Plus ? 2 : 0;
            const u64 reported_axis = y_axis_points(c).size();
            check(on_axis == expected_axis && reported_axis == expected_axis, "y_axis_points", a, [&] {
                return "enumerated=" + std::to_string(on_axis) + " reported=" + std::to_string(reported_axis) +
                       " expected=" + std::to_string(expected_axis);
            });
        }
    }
    check(family_total == p * p - 1, "family_total", 0, [&] {
        return "total=" + std::to_string(family_total) + " expected=" + std::to_string(p * p - 1);
    });
    return outcome;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const i64 lo = cfg.range[0], hi = cfg.range[1];
    if (lo > hi) throw UsageError("--range requires lo <= hi");
    if (lo < 0) throw UsageError("--range bounds must be nonnegative");

    std::vector<u64> primes;
    for (i64 n = lo; n <= hi; ++n) {
        if (is_prime_1mod6(static_cast<u64>(n))) primes.push_back(static_cast<u64>(n));
    }

    std::vector<PrimeOutcome> outcomes(primes.size());
    std::size_t workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(primes.size(), 1));
    if (!cfg.parallel || workers <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) outcomes[i] = verify_prime(primes[i], cfg.enumeration_cap);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = next++; i < primes.size(); i = next++) {
                            outcomes[i] = verify_prime(primes[i], cfg.enumeration_cap);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    u64 checks_run = 0;
    std::vector<Failure> failures;
    for (PrimeOutcome& o : outcomes) {
        checks_run += o.checks_run;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }

    // The p = 11 counterexample must fail divisibility. Reported separately,
    // not counted among checks_run.
    const identities::AbscissaSums cx = identities::counterexample_report();
    if (cx.j != 56 || cx.s != 1 || cx.j_div_p || cx.s_div_p) {
        failures.push_back({"counterexample", cx.p, cx.a,
                            "j=" + std::to_string(cx.j) + " s=" + std::to_string(cx.s)});
    }
    std::sort(failures.begin(), failures.end());

    switch (cfg.format) {
        case Format::Json:
            emit_json(out, cfg, {{"range", {lo, hi}}, {"enumeration_cap", cfg.enumeration_cap}},
                      {{"primes", primes},
                       {"checks_run", checks_run},
                       {"counterexample",
                        {{"p", cx.p}, {"a", cx.a}, {"j", cx.j}, {"s", cx.s},
                         {"j_div_p", cx.j_div_p}, {"s_div_p", cx.s_div_p}}}},
                      failures);
            break;
        case Format::Csv:
            out << "check,p,a,detail\n";
            for (const Failure& f : failures) {
                out << f.check << ',' << f.p << ',' << (f.a ? std::to_string(f.a) : "") << ','
                    << csv_field(f.detail) << '\n';
            }
            out << "# primes," << primes.size() << '\n'
                << "# checks_run," << checks_run << '\n'
                << "# failures," << failures.size() << '\n'
                << "# counterexample,p=" << cx.p << ",a=" << cx.a << ",j=" << cx.j << ",s=" << cx.s << '\n';
            break;
        case Format::Text:
            out << "primes: " << primes.size() << '\n'
                << "checks_run: " << checks_run << '\n'
                << "failures: " << failures.size() << '\n'
                << "counterexample (p=11, a=1): j=" << cx.j << " s=" << cx.s
                << " j_div_p=" << bool_str(cx.j_div_p) << " s_div_p=" << bool_str(cx.s_div_p) << '\n';
            text_failures(out, failures);
            break;
    }
    return failures.empty() ? kSuccess : kVerificationFailure;
}

// sweep ---------------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    identities::SweepOptions options;
    options.parallel = cfg.parallel;
    options.workers = cfg.workers;
    options.cap = cfg.enumeration_cap;
    const identities::FamilySweep sweep = identities::family_sweep(cfg.p, options);

    std::vector<Failure> failures;
    if (!sweep.total_ok()) {
        failures.push_back({"family_total", sweep.p, 0,
                            "total=" + std::to_string(sweep.total) +
                                " expected=" + std::to_string(sweep.expected_total())});
    }
    const auto delta = [&](std::size_t i) {
        return static_cast<i64>(sweep.counts[i]) - static_cast<i64>(sweep.p) - 1;
    };

    switch (cfg.format) {
        case Format::Json: {
            json rows = json::array();
            for (std::size_t i = 0; i < sweep.counts.size(); ++i) {
                rows.push_back({{"a", i + 1}, {"n", sweep.counts[i]}, {"delta", delta(i)}});
            }
            emit_json(out, cfg, {{"p", sweep.p}},
                      {{"counts", std::move(rows)},
                       {"total", sweep.total},
                       {"expected", sweep.expected_total()},
                       {"ok", sweep.total_ok()}},
                      failures);
            break;
        }
        case Format::Csv:
            out << "a,n,delta\n";
            for (std::size_t i = 0; i < sweep.counts.size(); ++i) {
                out << i + 1 << ',' << sweep.counts[i] << ',' << delta(i) << '\n';
            }
            out << "# total," << sweep.total << '\n' << "# expected," << sweep.expected_total() << '\n';
            break;
        case Format::Text:
            for (std::size_t i = 0; i < sweep.counts.size(); ++i) {
                out << "a=" << i + 1 << " n=" << sweep.counts[i] << " delta=" << delta(i) << '\n';
            }
            out << "total: " << sweep.total << '\n' << "expected: " << sweep.expected_total() << '\n';
            text_failures(out, failures);
            break;
    }
    return failures.empty() ? kSuccess : kVerificationFailure;
}

// zeta ----------------------------------------------------------------------

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
    const CurveParams c = new_curve(cfg.p, cfg.a);
    const u64 n1 = count_quadratic_sum(c);
    const ZetaData z = zeta_from_count(static_cast<i64>(c.p()), static_cast<i64>(n1));
    const std::vector<i64> counts = lift_counts(z, cfg.r_max);

    switch (cfg.format) {
        case Format::Json:
            emit_json(out, cfg, {{"p", c.p()}, {"a", c.a().value()}, {"r_max", cfg.r_max}},
                      {{"q", z.q},
                       {"trace", z.trace},
                       {"numerator", numerator_render(z)},
                       {"numerator_coefficients", z.numerator},
                       {"zeta", zeta_rational_render(z)},
                       {"counts", counts}},
                      {});
            break;
        case Format::Csv:
            out << "r,n\n";
            for (std::size_t i = 0; i < counts.size(); ++i) out << i + 1 << ',' << counts[i] << '\n';
            out << "# trace," << z.trace << '\n' << "# zeta," << zeta_rational_render(z) << '\n';
            break;
        case Format::Text:
            out << "curve: " << curve_label(c) << '\n'
                << "trace: " << z.trace << '\n'
                << "Z(T) = " << zeta_rational_render(z) << '\n';
            for (std::size_t i = 0; i < counts.size(); ++i) out << "N_" << i + 1 << " = " << counts[i] << '\n';
            break;
    }
    return kSuccess;
}

// primes --------------------------------------------------------------------

int cmd_primes(const RunConfig& cfg, std::ostream& out) {
    const i64 lo = cfg.range[0], hi = cfg.range[1];
    if (lo > hi) throw UsageError("--range requires lo <= hi");
    if (lo < 0) throw UsageError("--range bounds must be nonnegative");

    std::vector<u64> primes;
    u64 n = static_cast<u64>(lo);
    n += (7 - n % 6) % 6;  // first n >= lo with n = 1 (mod 6)
    for (; n <= static_cast<u64>(hi); n += 6) {
        if (is_prime_1mod6(n)) primes.push_back(n);
    }

    switch (cfg.format) {
        case Format::Json:
            emit_json(out, cfg, {{"range", {lo, hi}}}, {{"primes", primes}}, {});
            break;
        case Format::Csv:
            out << "p\n";
            for (u64 p : primes) out << p << '\n';
            break;
        case Format::Text:
            for (u64 p : primes) out << p << '\n';
            break;
    }
    return kSuccess;
}

std::optional<u64> cap_from_env() {
    const char* raw = std::getenv("CUBECURVE_CAP");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(raw).size() || raw[0] == '-') {
        throw UsageError(std::string("CUBECURVE_CAP is not a nonnegative integer: ") + raw);
    }
    return static_cast<u64>(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Point counts and identities for y^2 = x^3 + a^3 over F_p, p = 1 (mod 6)", "cubecurve"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_flag("--parallel", cfg.parallel, "Spread work across threads");
        sub->add_option("--workers", cfg.workers, "Worker threads (0 = hardware)");
        sub->add_option("--enumeration-cap", cfg.cap_flag, "Largest p for point enumeration");
    };
    auto curve_args = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "Prime modulus")->required();
        sub->add_option("--a", cfg.a, "Curve parameter a")->required();
    };
    auto range_arg = [&](CLI::App* sub) {
        sub->add_option("--range", cfg.range, "Inclusive range lo hi")->expected(2)->required();
    };

    auto* count = app.add_subcommand("count", "Count points with all four methods");
    curve_args(count);
    common(count);
    auto* points = app.add_subcommand("points", "List every point of E(F_p)");
    curve_args(points);
    common(points);
    auto* verify = app.add_subcommand("verify", "Check every identity over a range of primes");
    range_arg(verify);
    common(verify);
    auto* sweep = app.add_subcommand("sweep", "Counts for a = 1..p-1 and their total");
    sweep->add_option("--p", cfg.p, "Prime modulus")->required();
    common(sweep);
    auto* zeta = app.add_subcommand("zeta", "Zeta function and lifted counts N_1..N_rmax");
    curve_args(zeta);
    zeta->add_option("--rmax", cfg.r_max, "Highest extension degree")->required()->check(CLI::PositiveNumber);
    common(zeta);
    auto* primes = app.add_subcommand("primes", "Primes = 1 (mod 6) in a range");
    range_arg(primes);
    common(primes);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.cap_flag) {
            cfg.enumeration_cap = *cfg.cap_flag;
        } else if (auto env = cap_from_env()) {
            cfg.enumeration_cap = *env;
        }

        if (cfg.command == "count") return cmd_count(cfg, out);
        if (cfg.command == "points") return cmd_points(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "sweep") return cmd_sweep(cfg, out);
        if (cfg.command == "zeta") return cmd_zeta(cfg, out);
        return cmd_primes(cfg, out);
    } catch (const CurveError& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::HasseViolation ? kVerificationFailure : kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace cubecurve::cli
