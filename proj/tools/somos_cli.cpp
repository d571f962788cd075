// Command-line front end. Exit codes: 0 pass, 1 usage, 2 domain error, 3 counterexample.
#include <chrono>
#include <cmath>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "somos/companion.hpp"
#include "somos/errors.hpp"
#include "somos/identities.hpp"
#include "somos/lattice.hpp"
#include "somos/laurent.hpp"
#include "somos/report.hpp"
#include "somos/sequences.hpp"
#include "somos/volterra.hpp"

using namespace somos;
using report::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCounterexample = 3;

struct Opts {
    std::string eq = "somos4";
    int N = 4, p = 1, q = 2;
    std::string alpha = "1", beta = "1";
    std::string P = "1", Q = "-1", t0 = "0", t1 = "1";
    std::string init = "1,1,1,1";
    std::string range;
    long d = 2, r = 1;
    std::uint64_t seed = 42;
    long trials = 100;
    std::size_t order = 10;
    double dx = 1e-3, x_max = 0.5;
    std::string format = "json";
    std::string identity;
    bool serial = false;
    bool inject_fault = false;
};

std::pair<long, long> parse_range(const std::string& s) {
    static const std::regex re(R"(^\s*(-?\d+)\.\.(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("range must look like lo..hi: " + s);
    const long lo = std::stol(m[1]), hi = std::stol(m[2]);
    if (lo > hi) throw std::invalid_argument("empty range " + s);
    return {lo, hi};
}

std::pair<long, long> range_or(const Opts& o, long lo, long hi) {
    return o.range.empty() ? std::pair{lo, hi} : parse_range(o.range);
}

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

LinearParams linear_params(const Opts& o) {
    return {Rational::parse(o.P), Rational::parse(o.Q), Rational::parse(o.t0), Rational::parse(o.t1)};
}

TrialConfig trial_config(const Opts& o) {
    TrialConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.exec = o.serial ? Execution::Serial : Execution::Parallel;
    cfg.inject_vajda_fault = o.inject_fault;
    if (cfg.trials < 0) throw std::invalid_argument("trials must be non-negative");
    return cfg;
}

GaleRobinsonParams gr_params(const Opts& o) {
    const Rational a = Rational::parse(o.alpha), b = Rational::parse(o.beta);
    auto init = parse_list(o.init);
    GaleRobinsonParams gp;
    if (o.eq == "somos4") {
        gp = GaleRobinsonParams::somos4(a, b, init);
    } else if (o.eq == "somosN") {
        gp = GaleRobinsonParams::somosN(o.N, a, b, init);
    } else if (o.eq == "gale-robinson") {
        gp.N = o.N;
        gp.p = o.p;
        gp.q = o.q;
        gp.alpha = a;
        gp.beta = b;
        gp.init = init;
    } else {
        throw std::invalid_argument("unsupported --eq " + o.eq);
    }
    gp.validate();
    return gp;
}

// Every option of the subcommand, by long name, as given or defaulted.
json params_of(const CLI::App* sub) {
    json p = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
        if (name == "help" || name == "inject-fault") continue;
        if (opt->get_items_expected_max() == 0) {
            p[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& res = opt->results();
            p[name] = res.size() == 1 ? res.front() : json(res).dump();
        } else {
            p[name] = opt->get_default_str();
        }
    }
    return p;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Run {
    report::RunManifest manifest;
    json body = json::object();

    void finish() {
        body["manifest"] = manifest.to_json();
        emit(body);
    }
};

int finish_report(Run& run, const IdentityReport& rep, const char* key = "report") {
    run.manifest.passed = rep.checks_run - static_cast<long>(rep.failures.size());
    run.manifest.failed = static_cast<long>(rep.failures.size());
    run.body[key] = report::to_json(rep);
    run.finish();
    return rep.passed() ? 0 : kExitCounterexample;
}

// ---------------------------------------------------------------- commands

int cmd_generate(const Opts& o, Run& run) {
    OrbitWindow w;
    long lo, hi;
    std::optional<IndexedError> err;
    if (o.eq == "linear") {
        std::tie(lo, hi) = range_or(o, 0, 10);
        w = linear_window(linear_params(o), lo, hi);
    } else {
        const GaleRobinsonParams gp = gr_params(o);
        std::tie(lo, hi) = range_or(o, 0, 10);
        OrbitWindow partial;
        try {
            w = gale_robinson_extend(gp, lo, hi, &partial);
        } catch (const VanishingTerm& e) {
            err = e;
            std::vector<Rational> v;
            long first = std::max(lo, partial.lo());
            for (long n = first; n <= std::min(hi, partial.hi()); ++n) v.push_back(partial[n]);
            w = OrbitWindow(first, std::move(v));
        }
    }
    if (o.format == "csv") {
        std::cout << "n,t_n\n";
        for (long n = w.lo(); n <= w.hi(); ++n) std::cout << n << ',' << report::exact(w[n]) << '\n';
        std::cout.flush();
    } else {
        run.body["terms"] = report::window_json(w);
        if (err) run.body["error"] = {{"kind", "VanishingTerm"}, {"index", err->index()}};
        run.manifest.passed = static_cast<long>(w.size());
        run.finish();
    }
    if (err) {
        std::cerr << "vanishing term at index " << err->index() << "; partial output written\n";
        return kExitDomain;
    }
    return 0;
}

int cmd_laurent_check(const Opts& o, Run& run) {
    int N = o.N, p = o.p, q = o.q;
    if (o.eq == "somos4") N = 4, p = 1, q = 2;
    else if (o.eq == "somosN") p = 1, q = 2;
    else if (o.eq != "gale-robinson") throw std::invalid_argument("unsupported --eq " + o.eq);
    const long n_max = o.range.empty() ? N + 8 : parse_range(o.range).second;
    const SymbolicOrbit orbit = symbolic_iterate(N, p, q, static_cast<int>(n_max));
    json terms = json::array();
    for (int n = N; n <= orbit.n_max(); ++n)
        terms.push_back({{"n", n},
                         {"monomials", orbit.at(n).monomial_count()},
                         {"flat_terms", orbit.at(n).term_count()}});
    run.body["terms"] = terms;
    run.body["all_divisions_exact"] = true;
    run.body["first_step"] = orbit.at(N).to_string();
    return finish_report(run, verify_laurent_specializations(orbit, trial_config(o)), "specializations");
}

int cmd_companion(const Opts& o, Run& run) {
    if (o.eq == "ward") {
        const auto s = parse_list(o.init);
        if (s.size() != 3) throw std::invalid_argument("ward needs --init W2,W3,W4");
        for (const auto& v : s)
            if (!v.is_integer()) throw std::invalid_argument("ward seeds must be integers");
        const long m_max = o.range.empty() ? 30 : parse_range(o.range).second;
        const IntegerEDS eds = ward_generate(s[0].numerator(), s[1].numerator(), s[2].numerator(), m_max);
        json t = json::array();
        for (long n = 0; n <= eds.m_max(); ++n) t.push_back({{"n", n}, {"value", eds.at(n).get_str()}});
        run.body["terms"] = t;
        const auto bad = eds.divisibility_violation();
        run.body["divisibility"] = bad ? json{{"holds", false}, {"n", bad->first}, {"m", bad->second}}
                                       : json{{"holds", true}};
        run.manifest.passed = bad ? 0 : 1;
        run.manifest.failed = bad ? 1 : 0;
        run.finish();
        return bad ? kExitCounterexample : 0;
    }
    const auto [lo, hi] = range_or(o, 0, 9);
    json W = json::array();
    if (o.eq == "linear") {
        const LinearParams lp = linear_params(o);
        for (long n = lo; n <= hi; ++n) W.push_back({{"n", n}, {"W", report::exact(linear_companion_W(n, lp.P, lp.Q))}});
        run.body["W"] = W;
        run.finish();
        return 0;
    }
    if (o.eq != "somos4") throw std::invalid_argument("companion supports --eq somos4, linear or ward");
    const GaleRobinsonParams gp = gr_params(o);
    const OrbitWindow w = gale_robinson_extend(gp, 0, 3);
    const OrbitInvariants inv = OrbitInvariants::from(gp.alpha, gp.beta, compute_H(w, gp.alpha, gp.beta));
    CompanionSeq seq(inv);
    for (long n = lo; n <= hi; ++n) W.push_back({{"n", n}, {"W", report::exact(seq(n))}});
    const auto [ad, bd] = subsequence_coeffs(inv, o.d);
    run.body["invariants"] = {{"alpha", report::exact(inv.alpha)}, {"beta", report::exact(inv.beta)},
                              {"H", report::exact(inv.H)},         {"I", report::exact(inv.I)},
                              {"J", report::exact(inv.J)},         {"g2", report::exact(inv.g2)},
                              {"g3", report::exact(inv.g3)},       {"discriminant", report::exact(discriminant(inv.g2, inv.g3))}};
    run.body["W"] = W;
    run.body["subsequence"] = {{"d", o.d}, {"alpha_d", report::exact(ad)}, {"beta_d", report::exact(bd)},
                               {"note", "beta_d = -W_{3d}/W_d; the unsigned quotient has the opposite sign"}};
    run.finish();
    return 0;
}

int cmd_verify(const Opts& o, Run& run) {
    const TrialConfig cfg = trial_config(o);
    IdentityReport rep;
    const std::string& id = o.identity;
    if (id == "convolution") rep = verify_convolution(cfg);
    else if (id == "vajda") rep = verify_vajda(cfg);
    else if (id == "cyclic-sum") rep = verify_cyclic_sum(static_cast<int>(o.d), cfg);
    else if (id == "four-linear") rep = verify_four_linear(cfg);
    else if (id == "lucas") rep = verify_lucas_identity(cfg);
    else if (id == "linear-somos4") rep = verify_linear_somos4(cfg);
    else if (id == "elliptic-relation") rep = verify_elliptic_relation(cfg);
    else if (id == "gale-robinson") rep = verify_gale_robinson_random(cfg, o.N);
    else if (id == "subsequences") rep = verify_subsequences(cfg);
    else if (id == "lattice") rep = verify_lattice(cfg);
    else throw std::invalid_argument("unknown identity " + id);
    return finish_report(run, rep);
}

int cmd_verify_all(const Opts& o, Run& run) {
    const SuiteReport s = verify_all(trial_config(o));
    long checks = 0;
    for (const auto& r : s.reports) checks += r.checks_run;
    run.manifest.failed = s.failures();
    run.manifest.passed = checks - s.failures();
    run.body["suite"] = report::to_json(s);
    run.finish();
    return s.passed() ? 0 : kExitCounterexample;
}

int cmd_lattice(const Opts& o, Run& run) {
    NonAutoSomosParams p;
    p.N = o.eq == "somos4" ? 4 : o.N;
    const auto alphas = parse_list(o.alpha);
    if (alphas.size() > 2) throw std::invalid_argument("--alpha takes one value or even,odd");
    p.alpha_even = alphas.front();
    p.alpha_odd = alphas.back();
    p.beta = Rational::parse(o.beta);
    p.init = parse_list(o.init);
    p.validate();
    const auto [lo, hi] = range_or(o, 0, p.N + 20);
    if (lo != 0) throw std::invalid_argument("lattice range must start at 0");
    const OrbitWindow t = nonauto_extend(p, 0, hi);
    const Rational H = H_N_nonauto(t, p, 0);
    const OrbitWindow y = y_from_t(t), f = f_from_t(t), res = y_equation_residual(y, p.N, H);
    const int N = p.N;
    bool h_ok = true, b_ok = true, i_ok = true, a_ok = true, l10 = true, r_ok = true;
    json rows = json::array();
    const Rational I0 = y.hi() >= N - 2 ? I_N_integral(y, N, H, 0) : Rational(0);
    for (long n = 0; n + N - 2 <= y.hi(); ++n) {
        const Rational Hn = H_N_nonauto(t, p, n), bN = beta_N_integral(y, N, H, n), IN = I_N_integral(y, N, H, n);
        const auto [a0, a1] = alpha_2integral(f, N, p.beta, H, n);
        h_ok = h_ok && Hn == H;
        b_ok = b_ok && bN == p.beta;
        i_ok = i_ok && IN == I0;
        a_ok = a_ok && a0 == p.alpha_at(n) && a1 == p.alpha_at(n + 1);
        l10 = l10 && a0 * a1 == IN - H * bN;
        rows.push_back({{"n", n}, {"H_N", report::exact(Hn)}, {"beta_N", report::exact(bN)},
                        {"I_N", report::exact(IN)}, {"alpha_n", report::exact(a0)}, {"alpha_n1", report::exact(a1)}});
    }
    for (const auto& v : res.values()) r_ok = r_ok && v.is_zero();
    run.body["H_N"] = report::exact(H);
    run.body["y"] = report::window_json(y);
    run.body["integrals"] = rows;
    run.body["checks"] = {{"H_N_invariant", h_ok},  {"y_equation_residual_zero", r_ok},
                          {"beta_N_constant", b_ok}, {"I_N_constant", i_ok},
                          {"alpha_2_periodic", a_ok}, {"product_relation", l10}};
    const bool ok = h_ok && r_ok && b_ok && i_ok && a_ok && l10;
    run.manifest.passed = ok ? 1 : 0;
    run.manifest.failed = ok ? 0 : 1;
    run.finish();
    return ok ? 0 : kExitCounterexample;
}

int cmd_volterra(const Opts& o, Run& run) {
    const LinearParams lp = linear_params(o);
    const RiccatiSolution sol = make_riccati(lp.P, lp.Q);
    if (!(o.dx > 0) || !(o.x_max > 0)) throw std::invalid_argument("--dx and --x-max must be positive");
    if (sol.pole_forward <= o.x_max) throw Pole(sol.pole_forward);
    const auto [lo, hi] = range_or(o, 0, 9);
    if (hi - lo < 3) throw std::invalid_argument("volterra needs at least four sites");
    std::vector<double> v;
    for (long n = lo; n <= hi; ++n) v.push_back(Y_closed(n, 0.0, lp, sol));
    const long steps = std::lround(o.x_max / o.dx);
    const Trajectory tr = volterra_rk4(Window<double>(lo, v), o.dx, steps, [&, lo = lo, hi = hi](double x) {
        return std::pair{Y_closed(lo, x, lp, sol), Y_closed(hi, x, lp, sol)};
    });
    if (o.format == "csv") {
        write_trajectory_csv(std::cout, tr);
        return 0;
    }
    const double H = ((lp.P * lp.P + 2 * lp.Q) / lp.Q).to_double();
    double dev = 0, cres = 0;
    for (long n = lo; n <= hi; ++n) dev = std::max(dev, std::abs(tr.Y.back()[n] - Y_closed(n, tr.x.back(), lp, sol)));
    for (const auto& w : tr.Y) cres = std::max(cres, y_equation_max_residual(w, 4, H));
    json traj = json::array();
    for (std::size_t i = 0; i < tr.x.size(); ++i) {
        json ys = json::array();
        for (double y : tr.Y[i].values()) ys.push_back(report::approx(y));
        traj.push_back({{"x", report::approx(tr.x[i])}, {"Y", ys}});
    }
    static const char* kinds[] = {"zero", "distinct-real", "repeated", "complex-pair"};
    run.body["riccati"] = {{"kind", kinds[static_cast<int>(sol.kind)]}, {"pole_forward", report::approx(sol.pole_forward)}};
    run.body["sites"] = {lo, hi};
    run.body["max_deviation_from_closed_form"] = report::approx(dev);
    run.body["constraint_residual"] = report::approx(cres);
    run.body["positivity"] = report::to_json(positivity_scan(lp, o.x_max, o.dx, lo, hi));
    run.body["trajectory"] = traj;
    run.finish();
    return 0;
}

int cmd_series(const Opts& o, Run& run) {
    const LinearParams lp = linear_params(o);
    const TruncSeries b = B_series(lp.P, lp.Q, o.order);
    json bj = json::array(), Bj = json::array();
    for (std::size_t k = 0; k <= o.order; ++k) {
        bj.push_back(report::exact(b[k]));
        Bj.push_back(report::exact(b.derivative_at_zero(k)));
    }
    run.body["b"] = bj;
    run.body["taylor"] = Bj;
    if (!lp.P.is_zero()) {
        const Rational q = lp.Q / (lp.P * lp.P);
        const TruncSeries A = A_series(q, o.order);
        json aj = json::array();
        for (std::size_t k = 0; k <= o.order; ++k) aj.push_back(report::exact(A.derivative_at_zero(k)));
        run.body["A"] = {{"q", report::exact(q)}, {"taylor", aj}, {"residual_zero", A_series_check(q, o.order).is_zero()}};
    }
    if (!o.range.empty()) {
        const auto [lo, hi] = parse_range(o.range);
        json t = json::array();
        for (long n = lo; n <= hi; ++n)
            t.push_back({{"n", n}, {"tau", report::exact(tau_series_coeffs(n, static_cast<int>(o.r), lp))}});
        run.body["tau"] = {{"r", o.r}, {"values", t}};
    }
    run.finish();
    return 0;
}

int cmd_triangles(const Opts& o, Run& run) {
    const Triangles t = triangles(static_cast<int>(o.order));
    const bool ok = t.worpitzky && t.relation && t.matches_A;
    run.body["triangles"] = report::to_json(t);
    run.manifest.passed = ok ? 1 : 0;
    run.manifest.failed = ok ? 0 : 1;
    run.finish();
    return ok ? 0 : kExitCounterexample;
}

int cmd_conjecture(const Opts& o, Run& run) {
    const LinearParams lp = linear_params(o);
    const auto [lo, hi] = range_or(o, -5, 15);
    json coeffs = json::array();
    for (int r = 0; r <= o.r; ++r) {
        json c = json::array();
        for (const auto& v : conjecture_coeffs(r, lp.P, lp.Q)) c.push_back(report::exact(v));
        coeffs.push_back(c);
    }
    run.body["coefficients"] = coeffs;
    return finish_report(run, conjecture_check(static_cast<int>(o.r), lp, lo, hi));
}

int cmd_lambda_enum(const Opts& o, Run& run) {
    const LambdaEnumeration e = enumerate_lambda_sets(static_cast<int>(o.d), trial_config(o));
    run.body["enumeration"] = report::to_json(e);
    run.manifest.passed = static_cast<long>(e.classes.size());
    run.manifest.failed = e.shift_closed ? 0 : 1;
    run.finish();
    return e.shift_closed ? 0 : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Somos sequences, companion elliptic sequences and the Volterra lattice"};
    app.set_version_flag("--version", std::string(SOMOS_VERSION));
    app.require_subcommand(1);
    Opts o;

    auto eq = [&](CLI::App* s) {
        s->add_option("--eq", o.eq, "somos4, somosN, gale-robinson, linear")->capture_default_str();
    };
    auto orbit = [&](CLI::App* s) {
        s->add_option("--N", o.N)->capture_default_str();
        s->add_option("--p", o.p)->capture_default_str();
        s->add_option("--q", o.q)->capture_default_str();
        s->add_option("--alpha", o.alpha)->capture_default_str();
        s->add_option("--beta", o.beta)->capture_default_str();
        s->add_option("--init", o.init, "comma-separated initial values")->capture_default_str();
    };
    auto linear = [&](CLI::App* s) {
        s->add_option("--P", o.P)->capture_default_str();
        s->add_option("--Q", o.Q)->capture_default_str();
        s->add_option("--t0", o.t0)->capture_default_str();
        s->add_option("--t1", o.t1)->capture_default_str();
    };
    auto range = [&](CLI::App* s) { s->add_option("--range", o.range, "lo..hi"); };
    auto trials = [&](CLI::App* s) {
        s->add_option("--seed", o.seed)->capture_default_str();
        s->add_option("--trials", o.trials)->capture_default_str();
        s->add_flag("--serial", o.serial, "run trials on one thread");
    };
    auto format = [&](CLI::App* s) {
        s->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };

    struct Cmd {
        CLI::App* app;
        int (*fn)(const Opts&, Run&);
    };
    std::vector<Cmd> cmds;
    auto add = [&](const char* name, const char* desc, int (*fn)(const Opts&, Run&)) {
        CLI::App* s = app.add_subcommand(name, desc);
        cmds.push_back({s, fn});
        return s;
    };

    auto* gen = add("generate", "exact orbit terms", cmd_generate);
    eq(gen), orbit(gen), linear(gen), range(gen), format(gen);
    auto* lc = add("laurent-check", "symbolic iteration and exact divisions", cmd_laurent_check);
    eq(lc), orbit(lc), range(lc), trials(lc);
    auto* comp = add("companion", "invariants and companion elliptic sequence", cmd_companion);
    eq(comp), orbit(comp), linear(comp), range(comp);
    comp->add_option("--d", o.d)->capture_default_str();
    auto* ver = add("verify", "randomized exact check of one identity", cmd_verify);
    ver->add_option("--identity", o.identity,
                    "convolution, vajda, cyclic-sum, four-linear, lucas, linear-somos4, elliptic-relation, "
                    "gale-robinson, subsequences, lattice")
        ->required();
    ver->add_option("--d", o.d)->capture_default_str();
    ver->add_option("--N", o.N, "largest N for gale-robinson")->capture_default_str();
    trials(ver);
    auto* all = add("verify-all", "every identity with one seed", cmd_verify_all);
    trials(all);
    all->add_flag("--inject-fault", o.inject_fault)->group("");
    auto* lat = add("lattice", "Somos-N first integrals and the y-equation", cmd_lattice);
    eq(lat), orbit(lat), range(lat);
    auto* vol = add("volterra", "RK4 against the closed-form Volterra solution", cmd_volterra);
    linear(vol), range(vol), format(vol);
    vol->add_option("--dx", o.dx)->capture_default_str();
    vol->add_option("--x-max", o.x_max)->capture_default_str();
    auto* ser = add("series", "Maclaurin coefficients of B, A and tau", cmd_series);
    linear(ser), range(ser);
    ser->add_option("--order", o.order)->capture_default_str();
    ser->add_option("--r", o.r)->capture_default_str();
    auto* tri = add("triangles", "e-triangle and Eulerian numbers", cmd_triangles);
    tri->add_option("--order", o.order, "largest row")->capture_default_str();
    auto* con = add("conjecture", "linear recurrences of the tau coefficients", cmd_conjecture);
    linear(con), range(con);
    con->add_option("--r", o.r, "largest r")->capture_default_str();
    auto* lam = add("lambda-enum", "screen lambda-sets of the four-linear family", cmd_lambda_enum);
    lam->add_option("--d", o.d)->capture_default_str();
    trials(lam);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (const auto& c : cmds) {
        if (!c.app->parsed()) continue;
        Run run;
        run.manifest.command = c.app->get_name();
        run.manifest.params = params_of(c.app);
        run.manifest.seed = o.seed;
        const auto start = std::chrono::steady_clock::now();
        int code = 0;
        try {
            code = c.fn(o, run);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n' << c.app->help();
            return kExitUsage;
        } catch (const DomainError& e) {
            std::cerr << "domain error: " << e.what() << '\n';
            return kExitDomain;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "wall_time_s=" << secs << '\n';
        return code;
    }
    return kExitUsage;
}
