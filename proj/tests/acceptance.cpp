// One PASS/FAIL line per acceptance criterion.
// Exit status: 0 iff the set of failing criteria equals the --expect-fail set.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>

#include "ajima/ajima.hpp"
#include "ajima/apollonius.hpp"
#include "ajima/identities.hpp"
#include "ajima/svg.hpp"
#include "ajima/verify.hpp"

using namespace ajima;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<int> failed;

void report(int id, bool ok, const std::string& what) {
    if (!ok) failed.insert(id);
    std::printf("%s %2d  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

SamplePolicy base_policy(long trials) {
    SamplePolicy p;
    p.seed = 42;
    p.trials = trials;
    return p;
}

void oracle_agreement() {
    auto t0 = Clock::now();
    double worst = 0;
    long n = 0;
    for (const Sample& s : draw_samples(base_policy(1000))) {
        TriangleMetrics m = metrics(s.tri);
        for (int k = 0; k < 3; ++k) {
            ArcGeometry arc = build_arc(s.tri, k, s.desc.theta[k]);
            double closed = ajima_radius(m, k, arc.t);
            double orc = ajima_oracle(s.tri, arc).radius;
            worst = std::max(worst, std::abs(closed - orc) / m.r);
            ++n;
        }
    }
    double secs = seconds_since(t0);
    report(1, worst <= 1e-9 && secs <= 10,
           fmt("closed form vs bisection: max |drho|/r = %.2e over %ld radii (<= 1e-9), %.2f s (<= 10 s)", worst, n,
               secs));
}

void construction_routes() {
    double worst = 0;
    long n = 0, skipped = 0;
    for (const Sample& s : draw_samples(base_policy(1000))) {
        for (int k = 0; k < 3; ++k) {
            ArcGeometry arc = build_arc(s.tri, k, s.desc.theta[k]);
            AjimaConfiguration c = build_gamma(s.tri, arc);
            double r = c.m.r;
            Circle2 orc = ajima_oracle(s.tri, arc);
            worst = std::max({worst, dist(orc.center, c.D) / r, std::abs(orc.radius - c.rho) / r});
            // line OT and the bisector coincide at an isosceles apex; the midarc route is undefined there
            double sine = std::abs(cross(unit(c.T - c.arc.O), unit(c.I - c.tri.A)));
            if (sine < 1e-6) {
                ++skipped;
            } else {
                Circle2 mid = gamma_via_midarc(s.tri, arc);
                worst = std::max({worst, dist(mid.center, c.D) / r, std::abs(mid.radius - c.rho) / r});
            }
            ++n;
        }
    }
    report(2, worst <= 1e-9,
           fmt("closed form / midarc / oracle: max deviation %.2e r over %ld circles (<= 1e-9); midarc route "
               "skipped on %ld near-isosceles apexes",
               worst, n, skipped));
}

void registry() {
    auto t0 = Clock::now();
    SuiteReport rep = run_suite(base_policy(1000));
    double secs = seconds_since(t0);
    double worst_na = 0;
    std::string worst_id;
    for (const auto& c : rep.per_check) {
        if (c.na_rate() > worst_na) worst_na = c.na_rate(), worst_id = c.id;
    }
    bool ok = rep.per_check.size() >= 50 && rep.total_fail() == 0 && worst_na < 0.5 && secs <= 300;
    report(3, ok,
           fmt("%zu checks x %ld samples, seed 42, threshold 1e-7: %ld failures; max NA rate %.1f%% (%s, < 50%%); "
               "%.2f s (<= 300 s)",
               rep.per_check.size(), rep.samples, rep.total_fail(), 100 * worst_na, worst_id.c_str(), secs));
    for (const auto& c : rep.per_check) {
        if (c.fail == 0) continue;
        std::printf("        %s: %ld failures, max residual %.3e\n", c.id.c_str(), c.fail, c.max_residual);
    }
}

void barycentrics() {
    double worst = 0;
    long n = 0, missing = 0;
    for (const Sample& s : draw_samples(base_policy(200))) {
        double th = s.desc.theta[0];
        Triad tr = build_triad(s.tri, th);
        ApolloniusResult res = apollonius(s.tri, tr);
        for (int k = 0; k < 3; ++k) {
            const AjimaConfiguration& c = tr.cfg[k];
            double sc = c.scale;
            auto gap = [&](const BaryCoords& b, Point2 p) {
                worst = std::max(worst, dist(bary_to_point(c.tri, b), p) / sc);
                ++n;
            };
            gap(bary_D(c.m, c.arc.t), c.D);
            gap(bary_Oa(c.m, th), c.arc.O);
            gap(bary_T(c.m, th), c.T);
            TouchBary tb = bary_touchpoints(c.m, c.arc.t);
            gap(tb.U, res.inner.circle.center);
            gap(tb.V, res.outer.circle.center);
            if (c.Lp) gap(tb.U_a, *c.Lp);
            else ++missing;
            if (c.X) gap(tb.V_a, *c.X);
            else ++missing;
        }
    }
    report(4, worst <= 1e-9 && missing == 0,
           fmt("D, O_a, T, U_a, U, V_a, V on 200 samples: max |bary - constructed| = %.2e scale over %ld points "
               "(<= 1e-9), %ld points undefined",
               worst, n, missing));
}

void spot_values() {
    Triangle t = Triangle::from_sides(4, 5, 6);
    TriangleMetrics m = metrics(t);
    ApolloniusResult res = apollonius(t, build_triad(t, 180));
    double ratio = (res.inner.rho + m.r) / (res.outer.rho - m.r);
    // exact for 4-5-6: r = sqrt7/2, R = 8/sqrt7, W = 71/(15 sqrt7)
    const double s7 = std::sqrt(7.0);
    bool exact = std::abs(m.r - s7 / 2) <= 1e-12 && std::abs(m.R - 8 / s7) <= 1e-12 &&
                 std::abs(m.W - 71 / (15 * s7)) <= 1e-12;
    // the quoted decimals; the quoted W is misrounded in its last place
    double qr = m.r - 1.32287566, qR = m.R - 3.02371578, qW = m.W - 1.78903185;
    double ei = std::abs(res.inner.rho - m.r * (m.W - 1)), eo = std::abs(res.outer.rho - m.r * (m.W / 3 + 1));
    bool ok = exact && ei <= 1e-12 && eo <= 1e-12 && std::abs(ratio - 3) <= 1e-12;
    report(5, ok,
           fmt("4-5-6 at 180: r = %.10f, R = %.10f, W = %.10f match the exact forms to 1e-12 (quoted decimals off by "
               "%.1e, %.1e, %.1e); rho_i = %.8f (|r(W-1) - rho_i| = %.1e), rho_o = %.8f (%.1e); "
               "(rho_i + r)/(rho_o - r) - 3 = %.1e (<= 1e-12)",
               m.r, m.R, m.W, qr, qR, qW, res.inner.rho, ei, res.outer.rho, eo, ratio - 3));
}

void soddy() {
    double worst = 0;
    long low = 0, misordered = 0;
    for (const Sample& s : draw_samples(base_policy(200))) {
        TriangleMetrics m = metrics(s.tri);
        ApolloniusResult res = apollonius(s.tri, build_triad(s.tri, s.desc.theta[0]));
        SoddyData sd = soddy_line(s.tri, res);
        worst = std::max(worst, std::abs(sd.UI_over_IV - 3));
        double tw = std::tan(deg2rad(s.desc.theta[0]) / 4) * m.W;
        if (tw < 1) ++low;
        if (!sd.ordered) ++misordered;
    }
    report(6, worst <= 1e-9 && misordered == 0,
           fmt("|UI|/|IV| on 200 samples: max |ratio - 3| = %.2e (<= 1e-9); ordering wrong on %ld samples (%ld with "
               "tW < 1)",
               worst, misordered, low));
}

void concurrence() {
    double worst_i = 0, worst_w = 0;
    long n = 0, outside = 0;
    for (const Sample& s : draw_samples(base_policy(1000))) {
        TriangleMetrics m = metrics(s.tri);
        double th = rad2deg(4 * std::atan(1 / m.W));
        bool interior = true;
        for (int k = 0; k < 3; ++k) interior = interior && interior_theta(m, k, th);
        if (!interior) {
            ++outside;
        } else {
            ApolloniusCircle in = inner_apollonius(s.tri, build_triad(s.tri, th));
            worst_i = std::max(worst_i, std::abs(in.rho) / m.r);
            ++n;
        }
        std::array<Circle2, 3> om;
        for (int k = 0; k < 3; ++k) om[k] = build_arc(s.tri, k, 120).circle();
        Point2 p = radical_center(om[0], om[1], om[2]);
        for (const Circle2& c : om) worst_w = std::max(worst_w, c.dist_to(p) / s.tri.scale());
    }
    report(7, worst_i <= 1e-9 && worst_w <= 1e-9,
           fmt("theta = 4 atan(1/W): max |rho_i|/r = %.2e on %ld samples (%ld outside the interior range); theta = "
               "120: max distance of the common point from the three omegas %.2e scale (<= 1e-9)",
               worst_i, n, outside, worst_w));
}

void miyamoto() {
    long n = 0, internal = 0, signed_ok = 0;
    double worst = 0;
    std::string first_bad;
    SamplePolicy pol = base_policy(100);
    for (long i = 0; i < 100; ++i) {
        Sample s = draw_sample(pol, i);
        TriangleMetrics m = metrics(s.tri);
        std::seed_seq seq{42u, static_cast<unsigned>(i), 8u};
        std::mt19937_64 rng(seq);
        std::array<double, 3> th;
        for (int k = 0; k < 3; ++k) {
            double hi = std::min(340.0, 2 * (180 - rad2deg(m.angle(k))));
            th[k] = std::uniform_real_distribution<double>(20, hi)(rng);
        }
        MiyamotoResult r = miyamoto_tangency(s.tri, th[0], th[1], th[2]);
        ++n;
        double res = r.internal_residual / r.scale;
        worst = std::max(worst, res);
        if (res <= 1e-7) ++internal;
        else if (first_bad.empty())
            first_bad = fmt("sample %ld, sides %.4f %.4f %.4f, theta %.1f %.1f %.1f: residual %.3e", i, s.desc.sides[0],
                            s.desc.sides[1], s.desc.sides[2], th[0], th[1], th[2], res);
        if (r.signed_residual / r.scale <= 1e-7) ++signed_ok;
    }
    report(8, internal == n,
           fmt("independent per-side theta, 100 samples: internally tangent (<= 1e-7 scale) in %ld/%ld, max "
               "residual %.3e; tangent in the signed sense in %ld/%ld",
               internal, n, worst, signed_ok, n));
    if (!first_bad.empty()) std::printf("        first counterexample: %s\n", first_bad.c_str());
}

void scaling() {
    double worst = 0, worst_lemma = 0;
    std::string worst_id;
    long n = 0;
    for (const Sample& s : draw_samples(base_policy(500))) {
        Triad tr = build_triad(s.tri, s.desc.theta[0]);
        TriadScalars sc = triad_scalars(s.tri, tr, apollonius(s.tri, tr));
        for (const CheckResult& r : scaling_suite(sc, semicircle_baseline(s.tri))) {
            if (r.check_id == "S08_center_distance_squares") {
                worst_lemma = std::max(worst_lemma, r.residual);
            } else if (r.residual > worst) {
                worst = r.residual;
                worst_id = r.check_id;
            }
            ++n;
        }
    }
    report(9, worst <= 1e-10 && worst_lemma <= 1e-9,
           fmt("500 samples, %ld evaluations: starred relations max %.2e (%s, <= 1e-10); center distances vs "
               "closed form max %.2e (<= 1e-9)",
               n, worst, worst_id.c_str(), worst_lemma));
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void determinism(const std::string& cli) {
    std::string dir = "acceptance_out";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) throw std::runtime_error("cannot create " + dir);
    bool ok = true;
    std::string detail;
    for (int run = 0; run < 2; ++run) {
        std::string tag = std::to_string(run);
        std::string v = cli + " verify --trials 300 --seed 42 --json " + dir + "/report" + tag + ".json > /dev/null";
        std::string f = cli + " figure --triangle 4,5,6 --theta 150 --show apollonius,soddy,registry-witness --svg " +
                        dir + "/figure" + tag + ".svg";
        int a = std::system(v.c_str()), b = std::system(f.c_str());
        if (a != 0 || b != 0) ok = false, detail = "a run exited nonzero; ";
    }
    std::string r0 = slurp(dir + "/report0.json"), r1 = slurp(dir + "/report1.json");
    std::string s0 = slurp(dir + "/figure0.svg"), s1 = slurp(dir + "/figure1.svg");
    ok = ok && !r0.empty() && !s0.empty() && r0 == r1 && s0 == s1;

    // and in-process, through the library
    SuiteReport rep = run_suite(base_policy(100));
    bool lib = report_text(rep) == report_text(run_suite(base_policy(100))) &&
               render_figure(Triangle::from_sides(7, 5, 4), {100, 120, 150}, {true, true, false}) ==
                   render_figure(Triangle::from_sides(7, 5, 4), {100, 120, 150}, {true, true, false});
    ok = ok && lib;
    report(10, ok,
           fmt("%stwo CLI runs: report %zu bytes %s, SVG %zu bytes %s; library rerun %s", detail.c_str(), r0.size(),
               r0 == r1 ? "identical" : "DIFFERENT", s0.size(), s0 == s1 ? "identical" : "DIFFERENT",
               lib ? "identical" : "DIFFERENT"));
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    std::string cli = AJIMA_CLI_PATH;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) expected.insert(std::stoi(tok));
        } else if (a == "--cli" && i + 1 < argc) {
            cli = argv[++i];
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail 8,...] [--cli PATH]\n");
            return 2;
        }
    }

    auto guard = [](int id, void (*fn)()) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, false, std::string("threw: ") + e.what());
        }
    };
    guard(1, oracle_agreement);
    guard(2, construction_routes);
    guard(3, registry);
    guard(4, barycentrics);
    guard(5, spot_values);
    guard(6, soddy);
    guard(7, concurrence);
    guard(8, miyamoto);
    guard(9, scaling);
    try {
        determinism(cli);
    } catch (const std::exception& e) {
        report(10, false, std::string("threw: ") + e.what());
    }

    std::printf("\n%zu of 10 criteria pass", 10 - failed.size());
    if (!expected.empty()) {
        std::printf("; expected failures:");
        for (int x : expected) std::printf(" %d", x);
    }
    std::printf("\n");
    return failed == expected ? 0 : 1;
}
