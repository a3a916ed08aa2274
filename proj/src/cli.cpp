#include "ajima/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ajima/ajima.hpp"
#include "ajima/apollonius.hpp"
#include "ajima/svg.hpp"
#include "ajima/verify.hpp"

namespace ajima {

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<double> triangle, thetas;
    bool sample = false;
    std::optional<double> theta, tol;
    long trials = 1000;
    std::uint64_t seed = 42;
    std::vector<std::string> checks, show;
    std::string json, svg;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x == 0 ? 0.0 : x);
    return buf;
}

double pass_threshold(const Options& o) {
    if (o.tol) {
        if (!(*o.tol > 0)) throw ConfigError("--tol must be positive");
        return *o.tol;
    }
    if (const char* env = std::getenv("AJIMA_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) throw ConfigError(std::string("bad AJIMA_TOL: ") + env);
        return v;
    }
    return 1e-7;
}

Triangle explicit_triangle(const Options& o, const char* cmd) {
    if (o.sample) throw ConfigError(std::string(cmd) + " needs --triangle, not --sample");
    if (o.triangle.empty()) throw ConfigError(std::string(cmd) + " needs --triangle a,b,c");
    if (o.triangle.size() != 3) throw ConfigError("--triangle takes three side lengths");
    return Triangle::from_sides(o.triangle[0], o.triangle[1], o.triangle[2]);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (!o.thetas.empty()) throw ConfigError("--thetas is only valid with figure and miyamoto");
    if (o.sample && !o.triangle.empty()) throw ConfigError("give either --triangle or --sample, not both");
    if (o.trials < 0) throw ConfigError("--trials must be non-negative");

    SamplePolicy pol;
    pol.seed = o.seed;
    pol.trials = o.trials;
    pol.threshold = pass_threshold(o);
    pol.theta = o.theta;
    if (!o.triangle.empty()) {
        if (o.triangle.size() != 3) throw ConfigError("--triangle takes three side lengths");
        if (!o.theta) throw ConfigError("--triangle needs --theta");
        pol.sides = std::array<double, 3>{o.triangle[0], o.triangle[1], o.triangle[2]};
        Triangle::from_sides(o.triangle[0], o.triangle[1], o.triangle[2]);
    }
    if (o.theta && !(*o.theta > 0 && *o.theta < 360))
        throw GeometryError(ErrorCode::ThetaOutOfRange, "theta must lie in (0, 360)");

    SuiteReport rep = run_suite(pol, resolve_check_ids(o.checks));
    std::string text = report_text(rep);
    if (o.json.empty()) {
        out << text;
    } else {
        write_file(o.json, text);
        char line[160];
        for (const auto& c : rep.per_check) {
            std::snprintf(line, sizeof line, "%-34s pass %5ld  fail %4ld  na %5ld  max %.3e\n", c.id.c_str(), c.pass,
                          c.fail, c.na, c.max_residual);
            out << line;
        }
        out << rep.per_check.size() << " checks, " << rep.samples << " samples, " << rep.total_fail()
            << " failures\n";
    }
    return rep.total_fail() > 0 ? 1 : 0;
}

class Table {
public:
    explicit Table(std::ostream& out) : out_(out) {
        row("quantity", "value", "formula", "measured", "residual");
    }
    void row(const std::string& q, const std::string& v, const std::string& f, const std::string& m,
             const std::string& r, const std::string& note = "") {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-12s %-18s %-26s %-18s %-12s", q.c_str(), v.c_str(), f.c_str(), m.c_str(),
                      r.c_str());
        std::string s = buf;
        if (!note.empty()) s += " " + note;
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out_ << s << "\n";
    }
    void value(const std::string& q, double v, const std::string& f, double m, const std::string& note = "") {
        row(q, fmt(v), f, fmt(m), fmt(std::abs(v - m)), note);
    }
    void value(const std::string& q, double v, const std::string& f) { row(q, fmt(v), f, "-", "-"); }

private:
    std::ostream& out_;
};

std::string bary_text(const BaryCoords& b) {
    BaryCoords n = b.normalized();
    return "(" + fmt(n.u) + " : " + fmt(n.v) + " : " + fmt(n.w) + ")";
}

const char* kV[3] = {"a", "b", "c"};

int cmd_solve(const Options& o, std::ostream& out) {
    if (!o.thetas.empty()) throw ConfigError("--thetas is only valid with figure and miyamoto");
    Triangle t = explicit_triangle(o, "solve");
    if (!o.theta) throw ConfigError("solve needs --theta");
    double th = *o.theta;
    TriangleMetrics m = metrics(t);

    std::array<ArcGeometry, 3> arcs;
    for (int k = 0; k < 3; ++k) arcs[k] = build_arc(t, k, th);
    double tp = arcs[0].t;

    out << "triangle a=" << fmt(m.a) << " b=" << fmt(m.b) << " c=" << fmt(m.c) << "  theta=" << fmt(th)
        << " deg  t=tan(theta/4)=" << fmt(tp) << "\n\n";
    Table tab(out);
    Point2 I = incenter(t);
    tab.value("p", m.p, "(a+b+c)/2");
    tab.value("area", m.area, "heron", std::abs(cross(t.B - t.A, t.C - t.A)) / 2);
    tab.value("r", m.r, "area/p", Line2::through(t.B, t.C).dist(I));
    tab.value("R", m.R, "abc/(4 area)", circle_through(t.A, t.B, t.C).radius);
    tab.value("W", m.W, "(4R+r)/p");

    for (int k = 0; k < 3; ++k) {
        std::string v = kV[k];
        const ArcGeometry& arc = arcs[k];
        Triangle loc = t.rotated(k);
        tab.value("R_" + v, arc.R_forms[0], "(a/2)/sin(theta/2)", dist(arc.O, loc.B));

        double rho = ajima_radius(m, k, tp);
        std::string note;
        std::optional<AjimaConfiguration> cfg;
        try {
            cfg = build_gamma(t, arc);
            if (cfg->point_circle) note = "degenerate point circle";
        } catch (const GeometryError& e) {
            note = e.what();
        }
        std::string measured = "n/a", resid = "n/a";
        try {
            double orc = ajima_oracle(t, arc).radius;
            measured = fmt(orc);
            resid = fmt(std::abs(rho - orc));
        } catch (const GeometryError&) {
        }
        tab.row("rho_" + v, fmt(rho), "r(1-tan(A/2)t)", measured, resid, note);
        if (!cfg) continue;

        const AjimaConfiguration& c = *cfg;
        std::string s = "_" + v;
        try {
            Lengths L = lengths(c);
            tab.value("AK" + s, L.AK.formula, "p-a-rt", L.AK.measured);
            tab.value("AL" + s, L.AL_len.formula, "sqrt((p-a)(ap-(b-c)^2)/a)", L.AL_len.measured);
            tab.value("AL'" + s, L.ALp.formula, "AL rho/r", L.ALp.measured);
            tab.value("AX" + s, L.AX_len.formula, "(p-a-rt)sqrt(a(p-a)/(ap-(b-c)^2))", L.AX_len.measured);
            tab.value("HK" + s, L.HK.formula, "rt", L.HK.measured);
            tab.value("IF" + s, L.IF_len.formula, "r/sin(theta/2)", L.IF_len.measured);
        } catch (const GeometryError& e) {
            tab.row("lengths" + s, "n/a", "-", "-", "-", e.what());
        }
        auto bary_row = [&](const std::string& name, const BaryCoords& b, Point2 p) {
            double gap = dist(bary_to_point(c.tri, b), p);
            tab.row(name, "-", bary_text(b), "point", fmt(gap));
        };
        bary_row("D_" + v, bary_D(c.m, tp), c.D);
        bary_row("O_" + v, bary_Oa(c.m, th), arc.O);
        bary_row("T_" + v, bary_T(c.m, th), c.T);
    }

    double ri = rho_inner(m, tp), ro = rho_outer(m, tp);
    std::optional<ApolloniusResult> res;
    try {
        res = apollonius(t, build_triad(t, th));
    } catch (const GeometryError& e) {
        tab.row("rho_i", fmt(ri), "r(tW-1)", "n/a", "n/a", e.what());
        tab.row("rho_o", fmt(ro), "r(tW/3+1)", "n/a", "n/a", e.what());
    }
    if (res) {
        tab.value("rho_i", ri, "r(tW-1)", res->inner.rho, res->inner.concurrent ? "concurrent triad" : "");
        tab.value("rho_o", ro, "r(tW/3+1)", res->outer.rho);
        try {
            SoddyData sd = soddy_line(t, *res);
            if (!res->inner.concurrent) tab.value("UI/IV", 3, "soddy ratio", sd.UI_over_IV);
            tab.value("GeI", sd.GeI_formula, "r sqrt(1-3/W^2)", sd.GeI);
        } catch (const GeometryError& e) {
            tab.row("soddy", "n/a", "-", "-", "-", e.what());
        }
    }
    return 0;
}

int cmd_figure(const Options& o, std::ostream& out) {
    Triangle t = explicit_triangle(o, "figure");
    std::array<double, 3> th;
    if (!o.thetas.empty()) {
        if (o.theta) throw ConfigError("give either --theta or --thetas");
        if (o.thetas.size() != 3) throw ConfigError("--thetas takes three angles");
        th = {o.thetas[0], o.thetas[1], o.thetas[2]};
    } else if (o.theta) {
        th = {*o.theta, *o.theta, *o.theta};
    } else {
        throw ConfigError("figure needs --theta or --thetas");
    }
    FigureOptions fo;
    for (const auto& s : o.show) {
        if (s == "apollonius") fo.apollonius = true;
        else if (s == "soddy") fo.soddy = true;
        else if (s == "registry-witness") fo.witness = true;
        else throw ConfigError("unknown layer: " + s);
    }
    fo.witness_checks = resolve_check_ids(o.checks);
    std::string svg = render_figure(t, th, fo);
    if (o.svg.empty()) out << svg;
    else write_file(o.svg, svg);
    return 0;
}

int cmd_miyamoto(const Options& o, std::ostream& out) {
    Triangle t = explicit_triangle(o, "miyamoto");
    if (o.thetas.size() != 3) throw ConfigError("miyamoto needs --thetas A,B,C");
    MiyamotoResult r = miyamoto_tangency(t, o.thetas[0], o.thetas[1], o.thetas[2], pass_threshold(o));
    out << "gamma inner:  center (" << fmt(r.gamma_inner.circle.center.x) << ", "
        << fmt(r.gamma_inner.circle.center.y) << ")  sigma " << fmt(r.gamma_inner.sigma) << "\n"
        << "omega inner:  center (" << fmt(r.omega_inner.circle.center.x) << ", "
        << fmt(r.omega_inner.circle.center.y) << ")  sigma " << fmt(r.omega_inner.sigma) << "\n"
        << "distance      " << fmt(r.distance) << "\n"
        << "internal tangency residual  " << fmt(r.internal_residual / r.scale) << "\n"
        << "signed tangency residual    " << fmt(r.signed_residual / r.scale) << "\n"
        << "verdict       " << outcome_name(r.check.verdict) << "\n";
    return r.check.passed() ? 0 : 1;
}

void add_common(CLI::App* sc, Options& o) {
    sc->add_option("--triangle", o.triangle, "side lengths a,b,c")->delimiter(',');
    sc->add_option("--theta", o.theta, "arc measure in degrees");
    sc->add_option("--tol", o.tol, "pass threshold (overrides AJIMA_TOL)");
}

}  // namespace

std::vector<std::string> resolve_check_ids(const std::vector<std::string>& tokens) {
    std::vector<std::string> ids;
    for (const auto& tok : tokens) {
        if (tok.empty()) continue;
        if (has_check(tok)) {
            ids.push_back(tok);
            continue;
        }
        std::vector<std::string> hits;
        for (const auto& id : registry_ids())
            if (id.rfind(tok + "_", 0) == 0) hits.push_back(id);
        if (hits.size() != 1) throw GeometryError(ErrorCode::UnknownCheckId, tok);
        ids.push_back(hits[0]);
    }
    return ids;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ajima circle toolkit", "ajima"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "run the theorem registry over sampled or given triangles");
    add_common(verify, o);
    verify->add_flag("--sample", o.sample, "sample random triangles (default)");
    verify->add_option("--thetas", o.thetas, "not accepted here (figure and miyamoto only)")->delimiter(',');
    verify->add_option("--trials", o.trials, "number of samples");
    verify->add_option("--seed", o.seed, "sampler seed");
    verify->add_option("--checks", o.checks, "check ids or id prefixes")->delimiter(',');
    verify->add_option("--json", o.json, "write the report here");

    auto* solve = app.add_subcommand("solve", "print every quantity for one triangle");
    add_common(solve, o);
    solve->add_flag("--sample", o.sample);
    solve->add_option("--thetas", o.thetas, "not accepted here (figure and miyamoto only)")->delimiter(',');

    auto* figure = app.add_subcommand("figure", "write an SVG figure");
    add_common(figure, o);
    figure->add_flag("--sample", o.sample);
    figure->add_option("--thetas", o.thetas, "per-side arc measures")->delimiter(',');
    figure->add_option("--svg", o.svg, "output path (stdout if omitted)");
    figure->add_option("--show", o.show, "apollonius,soddy,registry-witness")->delimiter(',');
    figure->add_option("--checks", o.checks, "restrict registry witnesses")->delimiter(',');

    auto* miyamoto = app.add_subcommand("miyamoto", "tangency of the two inner Apollonius circles");
    add_common(miyamoto, o);
    miyamoto->add_flag("--sample", o.sample);
    miyamoto->add_option("--thetas", o.thetas, "per-side arc measures")->delimiter(',');

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (figure->parsed()) return cmd_figure(o, out);
        return cmd_miyamoto(o, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace ajima
