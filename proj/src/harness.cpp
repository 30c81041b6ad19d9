#include "kpgeom/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include <json.hpp>

#include "kpgeom/central_set.hpp"
#include "kpgeom/cocentral_set.hpp"
#include "kpgeom/contraction.hpp"
#include "kpgeom/disk_intersection.hpp"
#include "kpgeom/monte_carlo.hpp"
#include "kpgeom/rng.hpp"

namespace kpg {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what)
{
    throw GeometryError(ErrorCode::parse, "scene: " + what);
}

Point read_center(const Plane& plane, const json& c, bool poincare)
{
    if (!c.is_array() || c.size() < 2 || c.size() > 3) parse_fail("center must be an array of 2 or 3 numbers");
    for (const json& v : c)
        if (!v.is_number()) parse_fail("center coordinates must be numbers");
    Point p;
    try {
        if (poincare) {
            if (plane.model != Model::hyperbolic) parse_fail("the poincare convention needs a hyperbolic plane");
            if (c.size() != 2) parse_fail("poincare centers have 2 coordinates");
            p = from_poincare(plane, c[0].get<double>(), c[1].get<double>());
        } else if (c.size() == 2) {
            if (plane.model != Model::euclidean) parse_fail("non-euclidean centers need 3 model coordinates");
            p = Point{{c[0].get<double>(), c[1].get<double>(), 1.0}};
        } else {
            p = Point{{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()}};
        }
        validate(plane, p);
    } catch (const GeometryError& e) {
        if (e.code() == ErrorCode::parse) throw;
        parse_fail(e.what());
    }
    return p;
}

json write_center(const Point& p)
{
    return json::array({p.coords.x, p.coords.y, p.coords.z});
}

std::string number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::optional<Configuration> Scene::contracted() const
{
    if (!contracted_centers) return std::nullopt;
    Configuration out{plane, disks};
    for (std::size_t i = 0; i < disks.size(); ++i) out.disks[i].center = (*contracted_centers)[i];
    return out;
}

Scene parse_scene(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
    if (!j.is_object()) parse_fail("top level must be an object");

    Scene s;
    try {
        const Model model = parse_model(j.value("model", std::string("hyperbolic")));
        const double k = j.value("curvature", 1.0);
        s.plane = model == Model::euclidean ? Plane::euclidean() : Plane::checked({model, k});
        const std::string conv = j.value("convention", std::string("model"));
        if (conv != "model" && conv != "poincare") parse_fail("unknown convention '" + conv + "'");
        const bool poincare = conv == "poincare";

        if (j.contains("disks")) {
            if (!j["disks"].is_array()) parse_fail("disks must be an array");
            for (const json& d : j["disks"]) {
                if (!d.is_object() || !d.contains("center") || !d.contains("radius")) parse_fail("disk needs center and radius");
                if (!d["radius"].is_number()) parse_fail("radius must be a number");
                const double r = d["radius"].get<double>();
                if (!(r >= 0.0) || !std::isfinite(r)) parse_fail("radius must be finite and nonnegative");
                s.disks.push_back({read_center(s.plane, d["center"], poincare), r});
            }
        }
        if (j.contains("contracted_centers")) {
            const json& cc = j["contracted_centers"];
            if (!cc.is_array()) parse_fail("contracted_centers must be an array");
            if (cc.size() != s.disks.size()) parse_fail("contracted_centers must match the disks");
            std::vector<Point> pts;
            for (const json& c : cc) pts.push_back(read_center(s.plane, c, poincare));
            s.contracted_centers = std::move(pts);
        }
        s.seed = j.value("seed", s.seed);
        s.trials = j.value("trials", s.trials);
        s.max_disks = j.value("max_disks", s.max_disks);
        s.tolerance = j.value("tolerance", s.tolerance);
        if (s.max_disks < 2) parse_fail("max_disks must be at least 2");
        if (!(s.tolerance >= 0.0)) parse_fail("tolerance must be nonnegative");
    } catch (const json::exception& e) {
        parse_fail(e.what());
    } catch (const GeometryError& e) {
        if (e.code() == ErrorCode::parse) throw;
        parse_fail(e.what());
    }
    return s;
}

std::string serialize_scene(const Scene& s)
{
    json j;
    j["model"] = std::string(to_string(s.plane.model));
    j["curvature"] = s.plane.k;
    j["convention"] = "model";
    j["disks"] = json::array();
    for (const Disk& d : s.disks) j["disks"].push_back({{"center", write_center(d.center)}, {"radius", d.radius}});
    if (s.contracted_centers) {
        j["contracted_centers"] = json::array();
        for (const Point& p : *s.contracted_centers) j["contracted_centers"].push_back(write_center(p));
    }
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["max_disks"] = s.max_disks;
    j["tolerance"] = s.tolerance;
    return j.dump(2) + "\n";
}

bool operator==(const Scene& a, const Scene& b)
{
    auto same_disks = [](const std::vector<Disk>& x, const std::vector<Disk>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i].center == y[i].center) || x[i].radius != y[i].radius) return false;
        return true;
    };
    return a.plane == b.plane && same_disks(a.disks, b.disks) && a.contracted_centers == b.contracted_centers &&
           a.seed == b.seed && a.trials == b.trials && a.max_disks == b.max_disks && a.tolerance == b.tolerance;
}

bool Report::pass() const
{
    return nonempty_violations == 0 &&
           std::all_of(records.begin(), records.end(), [](const TrialRecord& r) { return r.pass; });
}

double Report::min_margin() const
{
    double m = std::numeric_limits<double>::infinity();
    for (const TrialRecord& r : records) m = std::min(m, r.margin);
    return m;
}

std::vector<std::size_t> Report::failures() const
{
    std::vector<std::size_t> out;
    for (const TrialRecord& r : records)
        if (!r.pass) out.push_back(r.trial);
    return out;
}

std::string report_csv(const Report& report)
{
    std::string out = "trial,seed,kind,before,after,margin,pass\n";
    for (const TrialRecord& r : report.records) {
        out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' + r.kind + ',' + number(r.before) + ',' +
               number(r.after) + ',' + number(r.margin) + ',' + (r.pass ? "1" : "0") + '\n';
    }
    return out;
}

std::string report_summary_json(const Report& report)
{
    json j;
    j["command"] = report.command;
    j["trials"] = report.records.size();
    j["pass"] = report.pass();
    const double m = report.min_margin();
    j["min_margin"] = std::isfinite(m) ? json(m) : json(nullptr);
    j["nonempty_violations"] = report.nonempty_violations;
    // Generator mix; "identity" counts sampler fallbacks anywhere in a trial.
    std::map<std::string, std::size_t> gens;
    for (const TrialRecord& r : report.records) {
        if (r.note.empty()) continue;
        ++gens[r.note.substr(0, r.note.find(':'))];
        if (r.note != "identity" && r.note.find("identity") != std::string::npos) ++gens["identity-step"];
    }
    j["generators"] = gens;
    j["failures"] = json::array();
    for (const TrialRecord& r : report.records)
        if (!r.pass)
            j["failures"].push_back({{"trial", r.trial}, {"seed", r.seed}, {"kind", r.kind}, {"margin", r.margin}, {"note", r.note}});
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Campaigns

namespace {

double center_reach(const Plane& plane, bool nonempty)
{
    if (plane.model == Model::spherical) return 0.5 / plane.k;
    return nonempty ? 0.6 : 2.0;
}

Point random_center(const Plane& plane, CounterRng& rng, double reach)
{
    // Uniform in area for the euclidean chart; good enough spread elsewhere.
    return from_polar(plane, rng.angle(), reach * std::sqrt(rng.uniform()));
}

std::size_t extreme_index(const Configuration& c, const Point& ref)
{
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < c.disks.size(); ++i) {
        const double d = distance(c.plane, ref, c.disks[i].center);
        if (d > best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

struct Contracted {
    Configuration config;
    std::string note;
};

Configuration random_step(const Configuration& c, CounterRng& rng, bool allow_radial, std::string& note)
{
    const Plane& plane = c.plane;
    const double reach = center_reach(plane, false);
    if (allow_radial && rng.uniform() < 0.5) {
        const Point anchor = random_center(plane, rng, reach);
        note += "radial;";
        return radial_contraction(c, anchor, rng.uniform());
    }
    const std::size_t i = extreme_index(c, random_center(plane, rng, reach));
    try {
        note += "single;";
        return single_point_move(c, i, rng, 20000);
    } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::sampling) throw;
        // Feasible region too thin for rejection sampling; fall back.
        if (!allow_radial) {
            note += "identity;";
            return c;
        }
        note += "radial;";
        return radial_contraction(c, random_center(plane, rng, reach), rng.uniform());
    }
}

Contracted random_contraction(const Configuration& c, CounterRng& rng)
{
    const bool radial_ok = c.plane.model != Model::spherical;
    Contracted out;
    const int kind = radial_ok ? static_cast<int>(rng.integer(0, 2)) : static_cast<int>(rng.integer(1, 2));
    if (kind == 0) {
        const Point anchor = random_center(c.plane, rng, center_reach(c.plane, false));
        const double lambda = rng.uniform();
        out.config = radial_contraction(c, anchor, lambda);
        out.note = "radial";
    } else if (kind == 1) {
        std::string note;
        out.config = random_step(c, rng, false, note);
        out.note = note.find("identity") == std::string::npos ? "single" : "identity";
    } else {
        const int steps = static_cast<int>(rng.integer(2, 4));
        std::string note;
        std::vector<Generator> gens;
        for (int s = 0; s < steps; ++s)
            gens.push_back([&](const Configuration& x) { return random_step(x, rng, radial_ok, note); });
        out.config = compose(c, gens);
        out.note = "composed:" + note;
        out.note.pop_back();
    }
    return out;
}

TrialRecord perimeter_record(const Configuration& before, const Configuration& after, double tol)
{
    TrialRecord r;
    r.kind = "perimeter";
    r.before = hull_perimeter(hull_boundary(before));
    r.after = hull_perimeter(hull_boundary(after));
    r.margin = r.before - r.after;
    r.pass = r.margin >= -tol * (1.0 + r.before);
    return r;
}

TrialRecord area_record(const Configuration& before, const Configuration& after, double tol, bool& nonempty_violation)
{
    TrialRecord r;
    r.kind = "area";
    const IntersectionRegion u0 = intersect_disks(before);
    const IntersectionRegion u1 = intersect_disks(after);
    r.before = region_area(u0);
    r.after = region_area(u1);
    r.margin = r.after - r.before;
    nonempty_violation = !u0.empty_flag && u1.empty_flag;
    r.pass = r.margin >= -tol * (1.0 + r.before) && !nonempty_violation;
    if (nonempty_violation) r.note = "intersection became empty";
    return r;
}

TrialRecord central_record(const Configuration& config, std::uint64_t seed)
{
    const Configuration sharp = sharpen(config);
    const DecompositionReport d = tree_decomposition_check(sharp, 2000, seed);
    TrialRecord r;
    r.kind = "central-decomposition";
    r.before = hull_perimeter(hull_boundary(sharp));
    r.after = r.before - d.perimeter_residual;
    r.margin = -std::abs(d.perimeter_residual);
    r.pass = d.pass;
    if (!d.pass) r.note = "indicator or perimeter identity failed";
    return r;
}

TrialRecord cocentral_record(const Configuration& config, std::uint64_t seed)
{
    const Configuration sharp = cocentral_sharpen(config);
    const CocentralDecompositionReport d = cocentral_decomposition_check(sharp, 2000, seed);
    TrialRecord r;
    r.kind = "cocentral-decomposition";
    r.before = region_area(intersect_disks(sharp));
    r.after = r.before - d.area_residual;
    r.margin = -std::abs(d.area_residual);
    r.pass = d.pass;
    if (!d.pass) r.note = "containment or area identity failed";
    return r;
}

TrialRecord error_record(const std::exception& e)
{
    TrialRecord r;
    r.kind = "error";
    r.margin = -std::numeric_limits<double>::infinity();
    r.note = e.what();
    return r;
}

void require_area_plane(const Plane& plane)
{
    if (plane.model == Model::spherical)
        throw GeometryError(ErrorCode::domain, "area campaigns run in the hyperbolic or euclidean plane");
}

template <class F>
Report run_trials(std::string command, std::uint64_t seed, std::size_t trials, F&& trial_fn)
{
    Report rep;
    rep.command = std::move(command);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t ts = derive_seed(seed, t);
        TrialRecord r;
        try {
            r = trial_fn(t, ts, rep);
        } catch (const GeometryError& e) {
            r = error_record(e);
        }
        r.trial = t;
        r.seed = ts;
        rep.records.push_back(std::move(r));
    }
    return rep;
}

} // namespace

Campaign campaign_of(const Scene& scene)
{
    Campaign c;
    c.plane = scene.plane;
    c.seed = scene.seed;
    c.trials = scene.trials;
    c.max_disks = scene.max_disks;
    c.tolerance = scene.tolerance;
    return c;
}

Configuration campaign_configuration(const Campaign& c, std::size_t trial, bool nonempty_intersection)
{
    CounterRng rng(derive_seed(c.seed, trial), 1u << 20);
    const double reach = center_reach(c.plane, nonempty_intersection);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const auto n = static_cast<std::size_t>(
            rng.integer(static_cast<std::int64_t>(c.min_disks), static_cast<std::int64_t>(c.max_disks)));
        Configuration cfg{c.plane, {}};
        for (std::size_t i = 0; i < n; ++i) {
            const Point p = random_center(c.plane, rng, reach);
            cfg.disks.push_back({p, rng.uniform(0.0, c.max_radius)});
        }
        if (!nonempty_intersection || !intersect_disks(cfg).empty_flag) return cfg;
    }
    throw GeometryError(ErrorCode::sampling, "no configuration with nonempty intersection found");
}

Report verify_perimeter(const Campaign& c)
{
    return run_trials("verify-perimeter", c.seed, c.trials, [&](std::size_t t, std::uint64_t ts, Report&) {
        const Configuration before = campaign_configuration(c, t, false);
        CounterRng rng(ts);
        Contracted after = random_contraction(before, rng);
        TrialRecord r = perimeter_record(before, after.config, c.tolerance);
        r.note = after.note;
        return r;
    });
}

Report verify_area(const Campaign& c)
{
    require_area_plane(c.plane);
    return run_trials("verify-area", c.seed, c.trials, [&](std::size_t t, std::uint64_t ts, Report& rep) {
        const Configuration before = campaign_configuration(c, t, true);
        CounterRng rng(ts);
        Contracted after = random_contraction(before, rng);
        bool violation = false;
        TrialRecord r = area_record(before, after.config, c.tolerance, violation);
        rep.nonempty_violations += violation;
        if (r.note.empty()) r.note = after.note;
        return r;
    });
}

Report verify_induction(const Campaign& c)
{
    return run_trials("verify-induction", c.seed, c.trials, [&](std::size_t t, std::uint64_t ts, Report&) {
        if (t % 2 == 0) return central_record(campaign_configuration(c, t, false), ts);
        return cocentral_record(campaign_configuration(c, t, true), ts);
    });
}

Report verify_perimeter(const Scene& scene)
{
    if (scene.disks.empty()) return verify_perimeter(campaign_of(scene));
    const Configuration before = scene.configuration();
    validate_configuration(before);
    if (const auto after = scene.contracted()) {
        validate_configuration(*after);
        if (!is_contraction({before, *after}).ok) throw GeometryError(ErrorCode::domain, "scene pair is not a contraction");
        return run_trials("verify-perimeter", scene.seed, 1, [&](std::size_t, std::uint64_t, Report&) {
            TrialRecord r = perimeter_record(before, *after, scene.tolerance);
            r.note = "scene";
            return r;
        });
    }
    return run_trials("verify-perimeter", scene.seed, scene.trials, [&](std::size_t, std::uint64_t ts, Report&) {
        CounterRng rng(ts);
        Contracted after = random_contraction(before, rng);
        TrialRecord r = perimeter_record(before, after.config, scene.tolerance);
        r.note = after.note;
        return r;
    });
}

Report verify_area(const Scene& scene)
{
    if (scene.disks.empty()) return verify_area(campaign_of(scene));
    require_area_plane(scene.plane);
    const Configuration before = scene.configuration();
    validate_configuration(before);
    auto trial = [&](const Configuration& after, Report& rep, const std::string& note) {
        bool violation = false;
        TrialRecord r = area_record(before, after, scene.tolerance, violation);
        rep.nonempty_violations += violation;
        if (r.note.empty()) r.note = note;
        return r;
    };
    if (const auto after = scene.contracted()) {
        validate_configuration(*after);
        if (!is_contraction({before, *after}).ok) throw GeometryError(ErrorCode::domain, "scene pair is not a contraction");
        return run_trials("verify-area", scene.seed, 1,
                          [&](std::size_t, std::uint64_t, Report& rep) { return trial(*after, rep, "scene"); });
    }
    return run_trials("verify-area", scene.seed, scene.trials, [&](std::size_t, std::uint64_t ts, Report& rep) {
        CounterRng rng(ts);
        Contracted after = random_contraction(before, rng);
        return trial(after.config, rep, after.note);
    });
}

Report verify_induction(const Scene& scene)
{
    if (scene.disks.empty()) return verify_induction(campaign_of(scene));
    const Configuration config = scene.configuration();
    validate_configuration(config);
    return run_trials("verify-induction", scene.seed, 2, [&](std::size_t t, std::uint64_t ts, Report&) {
        if (t == 0) return central_record(config, ts);
        if (intersect_disks(config).empty_flag) {
            TrialRecord r;
            r.kind = "cocentral-decomposition";
            r.pass = true;
            r.note = "skipped: empty intersection";
            return r;
        }
        return cocentral_record(config, ts);
    });
}

// ---------------------------------------------------------------------------
// SVG

RenderKind parse_render_kind(std::string_view name)
{
    if (name == "hull") return RenderKind::hull;
    if (name == "intersection") return RenderKind::intersection;
    if (name == "central") return RenderKind::central;
    if (name == "cocentral") return RenderKind::cocentral;
    throw GeometryError(ErrorCode::parse, "unknown render kind '" + std::string(name) + "'");
}

namespace {

struct Xy {
    double x, y;
};

// Flat chart of the scene: Poincare disk, the plane itself, or stereographic
// projection from the antipode of a hemisphere center.
class Chart {
public:
    Chart(const Plane& plane, std::span<const Disk> disks) : plane_(plane)
    {
        if (plane.model == Model::spherical) {
            const auto c = hemisphere_certificate(plane, disks);
            if (!c) throw GeometryError(ErrorCode::hemisphere, "disks are not contained in a hemisphere");
            pole_ = Point{c->coords * -1.0};
        }
    }

    Xy operator()(const Point& p) const
    {
        Point q;
        switch (plane_.model) {
        case Model::hyperbolic: q = to_poincare(plane_, p); break;
        case Model::euclidean: q = p; break;
        case Model::spherical: q = stereographic_project(plane_, pole_, p); break;
        }
        return {q.coords.x, q.coords.y};
    }

    /// Center and radius of the image circle of a disk.
    std::pair<Xy, double> circle(const Disk& d) const
    {
        Disk img = d;
        if (plane_.model == Model::hyperbolic) img = poincare_disk(plane_, d);
        else if (plane_.model == Model::spherical) img = stereographic_project_disk(plane_, pole_, d);
        return {{img.center.coords.x, img.center.coords.y}, img.radius};
    }

private:
    Plane plane_;
    Point pole_;
};

std::string fixed(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

class SvgWriter {
public:
    SvgWriter(const Chart& chart, double stroke) : chart_(chart), stroke_(stroke) {}

    void polyline(const char* cls, const char* color, const std::vector<Point>& pts)
    {
        std::string d;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Xy q = chart_(pts[i]);
            d += (i == 0 ? "M" : " L") + fixed(q.x) + ' ' + fixed(-q.y);
            track(q, 0.0);
        }
        body_ += "<path class=\"" + std::string(cls) + "\" d=\"" + d + "\" stroke=\"" + color + "\" stroke-width=\"" +
                 fixed(stroke_) + "\"/>\n";
    }

    void circle(const char* cls, const char* color, const Xy& c, double r, bool filled = false)
    {
        track(c, r);
        body_ += "<circle class=\"" + std::string(cls) + "\" cx=\"" + fixed(c.x) + "\" cy=\"" + fixed(-c.y) + "\" r=\"" +
                 fixed(r) + "\"" + (filled ? " fill=\"" + std::string(color) + "\"" : "") + " stroke=\"" + color +
                 "\" stroke-width=\"" + fixed(stroke_) + "\"/>\n";
    }

    void track(const Xy& c, double r)
    {
        x0_ = std::min(x0_, c.x - r);
        x1_ = std::max(x1_, c.x + r);
        y0_ = std::min(y0_, -c.y - r);
        y1_ = std::max(y1_, -c.y + r);
    }

    std::string document() const
    {
        double x0 = x0_, x1 = x1_, y0 = y0_, y1 = y1_;
        if (!(x1 >= x0)) x0 = y0 = -1.0, x1 = y1 = 1.0;
        const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-3});
        const std::string vb = fixed(x0 - pad) + ' ' + fixed(y0 - pad) + ' ' + fixed(x1 - x0 + 2 * pad) + ' ' +
                               fixed(y1 - y0 + 2 * pad);
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + vb +
               "\" width=\"600\" height=\"600\">\n<g fill=\"none\" stroke-linejoin=\"round\">\n" + body_ + "</g>\n</svg>\n";
    }

private:
    const Chart& chart_;
    double stroke_;
    std::string body_;
    double x0_ = std::numeric_limits<double>::infinity(), x1_ = -x0_, y0_ = x0_, y1_ = -x0_;
};

constexpr int kCurveSamples = 64;

void draw_chain(SvgWriter& w, const Chart& chart, const BoundaryChain& chain)
{
    const Plane& plane = chain.plane;
    for (const Piece& piece : chain.pieces) {
        std::vector<Point> pts;
        if (const auto* a = std::get_if<Arc>(&piece)) {
            if (a->span() >= 2.0 * std::numbers::pi - 1e-12) {
                const auto [c, r] = chart.circle(a->disk);
                w.circle("arc", "#1f4e9c", c, r);
                continue;
            }
            for (int i = 0; i <= kCurveSamples; ++i)
                pts.push_back(point_about(plane, a->disk.center, a->start_angle + a->span() * i / kCurveSamples,
                                          a->disk.radius));
            w.polyline("arc", "#1f4e9c", pts);
        } else {
            const Segment& sg = std::get<Segment>(piece);
            for (int i = 0; i <= kCurveSamples; ++i)
                pts.push_back(from_unit(plane, um::interpolate(plane.kappa(), to_unit(plane, sg.start),
                                                               to_unit(plane, sg.end),
                                                               static_cast<double>(i) / kCurveSamples)));
            w.polyline("segment", "#1f4e9c", pts);
        }
    }
}

void draw_tree(SvgWriter& w, const GeodesicTree& tree)
{
    const Plane& plane = tree.plane;
    for (const TreeEdge& e : tree.edges) {
        std::vector<Point> pts;
        const Vec3 a = to_unit(plane, tree.vertices[e.a].point);
        const Vec3 b = to_unit(plane, tree.vertices[e.b].point);
        for (int i = 0; i <= kCurveSamples; ++i)
            pts.push_back(from_unit(plane, um::interpolate(plane.kappa(), a, b, static_cast<double>(i) / kCurveSamples)));
        w.polyline("tree", "#c0392b", pts);
    }
}

} // namespace

std::string render_svg(const Scene& scene, RenderKind what)
{
    const Configuration config = scene.configuration();
    validate_configuration(config);
    const Plane& plane = config.plane;
    const Chart chart(plane, config.disks);

    // Stroke width relative to the extent of the picture.
    double extent = 1.0;
    if (plane.model != Model::hyperbolic) {
        extent = 0.0;
        for (const Disk& d : config.disks) {
            const auto [c, r] = chart.circle(d);
            extent = std::max(extent, std::hypot(c.x, c.y) + r);
        }
        extent = std::max(extent, 1e-3);
    }
    SvgWriter w(chart, 0.004 * extent);
    if (plane.model == Model::hyperbolic) w.circle("horizon", "#999999", {0.0, 0.0}, 1.0);

    if (what == RenderKind::hull || what == RenderKind::central) {
        const BoundaryChain chain = hull_boundary(config);
        draw_chain(w, chart, chain);
        if (what == RenderKind::central) draw_tree(w, central_tree(chain));
    } else {
        const IntersectionRegion u = intersect_disks(config);
        if (u.chain.pieces.empty()) {
            for (const Point& v : u.vertices) w.circle("point", "#1f4e9c", chart(v), 0.01 * extent, true);
        } else {
            draw_chain(w, chart, u.chain);
            if (what == RenderKind::cocentral) draw_tree(w, cocentral_tree(u));
        }
    }
    return w.document();
}

} // namespace kpg
