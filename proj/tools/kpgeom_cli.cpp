// kpgeom command-line driver.
//
// Exit codes: 0 all checks pass, 1 a violation was found, 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpgeom/central_set.hpp"
#include "kpgeom/cocentral_set.hpp"
#include "kpgeom/disk_intersection.hpp"
#include "kpgeom/harness.hpp"

using nlohmann::json;
using namespace kpg;

namespace {

struct Globals {
    std::optional<std::string> model;
    std::optional<double> curvature;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<double> tol;
    std::string out;
};

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GeometryError(ErrorCode::parse, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GeometryError(ErrorCode::parse, "cannot write " + path);
    out << text;
}

// Scene file when given, else an empty scene; global flags override either.
Scene load_scene(const std::string& path, const Globals& g)
{
    Scene s = path.empty() ? Scene{} : parse_scene(slurp(path));
    if (g.model || g.curvature) {
        if (!s.disks.empty() && g.model && parse_model(*g.model) != s.plane.model)
            throw GeometryError(ErrorCode::parse, "--model disagrees with the scene");
        const Model m = g.model ? parse_model(*g.model) : s.plane.model;
        const double k = g.curvature.value_or(s.plane.k);
        if (!s.disks.empty() && k != s.plane.k)
            throw GeometryError(ErrorCode::parse, "--curvature disagrees with the scene");
        s.plane = m == Model::euclidean ? Plane::euclidean() : Plane::checked({m, k});
    }
    if (g.seed) s.seed = *g.seed;
    if (g.trials) s.trials = *g.trials;
    if (g.tol) s.tolerance = *g.tol;
    return s;
}

json point_json(const Point& p)
{
    return json::array({p.coords.x, p.coords.y, p.coords.z});
}

json chain_json(const BoundaryChain& chain)
{
    json pieces = json::array();
    for (const Piece& piece : chain.pieces) {
        if (const auto* a = std::get_if<Arc>(&piece))
            pieces.push_back({{"type", "arc"}, {"disk", a->disk_index}, {"start_angle", a->start_angle},
                              {"end_angle", a->end_angle}, {"length", piece_length(chain, piece)}});
        else {
            const Segment& s = std::get<Segment>(piece);
            pieces.push_back({{"type", "segment"}, {"start", point_json(s.start)}, {"end", point_json(s.end)},
                              {"length", piece_length(chain, piece)}});
        }
    }
    return pieces;
}

json tree_json(const GeodesicTree& t)
{
    json j;
    j["vertices"] = json::array();
    for (const TreeVertex& v : t.vertices)
        j["vertices"].push_back({{"point", point_json(v.point)}, {"radius", v.radius}, {"contacts", v.contacts}});
    j["edges"] = json::array();
    for (const TreeEdge& e : t.edges) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"generators", e.generators}});
    const TreeCertificate c = certify_tree(t);
    j["certificate"] = {{"connected", c.connected}, {"euler", c.euler}, {"simple", c.simple}};
    return j;
}

int write_report(const Report& r, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << report_csv(r);
        std::cerr << report_summary_json(r);
    } else {
        emit(out + ".csv", report_csv(r));
        emit(out + ".summary.json", report_summary_json(r));
    }
    return r.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convex hulls and intersections of disks in constant-curvature planes"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--model", g.model, "hyperbolic | euclidean | spherical")
        ->check(CLI::IsMember({"hyperbolic", "euclidean", "spherical"}));
    app.add_option("--curvature", g.curvature, "curvature magnitude k (sectional curvature -k^2, 0, k^2)");
    app.add_option("--seed", g.seed, "campaign seed");
    app.add_option("--trials", g.trials, "number of trials");
    app.add_option("--tol", g.tol, "relative margin tolerance");
    app.add_option("--out", g.out, "output file (reports: path prefix for .csv and .summary.json)");

    std::string scene_path;
    std::string what = "hull";
    auto add = [&](const char* name, const char* help, bool scene_required) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* opt = sub->add_option("scene", scene_path, "scene JSON file, - for stdin");
        if (scene_required) opt->required();
        return sub;
    };
    CLI::App* hull = add("hull", "convex hull boundary and perimeter", true);
    CLI::App* inter = add("intersect", "intersection region and area", true);
    CLI::App* central = add("central-tree", "central set of the convex hull", true);
    CLI::App* cocentral = add("cocentral-tree", "co-central set of the intersection", true);
    CLI::App* vper = add("verify-perimeter", "perimeter monotonicity campaign", false);
    CLI::App* varea = add("verify-area", "area monotonicity campaign", false);
    CLI::App* vind = add("verify-induction", "leaf decomposition identities", false);
    CLI::App* render = add("render", "SVG figure", true);
    render->add_option("--what", what, "hull | intersection | central | cocentral")
        ->check(CLI::IsMember({"hull", "intersection", "central", "cocentral"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Scene scene = load_scene(scene_path, g);
        if (hull->parsed()) {
            const BoundaryChain chain = hull_boundary(scene.configuration());
            json j{{"perimeter", hull_perimeter(chain)}, {"area", chain_area(chain)}, {"pieces", chain_json(chain)}};
            emit(g.out, j.dump(2) + "\n");
        } else if (inter->parsed()) {
            const IntersectionRegion u = intersect_disks(scene.configuration());
            json j{{"empty", u.empty_flag}, {"single_point", u.single_point()}, {"area", region_area(u)},
                   {"pieces", chain_json(u.chain)}};
            j["vertices"] = json::array();
            for (const Point& v : u.vertices) j["vertices"].push_back(point_json(v));
            emit(g.out, j.dump(2) + "\n");
        } else if (central->parsed()) {
            emit(g.out, tree_json(central_tree(hull_boundary(scene.configuration()))).dump(2) + "\n");
        } else if (cocentral->parsed()) {
            const IntersectionRegion u = intersect_disks(scene.configuration());
            if (u.empty_flag) throw GeometryError(ErrorCode::domain, "the intersection is empty");
            emit(g.out, tree_json(cocentral_tree(u)).dump(2) + "\n");
        } else if (vper->parsed()) {
            return write_report(verify_perimeter(scene), g.out);
        } else if (varea->parsed()) {
            return write_report(verify_area(scene), g.out);
        } else if (vind->parsed()) {
            return write_report(verify_induction(scene), g.out);
        } else if (render->parsed()) {
            emit(g.out, render_svg(scene, parse_render_kind(what)));
        }
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
