#include "kpgeom/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace kpg {

namespace {

struct SegmentProjection {
    double dist;
    Vec3 point;
};

SegmentProjection project_to_segment(int kappa, const Vec3& a, const Vec3& b, const Vec3& p)
{
    const double len = um::distance(kappa, a, b);
    const double da = um::distance(kappa, p, a);
    const double db = um::distance(kappa, p, b);
    SegmentProjection best = da <= db ? SegmentProjection{da, a} : SegmentProjection{db, b};
    if (len < 1e-14) return best;
    const Vec3 w = um::line_through(kappa, a, b);
    const Vec3 foot = um::project(kappa, w, p);
    if (um::distance(kappa, a, foot) + um::distance(kappa, foot, b) <= len + 1e-12) {
        const double d = std::abs(um::signed_distance(kappa, w, p));
        if (d < best.dist) best = {d, foot};
    }
    return best;
}

} // namespace

std::vector<std::vector<std::size_t>> GeodesicTree::adjacency() const
{
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const TreeEdge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

std::size_t GeodesicTree::degree(std::size_t v) const
{
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(),
                                                  [v](const TreeEdge& e) { return e.a == v || e.b == v; }));
}

TreeCertificate certify_tree(const GeodesicTree& tree)
{
    TreeCertificate cert;
    const std::size_t n = tree.vertices.size();
    cert.euler = n > 0 && tree.edges.size() + 1 == n;

    std::vector<char> seen(n, 0);
    const auto adj = tree.adjacency();
    std::vector<std::size_t> stack;
    if (n > 0) {
        stack.push_back(0);
        seen[0] = 1;
    }
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    cert.connected = n > 0 && reached == n;

    const Plane& plane = tree.plane;
    const int kappa = plane.kappa();
    const double tol = plane.unit_len(plane.eps);
    std::vector<Vec3> pts;
    for (const TreeVertex& v : tree.vertices) pts.push_back(to_unit(plane, v.point));
    cert.simple = true;
    for (std::size_t i = 0; i < tree.edges.size() && cert.simple; ++i) {
        const TreeEdge& e = tree.edges[i];
        if (e.a == e.b || um::distance(kappa, pts[e.a], pts[e.b]) <= tol) cert.simple = false;
        for (std::size_t j = i + 1; j < tree.edges.size() && cert.simple; ++j) {
            const TreeEdge& f = tree.edges[j];
            const bool share = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
            if (share) {
                // Only the far endpoints can reveal an overlap.
                const std::size_t shared = (e.a == f.a || e.a == f.b) ? e.a : e.b;
                const std::size_t eo = e.a == shared ? e.b : e.a;
                const std::size_t fo = f.a == shared ? f.b : f.a;
                if (eo == fo) cert.simple = false;
                else if (project_to_segment(kappa, pts[e.a], pts[e.b], pts[fo]).dist <= tol ||
                         project_to_segment(kappa, pts[f.a], pts[f.b], pts[eo]).dist <= tol)
                    cert.simple = false;
                continue;
            }
            const Vec3 we = um::line_through(kappa, pts[e.a], pts[e.b]);
            const Vec3 wf = um::line_through(kappa, pts[f.a], pts[f.b]);
            const double s1 = dot(we, pts[f.a]), s2 = dot(we, pts[f.b]);
            const double s3 = dot(wf, pts[e.a]), s4 = dot(wf, pts[e.b]);
            if (s1 * s2 < 0.0 && s3 * s4 < 0.0) cert.simple = false;
            for (std::size_t v : {f.a, f.b})
                if (project_to_segment(kappa, pts[e.a], pts[e.b], pts[v]).dist <= tol) cert.simple = false;
            for (std::size_t v : {e.a, e.b})
                if (project_to_segment(kappa, pts[f.a], pts[f.b], pts[v]).dist <= tol) cert.simple = false;
        }
    }
    return cert;
}

TreeProjection project_to_tree(const GeodesicTree& tree, const Point& p)
{
    const Plane& plane = tree.plane;
    const int kappa = plane.kappa();
    const Vec3 u = to_unit(plane, p);
    TreeProjection best{std::numeric_limits<double>::infinity(), p, tree.edges.size()};
    for (std::size_t i = 0; i < tree.edges.size(); ++i) {
        const TreeEdge& e = tree.edges[i];
        const auto sp = project_to_segment(kappa, to_unit(plane, tree.vertices[e.a].point),
                                           to_unit(plane, tree.vertices[e.b].point), u);
        if (sp.dist < best.distance) best = {sp.dist, from_unit(plane, sp.point), i};
    }
    for (const TreeVertex& v : tree.vertices) {
        const double d = um::distance(kappa, u, to_unit(plane, v.point));
        if (d < best.distance) best = {d, v.point, tree.edges.size()};
    }
    best.distance = plane.len(best.distance);
    return best;
}

std::pair<std::size_t, std::size_t> SystemTree::leaf() const
{
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const SystemLink& l : links) {
        adj[l.u].push_back(l.v);
        adj[l.v].push_back(l.u);
    }
    for (std::size_t i : nodes)
        if (adj[i].size() == 1) return {i, adj[i][0]};
    throw GeometryError(ErrorCode::tree_structure, "subdivided tree has no leaf");
}

SystemTree subdivide_by_centers(const GeodesicTree& tree, std::span<const Disk> disks, double tol)
{
    const Plane& plane = tree.plane;
    const int kappa = plane.kappa();
    SystemTree out;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        bool dup = false;
        for (std::size_t j : out.nodes) dup |= distance(plane, disks[i].center, disks[j].center) <= tol;
        if (!dup) out.nodes.push_back(i);
    }
    for (const TreeVertex& v : tree.vertices) {
        const bool carried = std::any_of(out.nodes.begin(), out.nodes.end(),
                                         [&](std::size_t i) { return distance(plane, disks[i].center, v.point) <= tol; });
        if (!carried) throw GeometryError(ErrorCode::domain, "system is not sharpened: tree vertex without disk");
    }
    for (std::size_t i : out.nodes)
        if (project_to_tree(tree, disks[i].center).distance > tol)
            throw GeometryError(ErrorCode::domain, "system is not sharpened: center off the tree");

    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
        const Vec3 a = to_unit(plane, tree.vertices[tree.edges[e].a].point);
        const Vec3 b = to_unit(plane, tree.vertices[tree.edges[e].b].point);
        const double len = um::distance(kappa, a, b);
        std::vector<std::pair<double, std::size_t>> along;
        for (std::size_t i : out.nodes) {
            const Vec3 c = to_unit(plane, disks[i].center);
            const double da = um::distance(kappa, a, c);
            if (da + um::distance(kappa, c, b) <= len + plane.unit_len(tol)) along.push_back({da, i});
        }
        std::sort(along.begin(), along.end());
        for (std::size_t t = 0; t + 1 < along.size(); ++t) out.links.push_back({along[t].second, along[t + 1].second, e});
    }
    return out;
}

} // namespace kpg
