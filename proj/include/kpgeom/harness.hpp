#pragma once

// Scenes, verification campaigns, reports and SVG figures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpgeom/disk_hull.hpp"

namespace kpg {

struct Scene {
    Plane plane;
    std::vector<Disk> disks;
    /// Centers of the contracted system, same order and radii as `disks`.
    std::optional<std::vector<Point>> contracted_centers;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t max_disks = 8;
    double tolerance = 1e-7;

    Configuration configuration() const { return {plane, disks}; }
    std::optional<Configuration> contracted() const;
};

/// JSON scene. "curvature" is the magnitude k; centers are model coordinates
/// ([x, y] is accepted for the euclidean plane) unless "convention" is
/// "poincare", where hyperbolic centers are [x, y] in the Poincare disk.
/// Throws GeometryError(parse) on malformed input.
Scene parse_scene(std::string_view json);
/// Always writes model coordinates; parse_scene(serialize_scene(s)) == s.
std::string serialize_scene(const Scene& scene);
bool operator==(const Scene& a, const Scene& b);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    /// perimeter | area | central-decomposition | cocentral-decomposition | error
    std::string kind;
    double before = 0.0;
    double after = 0.0;
    double margin = 0.0;
    bool pass = false;
    /// Generator used, or the reason of a failure.
    std::string note;
};

struct Report {
    std::string command;
    std::vector<TrialRecord> records;
    /// Area campaigns: trials whose nonempty intersection became empty.
    std::size_t nonempty_violations = 0;

    bool pass() const;
    double min_margin() const;
    std::vector<std::size_t> failures() const;
};

std::string report_csv(const Report& report);
std::string report_summary_json(const Report& report);

/// Random campaign parameters (used when a scene carries no disks).
struct Campaign {
    Plane plane;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t min_disks = 2;
    std::size_t max_disks = 8;
    double max_radius = 1.0;
    double tolerance = 1e-7;
};

Campaign campaign_of(const Scene& scene);

/// Monotonicity campaigns. Each trial draws a configuration from its own derived
/// seed, contracts it with a random generator and records the margin.
Report verify_perimeter(const Campaign& campaign);
Report verify_area(const Campaign& campaign);
/// Sharpened systems: central-tree leaf split (even trials) and co-central
/// area identity (odd trials).
Report verify_induction(const Campaign& campaign);

/// Scene forms: an explicit contracted pair gives one trial; otherwise the
/// scene disks are contracted by `trials` random generators.
Report verify_perimeter(const Scene& scene);
Report verify_area(const Scene& scene);
Report verify_induction(const Scene& scene);

/// Random configuration of one trial, as used by the campaigns.
Configuration campaign_configuration(const Campaign& campaign, std::size_t trial, bool nonempty_intersection);

enum class RenderKind { hull, intersection, central, cocentral };
RenderKind parse_render_kind(std::string_view name);

/// Deterministic SVG: hyperbolic scenes in the Poincare disk, euclidean
/// scenes in the plane, spherical scenes stereographically from the antipode
/// of their hemisphere.
std::string render_svg(const Scene& scene, RenderKind what);

} // namespace kpg
