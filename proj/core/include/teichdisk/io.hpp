#pragma once

// JSON and CSV forms of the library's values.  Exact numbers are written as
// "p/q" strings (or integers), inexact ones as JSON numbers in shortest
// round-trip form, so identical inputs give byte-identical output.

#include "teichdisk/asymptotics.hpp"
#include "teichdisk/flat_surface.hpp"
#include "teichdisk/jenkins_strebel.hpp"
#include "teichdisk/plumbing.hpp"
#include "teichdisk/qc.hpp"

#include <string>
#include <vector>

namespace teichdisk::io {

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// {"edges": [[px, qx, py, qy], ...], "pairing": [...], "kind": ["T"|"S", ...]}
std::string surface_to_json(const flat::PlanarPolygonSurface& f);
flat::PlanarPolygonSurface surface_from_json(const std::string& text);

/// {"c", "h", "offset", "iet": {"lengths", "perm", "flips"}, "winding"}
std::string js_to_json(const js::JSNormalForm& j);
js::JSNormalForm js_from_json(const std::string& text);

/// {"c", "iet", "truncation_depth", "charts": [{"kind": "strebel"} |
///  {"kind": "general", "family": name, "param": x}, ...]}
std::string fixture_to_json(const plumbing::PlumbingFixture& fx);
plumbing::PlumbingFixture fixture_from_json(const std::string& text);

/// {"L0", "r", "e": [e1, e2], "N", "H", "K_total", "bound"}
std::string certificate_to_json(const asymptotics::Theorem1Certificate& c);

/// Header s,d.
std::string torus_csv(const std::vector<asymptotics::TorusRow>& rows);
/// Header im_z,collar_K,stretch_K,total_bound.
std::string plumbing_certificate_csv(const plumbing::Theorem2Certificate& c);
/// "# spacing=h" line, then re,im,value with value = |mu|.
std::string beltrami_csv(const qc::BeltramiField& b);
/// "# spacing=h" line, then re,im,value with value = |f(z)| at live nodes.
std::string grid_csv(const qc::GridMap& m);

}  // namespace teichdisk::io
