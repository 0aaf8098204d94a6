// Command-line front end: surfaces, disks, quasiconformal numerics, plumbing
// certificates and the torus sweep.  Results go to stdout (or --out); errors
// go to stderr as one JSON object and set the exit code.

#include "teichdisk/asymptotics.hpp"
#include "teichdisk/earthquake.hpp"
#include "teichdisk/errors.hpp"
#include "teichdisk/flat_surface.hpp"
#include "teichdisk/io.hpp"
#include "teichdisk/jenkins_strebel.hpp"
#include "teichdisk/plumbing.hpp"
#include "teichdisk/qc.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace teichdisk;
using nlohmann::json;

enum Exit { kOk = 0, kPrecondition = 2, kResolution = 3, kInvariant = 4 };

struct Globals {
  std::uint64_t seed = 1;
  std::size_t grid = 201;
  double tol = 1e-9;
  std::string out;
  std::string format;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Globals& g, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + g.out + "'");
  out << body;
}

bool csv_requested(const Globals& g, bool csv_default) {
  if (g.format.empty()) return csv_default;
  if (g.format == "csv") return true;
  if (g.format == "json") return false;
  throw InvalidInput("--format must be json or csv");
}

std::vector<Scalar> scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

Mat2 matrix_arg(const std::string& text) {
  auto v = scalar_list(text);
  if (v.size() != 4) throw InvalidInput("matrix needs four entries a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

std::complex<double> to_complex(const Scalar& t, const Scalar& s) { return {t.to_double(), s.to_double()}; }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

qc::UnivalentEndMap end_map_arg(const std::string& text) {
  auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  double param = colon == std::string::npos ? 0.0 : parse_scalar(text.substr(colon + 1)).to_double();
  return qc::UnivalentEndMap::from_family(family, param);
}

plumbing::PlumbingFixture fixture_arg(const std::string& path) {
  if (path.empty()) return plumbing::swap_fixture();
  return io::fixture_from_json(read_file(path));
}

js::JSNormalForm base_arg(const std::string& path) {
  if (path.empty()) return plumbing::strebel_base(plumbing::swap_fixture());
  return io::js_from_json(read_file(path));
}

// Random rational in [lo, hi) with denominator up to max_den.
Scalar random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
  std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(lo * den, hi * den - 1);
  return Scalar::ratio(num_dist(rng), den);
}

js::JSNormalForm random_js(std::mt19937_64& rng, bool unit_height) {
  std::uniform_int_distribution<int> count(1, 4);
  const int n = count(rng);
  js::IntervalExchange iet;
  for (int k = 0; k < n; ++k) {
    Scalar len = random_rational(rng, 0, 3, 12);
    while (len.sign() <= 0) len = random_rational(rng, 0, 3, 12);
    iet.lengths.push_back(len);
  }
  iet.permutation.resize(static_cast<std::size_t>(n));
  std::iota(iet.permutation.begin(), iet.permutation.end(), std::size_t{0});
  std::shuffle(iet.permutation.begin(), iet.permutation.end(), rng);
  iet.flips.assign(static_cast<std::size_t>(n), false);
  const Scalar c = iet.total_length();
  Scalar h{1};
  if (!unit_height) {
    h = random_rational(rng, 0, 4, 9);
    while (h.sign() <= 0) h = random_rational(rng, 0, 4, 9);
  }
  const Scalar offset = random_rational(rng, 0, 1, 16) * c;
  return js::js_build(c, h, iet, offset);
}

int run_twist_check(const Globals& g, int count) {
  std::mt19937_64 rng(g.seed);
  json failures = json::array();
  int checked = 0;
  for (int k = 0; k < count; ++k, ++checked) {
    const bool unit = k % 2 == 0;
    const js::JSNormalForm j = random_js(rng, unit);
    const Scalar t = random_rational(rng, -3, 3, 10);
    const js::JSNormalForm sheared = js::normalize_sheared(j, t);
    const js::JSNormalForm twisted = js::t_twist(j, t * j.height());
    if (!(sheared == twisted)) {
      failures.push_back({{"surface", json::parse(io::js_to_json(j))},
                          {"t", t.to_string()},
                          {"sheared", json::parse(io::js_to_json(sheared))},
                          {"twisted", json::parse(io::js_to_json(twisted))}});
    }
  }
  json report{{"checked", checked}, {"mismatches", failures.size()}, {"seed", g.seed}};
  if (!failures.empty()) report["failures"] = failures;
  emit(g, report.dump());
  return failures.empty() ? kOk : kInvariant;
}

void error_out(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat-surface, Teichmueller-disk and plumbing toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--grid", g.grid, "Grid nodes per side for numeric estimates")->check(CLI::Range(5, 4001));
  app.add_option("--tol", g.tol, "Tolerance for numeric cross-checks");
  app.add_option("--out", g.out, "Write the result to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  int status = kOk;
  std::function<void()> action;

  // surface
  auto* surface = app.add_subcommand("surface", "Polygon surfaces and the SL(2,R) action");
  surface->require_subcommand(1);
  std::string surface_in;
  std::string from_js;
  std::string lattice = "1,0,0,1";
  auto* build = surface->add_subcommand("build", "Build a parallelogram torus or the polygon of a JS surface");
  build->add_option("--lattice", lattice, "Torus generators ux,uy,vx,vy");
  build->add_option("--from-js", from_js, "JS normal form JSON to cut open");
  build->callback([&] {
    action = [&] {
      if (!from_js.empty()) {
        emit(g, io::surface_to_json(js::js_to_polygon(io::js_from_json(read_file(from_js)))));
        return;
      }
      auto v = scalar_list(lattice);
      if (v.size() != 4) throw InvalidInput("--lattice needs ux,uy,vx,vy");
      emit(g, io::surface_to_json(flat::parallelogram_torus({v[0], v[1]}, {v[2], v[3]})));
    };
  });
  auto* show = surface->add_subcommand("show", "Summarize a surface");
  show->add_option("--in", surface_in, "Surface JSON")->required();
  show->callback([&] {
    action = [&] {
      auto f = io::surface_from_json(read_file(surface_in));
      json out{{"edges", f.size()}, {"genus", flat::genus(f)}, {"simple", flat::is_simple(f)}};
      if (out["simple"].get<bool>()) out["area"] = flat::euclidean_area(f).to_string();
      try {
        out["tau"] = complex_json(flat::torus_tau(f).tau);
      } catch (const InvalidInput&) {
      }
      emit(g, out.dump());
    };
  });
  std::string matrix;
  std::string shear_t;
  std::string stretch_s;
  auto* act = surface->add_subcommand("act", "Apply a matrix, shear or stretch");
  act->add_option("--in", surface_in, "Surface JSON")->required();
  auto* matrix_opt = act->add_option("--matrix", matrix, "a,b,c,d");
  auto* shear_opt = act->add_option("--shear", shear_t, "Shear amount t");
  auto* stretch_opt = act->add_option("--stretch", stretch_s, "Stretch factor s");
  matrix_opt->excludes(shear_opt)->excludes(stretch_opt);
  shear_opt->excludes(stretch_opt);
  act->callback([&] {
    action = [&] {
      auto f = io::surface_from_json(read_file(surface_in));
      if (!matrix.empty()) {
        f = flat::apply_matrix(f, matrix_arg(matrix));
      } else if (!shear_t.empty()) {
        f = flat::shear(f, parse_scalar(shear_t));
      } else if (!stretch_s.empty()) {
        f = flat::stretch(f, parse_scalar(stretch_s));
      } else {
        throw InvalidInput("surface act needs --matrix, --shear or --stretch");
      }
      emit(g, io::surface_to_json(f));
    };
  });

  // disk
  auto* disk = app.add_subcommand("disk", "Teichmueller disk");
  disk->require_subcommand(1);
  std::string base_path;
  std::string t_arg = "0";
  std::string s_arg = "1";
  auto* point = disk->add_subcommand("point", "Evaluate the disk at z = t + i s");
  point->add_option("--base", base_path, "Height-1 JS normal form JSON (default: the c = 2pi swap surface)");
  point->add_option("--t", t_arg, "Re z");
  point->add_option("--s", s_arg, "Im z");
  point->callback([&] {
    action = [&] {
      auto j = js::teich_disk_point(base_arg(base_path), {parse_scalar(t_arg), parse_scalar(s_arg)});
      emit(g, io::js_to_json(j));
    };
  });

  // twist
  auto* twist = app.add_subcommand("twist", "Twist-shear equivalence");
  twist->require_subcommand(1);
  int count = 100;
  auto* check = twist->add_subcommand("check", "Compare re-cut shears with twists on random surfaces");
  check->add_option("--count", count, "Number of random surfaces")->check(CLI::PositiveNumber);
  check->callback([&] { action = [&] { status = run_twist_check(g, count); }; });

  // qc
  auto* qcmd = app.add_subcommand("qc", "Quasiconformal numerics");
  qcmd->require_subcommand(1);
  auto* dil = qcmd->add_subcommand("dilatation", "Dilatation of an affine map, closed form and grid estimate");
  dil->add_option("--matrix", matrix, "a,b,c,d")->required();
  dil->callback([&] {
    action = [&] {
      Mat2 m = matrix_arg(matrix);
      const double K = flat::affine_dilatation(m);
      const double a = m.a.to_double(), b = m.b.to_double(), c = m.c.to_double(), d = m.d.to_double();
      auto f = [=](std::complex<double> z) {
        return std::complex<double>(a * z.real() + b * z.imag(), c * z.real() + d * z.imag());
      };
      auto field = qc::beltrami_of_grid(qc::sample_grid(f, -1.0, 1.0, g.grid));
      const double K_grid = qc::dilatation_of_field(field);
      emit(g, json{{"K", K}, {"K_grid", K_grid}, {"agree", std::abs(K - K_grid) <= g.tol * std::max(1.0, K)}}.dump());
      if (std::abs(K - K_grid) > g.tol * std::max(1.0, K)) status = kInvariant;
    };
  });
  std::string family = "mobius:0.5";
  double radius = 0.05;
  std::string profile = "reciprocal";
  auto* interp = qcmd->add_subcommand("interpolate", "Interpolate an end map with its linear part");
  interp->add_option("--map", family, "family:param (identity, dilation, mobius, twisted)");
  interp->add_option("--r", radius, "Inner radius of the collar");
  interp->add_option("--profile", profile, "Bump profile")->check(CLI::IsMember({"reciprocal", "log"}));
  interp->callback([&] {
    action = [&] {
      auto prof = profile == "log" ? qc::BumpProfile::kLogRadial : qc::BumpProfile::kReciprocal;
      auto result = qc::interpolate_end_map(end_map_arg(family), radius, g.grid, prof);
      if (csv_requested(g, false)) {
        emit(g, io::beltrami_csv(result.field));
        return;
      }
      emit(g, json{{"r", radius},
                   {"sup_mu", result.sup_mu},
                   {"K", result.K},
                   {"exact_inside", result.exact_inside},
                   {"exact_outside", result.exact_outside},
                   {"collar_nodes", result.field.nodes.size()},
                   {"unsettled_nodes", result.field.untrusted},
                   {"max_disagreement", result.field.max_disagreement}}
                  .dump());
    };
  });
  double height = 0.0;
  double eps = 0.0;
  auto* dehn = qcmd->add_subcommand("dehn", "Affine Dehn-twist annulus map");
  auto* height_opt = dehn->add_option("--height", height, "Cylinder height H (circumference 1)");
  auto* eps_opt = dehn->add_option("--eps", eps, "Target dilatation 1 + eps; prints the minimal modulus");
  height_opt->excludes(eps_opt);
  dehn->callback([&] {
    action = [&] {
      if (eps_opt->count() > 0) {
        const double m0 = qc::min_modulus_for_eps(eps);
        emit(g, json{{"eps", eps}, {"M0", m0}, {"K", qc::dehn_twist_annulus(m0).K}}.dump());
        return;
      }
      if (height_opt->count() == 0) throw InvalidInput("qc dehn needs --height or --eps");
      const auto twist_map = qc::dehn_twist_annulus(height);
      emit(g, json{{"H", height}, {"shear", twist_map.matrix.b.to_double()}, {"K", twist_map.K}}.dump());
    };
  });

  // plumb
  auto* plumb = app.add_subcommand("plumb", "Plumbing coordinates");
  plumb->require_subcommand(1);
  std::string fixture_path;
  auto* ppoint = plumb->add_subcommand("point", "Plumb the node at tau = t + i s");
  ppoint->add_option("--fixture", fixture_path, "Fixture JSON (default: c = 2pi swap fixture)");
  ppoint->add_option("--t", t_arg, "Re tau");
  ppoint->add_option("--s", s_arg, "Im tau");
  ppoint->callback([&] {
    action = [&] {
      auto fx = fixture_arg(fixture_path);
      js::DiskParameter tau{parse_scalar(t_arg), parse_scalar(s_arg)};
      json out = json::parse(io::js_to_json(plumbing::plumb(fx, tau)));
      out["excision_radius"] = plumbing::excision_radius(tau);
      if (fx.all_strebel()) out["matches_disk"] = plumbing::strebel_vs_disk_check(fx, tau);
      emit(g, out.dump());
      if (fx.all_strebel() && !out["matches_disk"].get<bool>()) status = kInvariant;
    };
  });
  double r0 = 0.125;
  auto* compare = plumb->add_subcommand("compare", "Offset e and collar dilatation against the Strebel disk");
  compare->add_option("--fixture", fixture_path, "Fixture JSON");
  compare->add_option("--t", t_arg, "Re z");
  std::string compare_s = "20";
  compare->add_option("--s", compare_s, "Im z");
  compare->add_option("--r0", r0, "Collar outer radius");
  compare->callback([&] {
    action = [&] {
      auto fx = fixture_arg(fixture_path);
      const double s = parse_scalar(compare_s).to_double();
      auto cert = plumbing::plumbing_comparison_certificate(fx, {parse_scalar(t_arg).to_double(), s}, r0, g.grid);
      emit(g, json{{"e", cert.e}, {"K_bound", cert.K_bound}, {"r0", cert.r0}, {"collar_r", cert.collar_r}}.dump());
    };
  });
  double thm_eps = 0.05;
  auto* thm2 = plumb->add_subcommand("thm2", "Certificate table for the plumbing disk");
  thm2->add_option("--fixture", fixture_path, "Fixture JSON");
  thm2->add_option("--eps", thm_eps, "Target eps (bound is checked against 2 eps)");
  thm2->callback([&] {
    action = [&] {
      auto cert = plumbing::theorem2_certificate(fixture_arg(fixture_path), thm_eps, g.grid);
      if (csv_requested(g, true)) {
        emit(g, io::plumbing_certificate_csv(cert));
        return;
      }
      json rows = json::array();
      for (const auto& row : cert.rows) rows.push_back({row.im_z, row.collar_K, row.stretch_K, row.total_bound});
      emit(g, json{{"H", cert.H}, {"r0", cert.r0}, {"e", cert.e}, {"rows", rows}}.dump());
    };
  });

  // thm1
  auto* thm1 = app.add_subcommand("thm1", "Earthquake versus Teichmueller disk pipeline");
  thm1->require_subcommand(1);
  std::string g1 = "mobius:0.5";
  std::string g2 = "mobius:0.5";
  std::string length = "2pi";
  std::string z_t = "0";
  std::string z_s = "40";
  auto* run = thm1->add_subcommand("run", "Emit the certificate JSON");
  run->add_option("--g1", g1, "First end map family:param");
  run->add_option("--g2", g2, "Second end map family:param");
  run->add_option("--l", length, "Geodesic length");
  run->add_option("--eps", thm_eps, "Target eps");
  run->add_option("--t", z_t, "Re z");
  run->add_option("--s", z_s, "Im z");
  run->callback([&] {
    action = [&] {
      asymptotics::PipelineOptions opt;
      opt.grid = g.grid;
      auto cert = asymptotics::theorem1_pipeline(end_map_arg(g1), end_map_arg(g2), parse_scalar(length).to_double(),
                                                 thm_eps, to_complex(parse_scalar(z_t), parse_scalar(z_s)), opt);
      emit(g, io::certificate_to_json(cert));
    };
  });

  // torus
  auto* torus = app.add_subcommand("torus", "Exact torus analog");
  torus->require_subcommand(1);
  std::string s_values = "0.5,1,2,5,10,100,1000,10000";
  double sweep_t = 0.0;
  auto* sweep = torus->add_subcommand("sweep", "Distance between earthquake and disk points");
  sweep->add_option("--s", s_values, "Comma-separated Im z values");
  sweep->add_option("--t", sweep_t, "Re z");
  sweep->callback([&] {
    action = [&] {
      std::vector<double> s;
      for (const auto& v : scalar_list(s_values)) s.push_back(v.to_double());
      auto rows = asymptotics::torus_asymptotics(s, sweep_t);
      for (const auto& row : rows) {
        if (std::abs(row.closed_form - row.measured) > g.tol) {
          throw InvariantViolation("closed form and measured distance differ at s = " + io::format_double(row.s));
        }
      }
      if (csv_requested(g, true)) {
        emit(g, io::torus_csv(rows));
        return;
      }
      json out = json::array();
      for (const auto& row : rows) out.push_back({{"s", row.s}, {"d", row.measured}, {"closed_form", row.closed_form}});
      emit(g, out.dump());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    error_out("usage", ex.what());
    return kPrecondition;
  }

  try {
    if (action) action();
  } catch (const ResolutionLimited& ex) {
    error_out("resolution_limited", ex.what());
    return kResolution;
  } catch (const InvariantViolation& ex) {
    error_out("invariant_violation", ex.what());
    return kInvariant;
  } catch (const OrientationFailure& ex) {
    error_out("orientation_failure", ex.what());
    return kPrecondition;
  } catch (const InvalidInput& ex) {
    error_out("invalid_input", ex.what());
    return kPrecondition;
  } catch (const std::exception& ex) {
    error_out("internal", ex.what());
    return 1;
  }
  return status;
}
