// Command-line surface for the library: region curves, membership verdicts,
// radii, bounds, structural builds, and the self-verification suite.
//
// Exit codes: 0 = verdict holds / checks passed, 1 = violation found,
// 2 = usage or domain error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gft/booth.hpp"
#include "gft/bs_class.hpp"
#include "gft/functions.hpp"
#include "gft/grid.hpp"
#include "gft/power_series.hpp"
#include "gft/radii.hpp"
#include "gft/serialize.hpp"
#include "gft/subordination.hpp"
#include "gft/verify.hpp"

namespace {

using gft::cplx;

// Complex literals of the form RE, RE+IMi, RE-IMi, IMi, i, -i.
cplx parse_complex(const std::string& text) {
  const std::string err = "bad complex literal: " + text;
  if (text.empty()) throw std::invalid_argument(err);
  const auto to_double = [&](const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(err);
    return v;
  };
  if (text.back() != 'i') return {to_double(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
      split = k;
  }
  const auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return to_double(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {to_double(body.substr(0, split)), imag_part(body.substr(split))};
}

// "r1,r2,...:angles"; the angle count is optional and defaults to 720.
gft::GridSpec parse_grid(const std::string& text) {
  gft::GridSpec grid;
  grid.radii.clear();
  std::string radii_part = text;
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    radii_part = text.substr(0, colon);
    grid.angular_samples = std::stoul(text.substr(colon + 1));
  }
  std::stringstream ss(radii_part);
  std::string item;
  while (std::getline(ss, item, ',')) grid.radii.push_back(std::stod(item));
  grid.validate();
  return grid;
}

gft::GridSpec resolve_grid(const std::string& flag_value) {
  if (!flag_value.empty()) return parse_grid(flag_value);
  if (const char* env = std::getenv("GFT_DEFAULT_GRID"); env && *env) return parse_grid(env);
  return gft::GridSpec::default_grid();
}

// Function mini-language: id | tilde:alpha=A | gn:n=N,c=RE+IMi |
// series:@file.json | built:alpha=A,omega=RE+IMi
gft::AnalyticFunction parse_function(const std::string& spec, std::size_t order) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) {
        kv[""] = item;
      } else {
        kv[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
  }
  const auto need = [&](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("function spec '" + head + "' needs " + key + "=");
    return it->second;
  };
  if (head == "id") return gft::Identity{};
  if (head == "tilde") return gft::ExtremalMember{std::stod(need("alpha"))};
  if (head == "gn")
    return gft::TwoTermMap{std::stoi(need("n")), parse_complex(need("c"))};
  if (head == "series") {
    std::string path = kv.count("") ? kv[""] : "";
    if (path.empty() || path[0] != '@')
      throw std::invalid_argument("series spec must name a file: series:@file.json");
    std::ifstream in(path.substr(1));
    if (!in) throw std::invalid_argument("cannot open " + path.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return gft::SeriesMap(gft::series_from_json(buf.str()));
  }
  if (head == "built") {
    const double alpha = std::stod(need("alpha"));
    const cplx omega = parse_complex(need("omega"));
    if (std::abs(omega) > 1.0 + 1e-12)
      throw std::invalid_argument("built: |omega| must not exceed 1");
    gft::PowerSeries q = gft::lemniscate_series(alpha, order);
    cplx wk = 1.0;
    for (std::size_t k = 1; k <= q.order(); ++k) {
      wk *= omega;
      q.at(k) *= wk;
    }
    return gft::build_member(q);
  }
  throw std::invalid_argument("unknown function spec: " + spec);
}

int cmd_region(double alpha, std::size_t samples, const std::string& format) {
  const gft::BoothRegion region(alpha);
  if (samples < 16) throw std::invalid_argument("region needs at least 16 samples");
  std::vector<cplx> pts;
  pts.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j)
    pts.push_back(region.boundary_point(6.283185307179586476925286766559 * double(j) /
                                        double(samples)));
  if (format == "csv") {
    std::string out = "phi,x,y\n";
    for (std::size_t j = 0; j < samples; ++j) {
      const double phi = 6.283185307179586476925286766559 * double(j) / double(samples);
      out += gft::fmt17(phi) + "," + gft::fmt17(pts[j].real()) + "," +
             gft::fmt17(pts[j].imag()) + "\n";
    }
    std::cout << out;
    return 0;
  }
  if (format == "svg") {
    double xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
    for (const cplx& p : pts) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    std::string d;
    for (std::size_t j = 0; j < samples; ++j) {
      d += (j == 0 ? "M " : " L ");
      d += gft::fmt17(pts[j].real()) + " " + gft::fmt17(-pts[j].imag());
    }
    d += " Z";
    std::cout << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
              << gft::fmt17(xmin - pad) << " " << gft::fmt17(-ymax - pad) << " "
              << gft::fmt17(xmax - xmin + 2 * pad) << " " << gft::fmt17(ymax - ymin + 2 * pad)
              << "\">\n<path d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
              << gft::fmt17((xmax - xmin) / 400.0) << "\"/>\n</svg>\n";
    return 0;
  }
  // json
  std::string out = "{\"alpha\":" + gft::fmt17(alpha);
  out += ",\"axis_crossings\":{\"re\":[" + gft::fmt17(-region.re_upper()) + "," +
         gft::fmt17(region.re_upper()) + "],\"im\":[" + gft::fmt17(-1.0 / (1.0 + alpha)) + "," +
         gft::fmt17(1.0 / (1.0 + alpha)) + "]},\"points\":[";
  for (std::size_t j = 0; j < samples; ++j) {
    if (j) out += ",";
    out += gft::complex_to_json(pts[j]);
  }
  out += "]}";
  std::cout << out << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const std::vector<gft::CheckResult> results = gft::run_suite(suite, seed);
  std::size_t pass = 0, fail = 0, xfail = 0, xpass = 0;
  for (const gft::CheckResult& c : results) {
    const gft::CheckStatus s = gft::status_of(c);
    switch (s) {
      case gft::CheckStatus::pass: ++pass; break;
      case gft::CheckStatus::fail: ++fail; break;
      case gft::CheckStatus::xfail: ++xfail; break;
      case gft::CheckStatus::xpass: ++xpass; break;
    }
    std::cout << "[" << gft::status_label(s) << "] " << c.name << ": " << c.detail << "\n";
  }
  std::cout << "suite " << suite << ": " << pass << " pass, " << fail << " fail, " << xfail
            << " expected-fail, " << xpass << " unexpected-pass\n";
  return gft::suite_ok(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for the class of oval-region starlike maps"};
  app.require_subcommand(1);

  auto* region = app.add_subcommand("region", "Emit the oval's boundary curve");
  double region_alpha = 0.0;
  std::size_t region_samples = 720;
  std::string region_format = "csv";
  region->add_option("--alpha", region_alpha, "region parameter in [0,1)")->required();
  region->add_option("--samples", region_samples, "boundary sample count");
  region->add_option("--format", region_format)
      ->check(CLI::IsMember({"csv", "svg", "json"}));

  auto* member = app.add_subcommand("member", "Grid membership verdict for a function");
  std::string member_spec;
  double member_alpha = 0.0;
  std::string member_grid;
  std::size_t member_order = 128;
  member->add_option("spec", member_spec,
                     "id | tilde:alpha=A | gn:n=N,c=RE+IMi | series:@file.json | "
                     "built:alpha=A,omega=RE+IMi")
      ->required();
  member->add_option("--alpha", member_alpha, "class parameter in [0,1)")->required();
  member->add_option("--grid", member_grid, "r1,r2,...:angles");
  member->add_option("--order", member_order, "series truncation for built functions");

  auto* radius = app.add_subcommand("radius", "Radius of starlikeness of a given order");
  double radius_alpha = 0.0, radius_gamma = 0.0;
  radius->add_option("--alpha", radius_alpha, "class parameter in [0,1)")->required();
  radius->add_option("--order", radius_gamma, "starlikeness order in [0,1)");

  auto* afr = app.add_subcommand("alpha-for-radius",
                                 "Largest class parameter keeping |z| < r starlike");
  double afr_r = 0.0;
  afr->add_option("--r", afr_r, "radius in (0,1]")->required();

  auto* gn = app.add_subcommand("gn", "Exclusion test for z + c z^n");
  int gn_n = 2;
  std::string gn_c;
  double gn_alpha = 0.0;
  gn->add_option("--n", gn_n, "power, n >= 2")->required();
  gn->add_option("--c", gn_c, "coefficient, RE+IMi")->required();
  gn->add_option("--alpha", gn_alpha, "class parameter in [0,1)")->required();

  auto* bounds = app.add_subcommand("bounds", "Two-sided bounds on Re(f(z)/z)");
  double bounds_alpha = 0.0, bounds_r = 0.0;
  bounds->add_option("--alpha", bounds_alpha, "class parameter in [0,1)")->required();
  bounds->add_option("--r", bounds_r, "ring radius in [0,1)")->required();

  auto* build = app.add_subcommand("build", "Emit a structurally built member as series JSON");
  double build_alpha = 0.0;
  std::string build_omega = "1";
  std::size_t build_order = 128;
  build->add_option("--alpha", build_alpha, "class parameter in [0,1)")->required();
  build->add_option("--omega", build_omega, "rotation factor, |omega| <= 1");
  build->add_option("--order", build_order, "series truncation order");

  auto* convexity = app.add_subcommand("convexity", "Grid minimum of the convexity functional");
  double conv_alpha = 0.0;
  std::size_t conv_samples = 720;
  convexity->add_option("--alpha", conv_alpha, "class parameter in [0,1)")->required();
  convexity->add_option("--samples", conv_samples, "angular samples per ring");

  auto* curvature = app.add_subcommand("curvature", "Curvature scan of the boundary curve");
  double curv_alpha = 0.0;
  std::size_t curv_samples = 4096;
  curvature->add_option("--alpha", curv_alpha, "region parameter in [0,1)")->required();
  curvature->add_option("--samples", curv_samples, "angular samples");

  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 20260816ULL;
  verify->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"all", "booth", "radii", "bounds", "class"}));
  verify->add_option("--seed", verify_seed, "seed for random draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*region) return cmd_region(region_alpha, region_samples, region_format);

    if (*member) {
      const gft::AnalyticFunction f = parse_function(member_spec, member_order);
      const gft::GridSpec grid = resolve_grid(member_grid);
      const gft::Verdict v = gft::membership_test(f, member_alpha, grid);
      std::cout << gft::verdict_to_json(v, grid) << "\n";
      return v.holds() ? 0 : 1;
    }

    if (*radius) {
      const gft::RadiusResult res = gft::radius_starlike(radius_alpha, radius_gamma);
      std::cout << "{\"r_closed\":" << gft::fmt17(res.r_closed)
                << ",\"r_bisect\":" << gft::fmt17(res.r_bisect)
                << ",\"agreement\":" << gft::fmt17(res.agreement)
                << ",\"paper_formula_value\":" << gft::fmt17(res.paper_formula_value) << "}\n";
      return 0;
    }

    if (*afr) {
      const double bound = gft::alpha_for_radius(afr_r);
      std::cout << "{\"alpha_max\":" << gft::fmt17(bound) << "}\n";
      return 0;
    }

    if (*gn) {
      const gft::ExclusionResult res =
          gft::two_term_nonmembership(gn_n, parse_complex(gn_c), gn_alpha);
      std::cout << "{\"condition\":\"" << gft::exclusion_label(res.condition)
                << "\",\"x1\":" << gft::fmt17(res.x1) << ",\"x2\":" << gft::fmt17(res.x2)
                << ",\"excluded\":" << (res.excluded() ? "true" : "false") << "}\n";
      return res.excluded() ? 1 : 0;
    }

    if (*bounds) {
      const gft::BoundsPair bp = gft::re_f_over_z_bounds(bounds_alpha, bounds_r);
      std::cout << "{\"lower\":" << gft::fmt17(bp.lower) << ",\"upper\":" << gft::fmt17(bp.upper)
                << ",\"paper_printed_lower\":" << gft::fmt17(bp.paper_printed_lower)
                << ",\"hypothesis_satisfied\":" << (bp.hypothesis_satisfied ? "true" : "false")
                << ",\"sharp_witness\":{\"z_plus\":" << gft::complex_to_json(cplx{bp.radius, 0.0})
                << ",\"value_plus\":" << gft::complex_to_json(cplx{bp.upper, 0.0})
                << ",\"z_minus\":" << gft::complex_to_json(cplx{-bp.radius, 0.0})
                << ",\"value_minus\":" << gft::complex_to_json(cplx{bp.lower, 0.0}) << "}}\n";
      return 0;
    }

    if (*build) {
      const cplx omega = parse_complex(build_omega);
      if (std::abs(omega) > 1.0 + 1e-12)
        throw std::invalid_argument("build: |omega| must not exceed 1");
      gft::PowerSeries q = gft::lemniscate_series(build_alpha, build_order);
      cplx wk = 1.0;
      for (std::size_t k = 1; k <= q.order(); ++k) {
        wk *= omega;
        q.at(k) *= wk;
      }
      std::cout << gft::series_to_json(gft::build_member(q).series) << "\n";
      return 0;
    }

    if (*convexity) {
      const gft::ConvexityReport rep = gft::convexity_check_p(conv_alpha, conv_samples);
      std::cout << "{\"grid_min\":" << gft::fmt17(rep.grid_min)
                << ",\"k_alpha\":" << gft::fmt17(rep.k_alpha) << "}\n";
      return 0;
    }

    if (*curvature) {
      const gft::CurvatureScan scan = gft::curvature_min(curv_alpha, curv_samples);
      std::cout << "{\"min\":" << gft::fmt17(scan.minimum)
                << ",\"phi_at_min\":" << gft::fmt17(scan.phi_at_min)
                << ",\"convex\":" << (scan.minimum > 0.0 ? "true" : "false") << "}\n";
      return 0;
    }

    if (*verify) return cmd_verify(verify_suite, verify_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
