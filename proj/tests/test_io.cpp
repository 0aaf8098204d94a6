#include "teichdisk/errors.hpp"
#include "teichdisk/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace teichdisk;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("shortest double formatting") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-2.5e-10) == "-2.5e-10");
  for (double v : {M_PI, 1.0 / 3.0, 1e300, 5e-324}) CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
}

TEST_CASE("surface JSON round trip") {
  auto sheared = flat::shear(flat::unit_square_torus(), Scalar::ratio(2, 3));
  const std::string text = io::surface_to_json(sheared);
  CHECK(io::surface_from_json(text) == sheared);
  CHECK(io::surface_to_json(io::surface_from_json(text)) == text);

  auto swap = js::js_to_polygon(js::js_build(Scalar(2 * M_PI), 1,
                                             {{Scalar(M_PI), Scalar(M_PI)}, {1, 0}, {false, false}}, 0));
  auto back = io::surface_from_json(io::surface_to_json(swap));
  CHECK(back == swap);
  for (std::size_t k = 0; k < swap.size(); ++k) {
    CHECK(back.edges()[k].x.identical(swap.edges()[k].x));
    CHECK(back.edges()[k].y.identical(swap.edges()[k].y));
  }

  auto hand = io::surface_from_json(R"({"edges": [[1,1,0,1],[0,1,1,1],[-1,1,0,1],[0,1,-1,1]], "pairing": [2,3,0,1]})");
  CHECK(hand == flat::unit_square_torus());
  CHECK_THROWS_AS(io::surface_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(io::surface_from_json(R"({"edges": [[1,0,0,1]], "pairing": [0]})"), InvalidInput);
  CHECK_THROWS_AS(io::surface_from_json(R"({"pairing": []})"), InvalidInput);
  CHECK_THROWS_AS(io::surface_from_json(
                      R"({"edges": [[1,1,0,1],[0,1,1,1],[-1,1,0,1],[0,1,-1,1]], "pairing": [2,3,0,1], "kind": ["T","T","T","Q"]})"),
                  InvalidInput);
}

TEST_CASE("JS JSON round trip") {
  auto exact = js::js_build(Scalar(3), Scalar::ratio(1, 2), {{Scalar(1), Scalar(2)}, {1, 0}, {false, false}},
                            Scalar::ratio(7, 2));
  const std::string text = io::js_to_json(exact);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  auto back = io::js_from_json(text);
  CHECK(back == exact);
  CHECK(back.winding() == 1);
  CHECK(io::js_to_json(back) == text);

  auto inexact = js::js_build(Scalar(2 * M_PI), 2, {{Scalar(M_PI), Scalar(M_PI)}, {1, 0}, {false, false}},
                              Scalar(M_PI / 3));
  auto again = io::js_from_json(io::js_to_json(inexact));
  CHECK(again.circumference().identical(inexact.circumference()));
  CHECK(again.offset().identical(inexact.offset()));

  auto minimal = io::js_from_json(R"({"c": 1, "h": "2", "iet": {"lengths": [1], "perm": [0]}})");
  CHECK(minimal == js::js_build(1, 2, js::IntervalExchange::trivial(1), 0));
  CHECK(io::js_from_json(R"({"c": "2pi", "h": 1, "iet": {"lengths": ["pi", "pi"], "perm": [1, 0]}})")
            .circumference()
            .to_double() == doctest::Approx(2 * M_PI));
  CHECK_THROWS_AS(io::js_from_json(R"({"c": 1, "h": 1, "iet": {"lengths": [2], "perm": [0]}})"), InvalidInput);
  CHECK_THROWS_AS(io::js_from_json(R"({"c": 1, "h": 1, "iet": {"lengths": [1], "perm": [-1]}})"), InvalidInput);
  CHECK_THROWS_AS(io::js_from_json(R"({"h": 1})"), InvalidInput);
}

TEST_CASE("fixture JSON round trip") {
  auto fx = plumbing::swap_fixture();
  fx.charts[1] = plumbing::EndChart::general(qc::UnivalentEndMap::mobius(0.5));
  const std::string text = io::fixture_to_json(fx);
  auto back = io::fixture_from_json(text);
  CHECK(back.model.c.identical(fx.model.c));
  CHECK(back.model.iet == fx.model.iet);
  CHECK(back.model.truncation_depth == 8.0);
  CHECK(back.charts[0].strebel);
  CHECK_FALSE(back.charts[1].strebel);
  CHECK(back.charts[1].map.family() == "mobius");
  CHECK(back.charts[1].map.param() == 0.5);
  CHECK(io::fixture_to_json(back) == text);
  CHECK_THROWS_AS(io::fixture_from_json(R"({"c": 1, "iet": {"lengths": [1], "perm": [0]}, "charts": []})"), InvalidInput);
  CHECK_THROWS_AS(io::fixture_from_json(R"({"c": 2, "iet": {"lengths": [1], "perm": [0]}, "charts": [{"kind": "strebel"}, {"kind": "strebel"}]})"),
                  InvalidInput);
  CHECK_THROWS_AS(io::fixture_from_json(R"({"c": 1, "iet": {"lengths": [1], "perm": [0]}, "charts": [{"kind": "strebel"}, {"kind": "general", "family": "nope"}]})"),
                  InvalidInput);
}

TEST_CASE("CSV and certificate output") {
  const auto rows = asymptotics::torus_asymptotics({1, 100});
  const std::string torus = io::torus_csv(rows);
  CHECK(first_line(torus) == "s,d");
  CHECK(torus.find("\n1,") != std::string::npos);
  CHECK(std::count(torus.begin(), torus.end(), '\n') == 3);

  plumbing::Theorem2Certificate cert{1.0, 0.25, 0.0, {{2.0, 1.01, 1.0, 0.005}}};
  const std::string csv = io::plumbing_certificate_csv(cert);
  CHECK(csv == "im_z,collar_K,stretch_K,total_bound\n2,1.01,1,0.005\n");

  auto interp = qc::interpolate_end_map(qc::UnivalentEndMap::mobius(0.5), 0.1, 11);
  const std::string belt = io::beltrami_csv(interp.field);
  CHECK(first_line(belt).rfind("# spacing=", 0) == 0);
  CHECK(belt.find("\nre,im,value\n") != std::string::npos);
  CHECK(first_line(io::grid_csv(interp.map)) == first_line(belt));

  asymptotics::Theorem1Certificate t1{};
  t1.bound = 0.5;
  t1.H = std::numeric_limits<double>::infinity();
  const std::string json = io::certificate_to_json(t1);
  for (const char* key : {"\"L0\"", "\"r\"", "\"e\"", "\"N\"", "\"H\":\"inf\"", "\"K_total\"", "\"bound\":0.5"}) {
    CHECK(json.find(key) != std::string::npos);
  }
}
