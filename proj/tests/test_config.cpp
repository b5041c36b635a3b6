#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hrw/config.hpp"

using hrw::ConfigMap;
using hrw::ConfigView;
using Catch::Matchers::WithinRel;

TEST_CASE("config text parses and round trips losslessly", "[config]") {
  const std::string text =
      "seed = 42\n"
      "# comment line\n"
      "rng = mt19937_64\n"
      "\n"
      "[radius]\n"
      "family = weibull\n"
      "beta = 0.4\n"
      "[direction]\n"
      "d = 2\n";
  const ConfigMap map = hrw::parse_config_text(text);
  CHECK(map.at("seed") == "42");
  CHECK(map.at("radius.family") == "weibull");
  CHECK(map.at("direction.d") == "2");

  const ConfigMap again = hrw::parse_config_text(hrw::serialize_config(map));
  CHECK(again == map);
}

TEST_CASE("config rejects malformed input", "[config]") {
  CHECK_THROWS_AS(hrw::parse_config_text("key value\n"), std::invalid_argument);
  CHECK_THROWS_AS(hrw::parse_config_text("[unterminated\nk = v\n"), std::invalid_argument);
  CHECK_THROWS_AS(hrw::parse_config_text("a = 1\na = 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(hrw::parse_config_text("[]\nk = v\n"), std::invalid_argument);
}

TEST_CASE("unknown keys are rejected after consumption", "[config]") {
  ConfigView view(hrw::parse_config_text("seed = 7\nbogus = 1\n"));
  CHECK(view.take_u64("seed") == 7);
  CHECK_THROWS_AS(view.finish(), std::invalid_argument);

  ConfigView clean(hrw::parse_config_text("seed = 7\n"));
  clean.take_u64("seed");
  CHECK_NOTHROW(clean.finish());
}

TEST_CASE("structured text forms parse and serialize", "[config]") {
  const hrw::Vec v = hrw::parse_vector("1,0.5,-2");
  CHECK(v == hrw::Vec{1.0, 0.5, -2.0});
  CHECK(hrw::parse_vector(hrw::vector_to_text(v)) == v);

  const hrw::Matrix m = hrw::parse_matrix_text("1,0;0,2");
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == 2.0);
  CHECK(hrw::matrix_to_text(m) == "1,0;0,2");
  CHECK_THROWS_AS(hrw::parse_matrix_text("1,0;0"), std::invalid_argument);

  const auto caps = hrw::parse_caps("1,0:0.5:2;-1,0:0.5:2");
  REQUIRE(caps.size() == 2);
  CHECK(caps[0].center == hrw::Vec{1.0, 0.0});
  CHECK(caps[1].weight == 2.0);
  CHECK(hrw::parse_caps(hrw::caps_to_text(caps)).size() == 2);

  const auto knots = hrw::parse_knots("1:0.5,10:2");
  REQUIRE(knots.size() == 2);
  CHECK(knots[1].x == 10.0);
  CHECK(hrw::knots_to_text(knots) == "1:0.5,10:2");
}

TEST_CASE("event-set text forms", "[config]") {
  const hrw::EventSet ball = hrw::parse_event_set("ball:4", std::nullopt);
  CHECK(ball.kind() == hrw::EventSet::Kind::BallComplement);
  CHECK(ball.threshold() == 4.0);

  const hrw::EventSet half = hrw::parse_event_set("half:0,1:2.5", std::nullopt);
  CHECK(half.kind() == hrw::EventSet::Kind::HalfSpace);

  const hrw::EventSet cone = hrw::parse_event_set("cone:1:1,0:0.5:-1,0:0.5", std::nullopt);
  CHECK(cone.kind() == hrw::EventSet::Kind::Cone);
  CHECK(cone.caps().size() == 2);

  const hrw::EllipsoidMap map = hrw::EllipsoidMap::axis_aligned({1.0, 2.0});
  const hrw::EventSet mapped = hrw::parse_event_set("mapped:ball:1", map);
  CHECK(mapped.kind() == hrw::EventSet::Kind::Mapped);

  CHECK_THROWS_AS(hrw::parse_event_set("mapped:ball:1", std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(hrw::parse_event_set("simplex:1", std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(hrw::parse_event_set("cone:1:1,0", std::nullopt), std::invalid_argument);
}

TEST_CASE("increment specs round trip through config sections", "[config]") {
  const std::string text =
      "[radius]\n"
      "family = stretched_exp\n"
      "l = 2.5\n"
      "beta = 0.7\n"
      "[direction]\n"
      "d = 2\n"
      "kind = cap_mixture\n"
      "w0 = 0.5\n"
      "caps = 0,1:0.6:2;0,-1:0.6:2\n"
      "[map]\n"
      "matrix = 1,0;0,2\n";
  ConfigView view(hrw::parse_config_text(text));
  const hrw::IncrementSpec spec = hrw::increment_spec_from_config(view);
  CHECK_NOTHROW(view.finish());

  CHECK(spec.radius.exponent().family() == hrw::TailFamily::StretchedExp);
  CHECK(spec.radius.exponent().param_l() == 2.5);
  CHECK(spec.direction.dim() == 2);
  CHECK_FALSE(spec.direction.is_uniform());
  REQUIRE(spec.map.has_value());
  CHECK(spec.map->matrix()(1, 1) == 2.0);

  // Serialize and rebuild: all parameters preserved.
  ConfigView view2(hrw::serialize_increment_spec(spec));
  const hrw::IncrementSpec spec2 = hrw::increment_spec_from_config(view2);
  CHECK_NOTHROW(view2.finish());
  CHECK(spec2.radius.exponent().param_l() == 2.5);
  CHECK(spec2.radius.exponent().param_beta() == 0.7);
  CHECK(spec2.direction.caps().size() == 2);
  CHECK(spec2.direction.base_weight() == 0.5);
  CHECK(spec2.map->matrix()(0, 0) == 1.0);

  // Piecewise family keeps its knots and declared index.
  ConfigView view3(hrw::parse_config_text(
      "[radius]\nfamily = piecewise_concave\nknots = 1:0.5,10:2\nalpha = 0.4\n[direction]\nd = "
      "3\n"));
  const hrw::IncrementSpec spec3 = hrw::increment_spec_from_config(view3);
  CHECK_NOTHROW(view3.finish());
  CHECK(spec3.radius.exponent().knots().size() == 2);
  CHECK(spec3.radius.exponent().rv_index() == 0.4);
  const hrw::ConfigMap round = hrw::serialize_increment_spec(spec3);
  CHECK(round.at("radius.knots") == "1:0.5,10:2");
  CHECK(round.at("radius.alpha") == "0.4");
}

TEST_CASE("estimate CSV rows parse back into the record", "[config]") {
  hrw::EstimateRecord r;
  r.family = "weibull";
  r.beta_or_p = 0.4;
  r.d = 2;
  r.n = 30;
  r.a = 1.0;
  r.trials = 1000000;
  r.hits = 544902;
  r.p_hat = 0.544902;
  r.ratio = -0.15575670326817512;
  r.ci_ratio_low = -0.15590206158897227;
  r.ci_ratio_high = -0.15561144349532843;
  r.theory = -1.0;

  const hrw::EstimateRecord back = hrw::parse_estimate_csv_row(hrw::estimate_csv_row(r));
  CHECK(back.family == r.family);
  CHECK(back.beta_or_p == r.beta_or_p);
  CHECK(back.d == r.d);
  CHECK(back.trials == r.trials);
  CHECK(back.hits == r.hits);
  CHECK(back.p_hat == r.p_hat);
  CHECK(back.ratio == r.ratio);
  CHECK(back.ci_ratio_low == r.ci_ratio_low);
  CHECK(back.theory == r.theory);

  // Zero-hit rows carry nan ratios; they survive the round trip as nan.
  r.hits = 0;
  r.ratio = std::numeric_limits<double>::quiet_NaN();
  r.ci_ratio_low = std::numeric_limits<double>::quiet_NaN();
  const hrw::EstimateRecord degenerate = hrw::parse_estimate_csv_row(hrw::estimate_csv_row(r));
  CHECK(std::isnan(degenerate.ratio));
  CHECK(std::isnan(degenerate.ci_ratio_low));

  CHECK_THROWS_AS(hrw::parse_estimate_csv_row("weibull,0.4,2"), std::invalid_argument);
}

TEST_CASE("doubles format to the shortest round-trippable text", "[config]") {
  for (const double v : {0.5, 1.0 / 3.0, 2.0 / 3.0, 1e-12, 123456.789, -0.1}) {
    double back = 0.0;
    const std::string s = hrw::format_double(v);
    CHECK(std::sscanf(s.c_str(), "%lf", &back) == 1);
    CHECK(back == v);
  }
  CHECK(hrw::format_double(0.5) == "0.5");
  CHECK(hrw::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}
