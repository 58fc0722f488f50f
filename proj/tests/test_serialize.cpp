#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "csq/frames.hpp"
#include "csq/serialize.hpp"

using namespace csq;

TEST_CASE("round_significant keeps 12 digits and rejects non-finite values") {
  CHECK(round_significant(1.0 / 3.0) == 0.333333333333);
  CHECK(round_significant(-1.0 / 3.0) == -0.333333333333);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(-0.0) == 0.0);
  CHECK(std::signbit(round_significant(-0.0)) == false);
  CHECK(round_significant(123456789012345.0) == 123456789012000.0);
  CHECK(round_significant(1e-300) == 1e-300);
  CHECK_THROWS_AS(round_significant(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(round_significant(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("format_real emits 12 significant digits") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1e-12) == "1e-12");
  CHECK_THROWS_AS(format_real(std::nan("")), std::domain_error);
}

TEST_CASE("json helpers: complex as [re, im], matrices row-major") {
  const nlohmann::json z = json_complex(cdouble(1.5, -2.5));
  CHECK(z.is_array());
  CHECK(z[0].get<double>() == 1.5);
  CHECK(z[1].get<double>() == -2.5);

  CMatrix m(2, 2);
  m(0, 1) = cdouble(0.0, 1.0);
  const nlohmann::json jm = json_matrix(m);
  CHECK(jm.size() == 2);
  CHECK(jm[0][1][1].get<double>() == 1.0);

  CHECK_THROWS_AS(json_real(std::nan("")), std::domain_error);
}

TEST_CASE("csv curve: exact bytes, LF endings, length check") {
  std::ostringstream out;
  write_csv_curve(out, {0.0, 0.5, 1.0}, {0.5, 1.0 / 3.0, 0.25});
  CHECK(out.str() == "x0,lower_symbol\n0,0.5\n0.5,0.333333333333\n1,0.25\n");

  std::ostringstream toss;
  CHECK_THROWS_AS(write_csv_curve(toss, {0.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(write_csv_curve(toss, {0.0}, {std::nan("")}), std::domain_error);
}

TEST_CASE("measure spaces survive a JSON round trip bit-exactly") {
  for (const MeasureSpace& space :
       {finite_space({"a", "b"}, {0.5, 1.5}, {0.0, 1.0}), interval_space(2, 4),
        plane_space(4.0, 24, 16)}) {
    const nlohmann::json j = nlohmann::json::parse(to_json(space).dump());
    const MeasureSpace back = space_from_json(j);
    CHECK(back.kind() == space.kind());
    CHECK(back.size() == space.size());
    CHECK(back.exact() == space.exact());
    CHECK(back.tail_bound() == space.tail_bound());
    CHECK(back.weights() == space.weights());
    for (int i = 0; i < space.size(); ++i)
      CHECK(point_to_string(back.points()[i]) == point_to_string(space.points()[i]));
  }
}

TEST_CASE("frames survive a JSON round trip and re-validate their Gram") {
  const Frame frame = trig_frame(interval_space(1, 12));
  const nlohmann::json j = nlohmann::json::parse(to_json(frame).dump());
  const Frame back = frame_from_json(j);
  CHECK(back.family() == FrameFamily::Custom);
  CHECK(back.n_basis() == frame.n_basis());
  CHECK(back.labels() == frame.labels());
  CHECK(back.values() == frame.values());
  CHECK(back.gram_defect() <= 1e-12);
}

TEST_CASE("malformed frame JSON is rejected") {
  const Frame frame = trig_frame(interval_space(1, 12));
  nlohmann::json j = to_json(frame);
  j["values"][3][0] = 100.0;  // corrupt one tabulated value
  CHECK_THROWS_AS(frame_from_json(j), std::runtime_error);  // Gram defect

  nlohmann::json missing = to_json(frame);
  missing.erase("labels");
  CHECK_THROWS_AS(frame_from_json(missing), nlohmann::json::exception);
}
