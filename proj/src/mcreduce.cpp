#include "orbitvol/mcreduce.hpp"

#include "orbitvol/errors.hpp"
#include "orbitvol/reducedvol.hpp"

namespace orbitvol {

PointCount su2_point_count(const TriangleInstance& t) {
  if (t.c1 <= 0 || t.c2 <= 0 || t.c3 <= 0) {
    throw ValidationError("su2_point_count: side lengths must be positive");
  }
  const Rat sides[3] = {t.c1, t.c2, t.c3};
  PointCount out;
  out.count = 1;
  for (int i = 0; i < 3; ++i) {
    const Rat rest = sides[(i + 1) % 3] + sides[(i + 2) % 3];
    if (sides[i] > rest) out.count = 0;
    if (sides[i] == rest) out.boundary = true;
  }
  return out;
}

Su2CheckReport su2_check_against_formula(const TriangleInstance& t) {
  Su2CheckReport rep;
  rep.points = su2_point_count(t);

  const RootSystem a1 = build_root_system(Series::A, 1);
  const VolumeResult raw =
      signed_sum_volume(make_orbit_tuple(a1, {Weight{t.c1}, Weight{t.c2}, Weight{t.c3}}));
  rep.raw = raw.value;
  const CalibrationResult cal = calibration(a1, 3);
  if (cal.constant) rep.calibrated = *cal.constant * raw.value;
  rep.consistent =
      !rep.points.boundary && rep.calibrated && *rep.calibrated == rep.points.count;
  return rep;
}

}  // namespace orbitvol
