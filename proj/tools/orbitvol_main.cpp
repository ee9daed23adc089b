// Command-line front end: exact reduced-product volumes, DH evaluations,
// parameter sweeps and the self-test suite. Rationals are printed as "p/q";
// decimals are a convenience field only.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitvol/dhfun.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/reducedvol.hpp"
#include "orbitvol/selftest.hpp"
#include "orbitvol/su3.hpp"

using json = nlohmann::json;
using namespace orbitvol;

namespace {

struct WeightSpec {
  std::string basis;  // simple-root | fundamental | su3-lm
  std::vector<RatVec> raw;
};

std::vector<RatVec> split_weight_vectors(const std::string& arg) {
  std::vector<RatVec> out;
  std::string item;
  std::istringstream is(arg);
  while (std::getline(is, item, ';')) out.push_back(parse_rat_vector(item));
  if (out.empty()) throw ValidationError("no weight vectors given");
  return out;
}

Weight to_simple(const RootSystem& rs, const std::string& basis, const RatVec& v) {
  if (basis == "simple-root") {
    if (static_cast<int>(v.size()) != rs.rank) {
      throw ValidationError("weight has " + std::to_string(v.size()) +
                            " entries, expected rank " + std::to_string(rs.rank));
    }
    return v;
  }
  if (basis == "fundamental") return fundamental_to_simple(rs, v);
  if (basis == "su3-lm") {
    if (rs.name() != "A2") throw ValidationError("basis su3-lm requires group A2");
    if (v.size() != 2) throw ValidationError("su3-lm weights have two entries (l, m)");
    return su3_lm_to_simple(v[0], v[1]);
  }
  throw ValidationError("unknown basis '" + basis + "'");
}

SU3Weights to_su3_weights(const RootSystem& rs, const std::vector<Weight>& simple) {
  if (rs.name() != "A2" || simple.size() != 3) {
    throw ValidationError("su3 closed forms require group A2 and N = 3");
  }
  SU3Weights w;
  for (int i = 0; i < 3; ++i) {
    const auto [l, m] = su3_simple_to_lm(simple[i]);
    w.l[i] = l;
    w.m[i] = m;
  }
  return w;
}

void emit_error(const std::string& format, const std::string& kind, const std::string& msg) {
  if (format == "json") {
    json err = {{"error", {{"type", kind}, {"message", msg}}}};
    std::cout << err.dump() << "\n";
  }
  std::cerr << "error (" << kind << "): " << msg << "\n";
}

struct VolumeRun {
  std::string group;
  int n_orbits = 0;
  std::string weights_arg;
  std::string basis;
  std::string method = "factored";
  bool calibrated = false;
  std::string format = "text";
  long long cap_terms = kDefaultTermCap;
};

VolumeResult run_method(const RootSystem& rs, const std::vector<Weight>& xis,
                        const std::string& method, long long cap) {
  if (method == "naive") return signed_sum_volume(make_orbit_tuple(rs, xis), cap);
  if (method == "factored") return factored_signed_sum_volume(make_orbit_tuple(rs, xis), cap);
  if (method == "su3-jj") {
    const Su3Volume v = jj_volume(to_su3_weights(rs, xis));
    return VolumeResult{v.value, "su3-jj", v.terms, 1, v.warnings};
  }
  if (method == "su3-st") {
    const StVolume v = st_volume(to_su3_weights(rs, xis));
    VolumeResult out{v.value, "su3-st", 216, 1, {}};
    if (v.boundary_hit) {
      out.warnings.push_back("some 6-partition comparison held with equality (wall point)");
    }
    return out;
  }
  throw ValidationError("unknown method '" + method + "'");
}

json result_to_json(const VolumeRun& run, const VolumeResult& res,
                    const std::optional<Rat>& cal_constant) {
  json j;
  j["value"] = rat_to_string(res.value);
  j["decimal"] = std::stod(rat_to_decimal_string(res.value));  // 12 significant digits
  j["method"] = res.method;
  j["group"] = run.group;
  j["n"] = run.n_orbits;
  j["a"] = res.degree;
  j["terms"] = res.terms_evaluated;
  j["warnings"] = res.warnings;
  j["calibration"] = cal_constant ? json(rat_to_string(*cal_constant)) : json(nullptr);
  return j;
}

int cmd_volume(const VolumeRun& run_in) {
  VolumeRun run = run_in;
  const RootSystem rs = build_root_system(run.group);
  run.group = rs.name();
  const std::vector<RatVec> raw = split_weight_vectors(run.weights_arg);
  if (static_cast<int>(raw.size()) != run.n_orbits) {
    throw ValidationError("expected " + std::to_string(run.n_orbits) + " weight vectors, got " +
                          std::to_string(raw.size()));
  }
  if (run.basis == "su3-lm" && (rs.name() != "A2" || run.n_orbits != 3)) {
    throw ValidationError("basis su3-lm is only valid for group A2 with N = 3");
  }
  std::vector<Weight> xis;
  for (const RatVec& v : raw) xis.push_back(to_simple(rs, run.basis, v));

  VolumeResult res = run_method(rs, xis, run.method, run.cap_terms);
  // su3 methods evaluate in (l,m) coordinates; the degree is that of the
  // engine formula.
  res.degree = (run.n_orbits - 2) * rs.num_positive_roots() - rs.rank;

  std::optional<Rat> cal_constant;
  if (run.calibrated) {
    if (run.method == "su3-st") {
      // The 6-partition values are already on the calibrated normalization.
      res.warnings.push_back("su3-st values are already calibrated; constant not applied");
    } else {
      const CalibrationResult cal = calibration(rs, run.n_orbits);
      if (cal.constant) {
        cal_constant = cal.constant;
      } else {
        res.warnings.push_back("calibration unknown: " + cal.provenance);
      }
    }
  }

  if (run.format == "json") {
    std::cout << result_to_json(run, res, cal_constant).dump() << "\n";
  } else if (run.format == "csv") {
    std::cout << "value,decimal,method,group,n,a,terms,calibration,warnings\n";
    std::cout << rat_to_string(res.value) << ',' << rat_to_decimal_string(res.value) << ','
              << res.method << ',' << run.group << ',' << run.n_orbits << ',' << res.degree
              << ',' << res.terms_evaluated << ','
              << (cal_constant ? rat_to_string(*cal_constant) : "") << ",\"";
    for (std::size_t i = 0; i < res.warnings.size(); ++i) {
      if (i) std::cout << "; ";
      std::cout << res.warnings[i];
    }
    std::cout << "\"\n";
  } else {
    std::cout << "group          " << run.group << "  (N = " << run.n_orbits << ")\n";
    std::cout << "method         " << res.method << "\n";
    std::cout << "value          " << rat_to_string(res.value) << "  ("
              << rat_to_decimal_string(res.value) << ")\n";
    if (cal_constant) {
      std::cout << "calibration    " << rat_to_string(*cal_constant) << "\n";
      std::cout << "calibrated     " << rat_to_string(*cal_constant * res.value) << "  ("
                << rat_to_decimal_string(*cal_constant * res.value) << ")\n";
    }
    std::cout << "degree a       " << res.degree << "\n";
    std::cout << "terms          " << res.terms_evaluated << "\n";
    for (const std::string& w : res.warnings) std::cout << "warning        " << w << "\n";
    const AssumptionReport rep = check_assumptions(make_orbit_tuple(rs, xis));
    std::cout << "assumptions    regular:";
    for (bool b : rep.regular) std::cout << ' ' << (b ? "yes" : "no");
    std::cout << "; zero-level-set feasible (necessary): "
              << (rep.zero_in_hull_sum ? "yes" : "no");
    if (rep.wall_scan_complete) {
      std::cout << "; moment images on cone walls: " << rep.wall_moment_images;
    }
    std::cout << "\n";
    for (const std::string& n : rep.notes) std::cout << "note           " << n << "\n";
  }
  return 0;
}

struct SweepAxis {
  int weight = 0;  // 1-based
  int coord = 0;   // 1-based
  Rat from, to, step;
};

SweepAxis parse_axis(const std::string& s, int n_orbits, int entries_per_weight) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ':')) parts.push_back(item);
  if (parts.size() != 5) {
    throw ValidationError("sweep axis must be weight:coord:from:to:step, got '" + s + "'");
  }
  SweepAxis ax;
  try {
    ax.weight = std::stoi(parts[0]);
    ax.coord = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw ValidationError("sweep axis indices must be integers in '" + s + "'");
  }
  ax.from = parse_rat(parts[2]);
  ax.to = parse_rat(parts[3]);
  ax.step = parse_rat(parts[4]);
  if (ax.step <= 0) throw ValidationError("sweep step must be positive");
  if (ax.weight < 1 || ax.weight > n_orbits) throw ValidationError("sweep weight index out of range");
  if (ax.coord < 1 || ax.coord > entries_per_weight) {
    throw ValidationError("sweep coordinate index out of range");
  }
  return ax;
}

std::vector<Rat> axis_values(const SweepAxis& ax) {
  std::vector<Rat> vals;
  for (Rat v = ax.from; v <= ax.to; v += ax.step) vals.push_back(v);
  return vals;
}

int cmd_sweep(const VolumeRun& run, const std::vector<std::string>& axis_specs) {
  const RootSystem rs = build_root_system(run.group);
  const std::vector<RatVec> raw = split_weight_vectors(run.weights_arg);
  if (static_cast<int>(raw.size()) != run.n_orbits) {
    throw ValidationError("expected " + std::to_string(run.n_orbits) + " weight vectors, got " +
                          std::to_string(raw.size()));
  }
  if (axis_specs.empty() || axis_specs.size() > 2) {
    throw ValidationError("sweep needs one or two --vary axes");
  }
  std::vector<SweepAxis> axes;
  for (const std::string& s : axis_specs) {
    axes.push_back(parse_axis(s, run.n_orbits, static_cast<int>(raw[0].size())));
  }

  std::cout << "# group=" << rs.name() << " n=" << run.n_orbits << " basis=" << run.basis
            << " method=" << run.method << "\n";
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::cout << (i ? "," : "") << 'w' << axes[i].weight << 'c' << axes[i].coord;
  }
  std::cout << ",value,decimal,warnings\n";

  const std::vector<Rat> outer = axis_values(axes[0]);
  const std::vector<Rat> inner = axes.size() > 1 ? axis_values(axes[1]) : std::vector<Rat>{};
  auto emit_row = [&](const std::vector<Rat>& coords, const std::vector<RatVec>& grid_raw) {
    std::vector<Weight> xis;
    for (const RatVec& v : grid_raw) xis.push_back(to_simple(rs, run.basis, v));
    const VolumeResult res = run_method(rs, xis, run.method, run.cap_terms);
    for (const Rat& c : coords) std::cout << rat_to_string(c) << ',';
    std::cout << rat_to_string(res.value) << ',' << rat_to_decimal_string(res.value) << ",\"";
    for (std::size_t i = 0; i < res.warnings.size(); ++i) {
      if (i) std::cout << "; ";
      std::cout << res.warnings[i];
    }
    std::cout << "\"\n";
  };
  for (const Rat& u : outer) {
    std::vector<RatVec> grid_raw = raw;
    grid_raw[axes[0].weight - 1][axes[0].coord - 1] = u;
    if (axes.size() == 1) {
      emit_row({u}, grid_raw);
    } else {
      for (const Rat& v : inner) {
        grid_raw[axes[1].weight - 1][axes[1].coord - 1] = v;
        emit_row({u, v}, grid_raw);
      }
    }
  }
  return 0;
}

int cmd_dh(const std::string& group, int multiplicity, const std::string& weight_arg,
           const std::string& basis, const std::string& format) {
  const RootSystem rs = build_root_system(group);
  const Weight xi = to_simple(rs, basis, parse_rat_vector(weight_arg));
  const DHProblem prob = make_dh_problem(rs, multiplicity);
  const DhValue h = dh_density(prob, xi);
  std::vector<std::string> warnings;
  if (h.wall) warnings.push_back("weight lies exactly on the boundary of the support cone");
  if (format == "json") {
    json j = {{"value", rat_to_string(h.value)},
              {"decimal", rat_to_double(h.value)},
              {"group", rs.name()},
              {"multiplicity", multiplicity},
              {"a", prob.degree()},
              {"warnings", warnings}};
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "value,decimal,warnings\n"
              << rat_to_string(h.value) << ',' << rat_to_decimal_string(h.value) << ",\""
              << (warnings.empty() ? "" : warnings[0]) << "\"\n";
    return 0;
  } else {
    std::cout << rat_to_string(h.value) << "\n";
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed, long long mc_samples, bool corrupt, const std::string& format) {
  SelfTestOptions opt;
  opt.seed = seed;
  opt.mc_samples = mc_samples;
  opt.corrupt_weyl_sign = corrupt;
  const std::vector<CheckResult> results = run_acceptance_suite(opt);
  if (format == "json") {
    json arr = json::array();
    for (const CheckResult& c : results) {
      arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const CheckResult& c : results) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.name;
      if (!c.detail.empty()) std::cout << "  -- " << c.detail;
      std::cout << "\n";
    }
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symplectic volumes of N-fold reduced products of coadjoint orbits"};
  app.require_subcommand(1);

  VolumeRun run;
  std::vector<std::string> axis_specs;

  CLI::App* vol = app.add_subcommand("volume", "signed-sum volume of an orbit tuple");
  vol->add_option("--group", run.group, "group, e.g. A2, B2")->required();
  vol->add_option("--n", run.n_orbits, "number of orbits (N >= 3)")->required();
  vol->add_option("--weights", run.weights_arg,
                  "semicolon-separated weight vectors, comma-separated rational entries")
      ->required();
  vol->add_option("--basis", run.basis, "simple-root | fundamental | su3-lm")->required();
  vol->add_option("--method", run.method, "naive | factored | su3-jj | su3-st");
  vol->add_flag("--calibrated", run.calibrated, "also report the calibrated value");
  vol->add_option("--format", run.format, "text | json | csv");
  vol->add_option("--cap-terms", run.cap_terms, "term-count guard");

  CLI::App* dh = app.add_subcommand("dh", "evaluate the DH density");
  std::string dh_group, dh_weight, dh_basis, dh_format = "text";
  int dh_mult = 1;
  dh->add_option("--group", dh_group)->required();
  dh->add_option("--multiplicity", dh_mult, "M >= 1");
  dh->add_option("--weight", dh_weight, "comma-separated rational entries")->required();
  // The basis must always be declared: values are basis-tied.
  dh->add_option("--basis", dh_basis, "simple-root | fundamental | su3-lm")->required();
  dh->add_option("--format", dh_format, "text | json | csv");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV stream over a weight-coordinate grid");
  sweep->add_option("--group", run.group)->required();
  sweep->add_option("--n", run.n_orbits)->required();
  sweep->add_option("--weights", run.weights_arg)->required();
  sweep->add_option("--basis", run.basis)->required();
  sweep->add_option("--method", run.method);
  sweep->add_option("--cap-terms", run.cap_terms);
  sweep->add_option("--vary", axis_specs, "weight:coord:from:to:step (repeat for a 2d grid)")
      ->required();

  CLI::App* st = app.add_subcommand("selftest", "run the full cross-oracle suite");
  std::uint64_t st_seed = SelfTestOptions{}.seed;
  long long st_samples = SelfTestOptions{}.mc_samples;
  bool st_corrupt = false;
  std::string st_format = "text";
  st->add_option("--seed", st_seed);
  st->add_option("--mc-samples", st_samples);
  st->add_option("--format", st_format, "text | json");
  st->add_flag("--corrupt-weyl-sign", st_corrupt)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string fmt = vol->parsed() ? run.format : (dh->parsed() ? dh_format : "text");
  try {
    if (vol->parsed()) return cmd_volume(run);
    if (dh->parsed()) return cmd_dh(dh_group, dh_mult, dh_weight, dh_basis, dh_format);
    if (sweep->parsed()) return cmd_sweep(run, axis_specs);
    if (st->parsed()) return cmd_selftest(st_seed, st_samples, st_corrupt, st_format);
  } catch (const Error& e) {
    emit_error(fmt, e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(fmt, "Internal", e.what());
    return 2;
  }
  return 2;
}
