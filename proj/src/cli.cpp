#include "socle/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "socle/error.hpp"
#include "socle/families.hpp"
#include "socle/gb_cache.hpp"
#include "socle/invariants.hpp"
#include "socle/parallel.hpp"
#include "socle/report.hpp"
#include "socle/script.hpp"

namespace socle {

namespace {

struct Options {
  unsigned characteristic = 101;
  bool json = false;
  bool no_cache = false;
  std::string cache_dir;
  bool serial = false;
  std::uint64_t seed = 7;
  int kmax = 4;
  unsigned nmax = 0;
  int samples = 10;
  int m = 2;
  int d = 1;
  int trials = 4;
  bool timings = false;
  std::string ring, ideal, by, poly, images, vars, minpoly, family;
  std::vector<std::string> scripts;
};

Field field_of(unsigned characteristic) {
  return characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
}

RingPtr ring_of(const Options& o) {
  if (o.ring.empty()) throw PreconditionError("--ring is required");
  std::string spec = o.ring;
  if (spec.front() == '[') spec = field_of(o.characteristic).descriptor() + spec;
  return parse_ring_spec(spec);
}

IdealHandle ideal_of(const RingPtr& ring, const std::string& text, const char* flag) {
  if (text.empty()) throw PreconditionError(std::string(flag) + " is required");
  return IdealHandle(ring, parse_polynomial_list(text, ring->ambient()));
}

// Reduced basis without the elements that already vanish in the ring.
std::string ideal_text(const IdealHandle& ideal) {
  const GroebnerBasis& def = *ideal.ring()->defining_basis();
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.basis().elements()) {
    if (!def.contains(g)) kept.push_back(g);
  }
  return format_polynomial_list(kept);
}

using Json = nlohmann::ordered_json;

void emit(const Options& o, std::ostream& out, const std::string& command, const RingPtr& ring, const Json& value) {
  if (o.json) {
    Json j;
    j["command"] = command;
    j["ring"] = ring ? ring->id() : std::string();
    j["result"] = value;
    out << j.dump(2) << '\n';
  } else if (value.is_string()) {
    out << value.get<std::string>() << '\n';
  } else if (value.is_null()) {
    out << "none\n";
  } else {
    out << value.dump() << '\n';
  }
}

Json optional_json(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

void configure_cache(const Options& o) {
  GbCache& cache = GbCache::global();
  if (o.no_cache) {
    cache.set_disk_directory(std::nullopt);
  } else if (!o.cache_dir.empty()) {
    cache.set_disk_directory(std::filesystem::path(o.cache_dir));
  } else {
    cache.set_disk_directory(default_cache_directory());
  }
}

int verify_family(const Options& o, std::ostream& out) {
  auto tag = parse_family_name(o.family);
  if (!tag) throw PreconditionError("unknown family '" + o.family + "'");
  const Field field = field_of(o.characteristic);
  VerifyConfig config;
  config.samples = o.samples;
  config.seed = o.seed;
  config.kmax = o.kmax;
  config.nmax = o.nmax;
  config.depth_trials = o.trials;
  VerificationReport report;
  switch (*tag) {
    case FamilyTag::NonCM: report = verify(noncm_ring(o.m, o.d, field), config); break;
    case FamilyTag::FiberProduct: report = verify(fiber_product_ring(o.d, field), config); break;
    case FamilyTag::FieldExtension: report = verify(field_extension_ring(o.d, o.minpoly, field), config); break;
    case FamilyTag::RegularParam: report = verify_all(regular_param_scenarios(field), config); break;
    case FamilyTag::SemigroupCurve: report = verify(semigroup_curve(field), config); break;
  }
  out << (o.json ? report_to_json(report, o.timings) : report_to_text(report));
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_scripts(const Options& o, std::ostream& out) {
  if (o.scripts.empty()) throw PreconditionError("run needs at least one script file");
  int failed = 0;
  for (const auto& path : o.scripts) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read script '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Script script;
    try {
      script = parse_script(buffer.str());
    } catch (const ParseError& e) {
      throw ParseError(path, e);
    }
    failed += run_script(script, out).checks_failed;
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  if (command == "verify-family") return verify_family(o, out);
  if (command == "run") return run_scripts(o, out);

  RingPtr ring = ring_of(o);
  if (command == "depth") {
    DepthProbe probe = depth_probe(ring, o.trials, o.seed);
    if (o.json || probe.depth) {
      emit(o, out, command, ring, optional_json(probe.depth));
    } else {
      out << "unknown (dimension " << probe.dimension << ", regular sequence of length " << probe.lower_bound
          << ")\n";
    }
    return kExitOk;
  }
  if (command == "present") {
    if (o.vars.empty()) throw PreconditionError("--vars is required");
    std::vector<std::string> names;
    std::stringstream ss(o.vars);
    for (std::string v; std::getline(ss, v, ',');) {
      v.erase(0, v.find_first_not_of(' '));
      v.erase(v.find_last_not_of(' ') + 1);
      names.push_back(v);
    }
    auto images = parse_polynomial_list(o.images, ring->ambient());
    IdealHandle kernel = subalgebra_presentation(ring, images, names);
    emit(o, out, command, kernel.ring(), ideal_text(kernel));
    return kExitOk;
  }

  IdealHandle ideal = ideal_of(ring, o.ideal, "--ideal");
  MultiplicityOptions mo;
  mo.nmax = o.nmax;
  if (command == "gb") {
    Json elems = Json::array();
    for (const auto& g : ideal.basis().elements()) elems.push_back(g.to_string());
    if (o.json) {
      emit(o, out, command, ring, elems);
    } else {
      out << ideal.basis().serialize();
    }
  } else if (command == "nf") {
    if (o.poly.empty()) throw PreconditionError("--poly is required");
    Polynomial f = parse_polynomial(o.poly, ring->ambient());
    emit(o, out, command, ring, ideal.basis().reduce(f).to_string());
  } else if (command == "colon" || command == "intersect") {
    IdealHandle by = ideal_of(ring, o.by, "--by");
    IdealHandle r = command == "colon" ? colon(ideal, by) : intersect(ideal, by);
    emit(o, out, command, ring, ideal_text(r));
  } else if (command == "length") {
    emit(o, out, command, ring, length(ideal));
  } else if (command == "socle") {
    SocleResult s = socle(ideal);
    if (o.json) {
      emit(o, out, command, ring, Json{{"length", s.length}, {"ideal", ideal_text(s.socle_ideal)}});
    } else {
      out << s.length << '\n' << ideal_text(s.socle_ideal) << '\n';
    }
  } else if (command == "mu") {
    emit(o, out, command, ring, min_generators(ideal));
  } else if (command == "mult") {
    emit(o, out, command, ring, multiplicity(ideal, mo));
  } else if (command == "defect") {
    emit(o, out, command, ring, buchsbaum_defect(ideal, mo));
  } else if (command == "stability") {
    IdealHandle link = o.by.empty() ? colon(ideal, IdealHandle::maximal(ring)) : ideal_of(ring, o.by, "--by");
    emit(o, out, command, ring, optional_json(stability_index(link, ideal, o.kmax)));
  } else {
    throw PreconditionError("unknown command '" + command + "'");
  }
  return kExitOk;
}

}  // namespace

std::optional<std::filesystem::path> default_cache_directory() {
  if (const char* env = std::getenv("SOCLE_LAB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "socle-lab";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "socle-lab";
  }
  return std::nullopt;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Computations in quotients of polynomial rings and verification of ring families", "socle-lab");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--char", o.characteristic, "field characteristic, 0 for Q")->check([](const std::string& s) {
    try {
      unsigned long p = std::stoul(s);
      return p == 0 || (p < (1ul << 31) && is_prime(p)) ? std::string() : "not a prime: " + s;
    } catch (const std::exception&) {
      return "not a number: " + s;
    }
  });
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--no-cache", o.no_cache, "do not read or write the on-disk basis cache");
  app.add_option("--cache-dir", o.cache_dir, "on-disk basis cache directory");
  app.add_flag("--serial", o.serial, "run every loop on one thread");
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--kmax", o.kmax, "largest n tried in I^(n+1) = Q I^n")->check(CLI::PositiveNumber);
  app.add_option("--nmax", o.nmax, "largest power used for multiplicities (0: dimension + 6)");

  auto ring_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", o.ring, "ring, e.g. \"Q[x,y]\" or \"F101[x,y,z]/(x*y)\"")->required();
    return sub;
  };
  auto ideal_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = ring_cmd(name, help);
    sub->add_option("--ideal", o.ideal, "generators, e.g. \"(x^2, x*y)\"")->required();
    return sub;
  };
  ideal_cmd("gb", "reduced Groebner basis");
  ideal_cmd("nf", "normal form of --poly")->add_option("--poly", o.poly, "polynomial")->required();
  ideal_cmd("colon", "I : J")->add_option("--by", o.by, "the ideal J")->required();
  ideal_cmd("intersect", "I intersected with J")->add_option("--by", o.by, "the ideal J")->required();
  ideal_cmd("length", "length of A/I");
  ideal_cmd("socle", "length of (I : m)/I and the ideal I : m");
  ideal_cmd("mu", "minimal number of generators");
  ideal_cmd("mult", "multiplicity of A with respect to I");
  ideal_cmd("defect", "length minus multiplicity");
  ideal_cmd("stability", "least n with J^(n+1) = Q J^n, J = Q : m unless --by is given")
      ->add_option("--by", o.by, "the ideal J");
  ring_cmd("depth", "probe the depth with random regular sequences")
      ->add_option("--trials", o.trials, "random attempts")
      ->check(CLI::PositiveNumber);
  auto* present = ring_cmd("present", "kernel of k[vars] -> ring given by --images");
  present->add_option("--images", o.images, "images of the new variables")->required();
  present->add_option("--vars", o.vars, "comma-separated names of the new variables")->required();

  auto* vf = app.add_subcommand("verify-family", "check every expected value of a ring family");
  vf->add_option("family", o.family, "noncm, fiber, field-extension, regular or semigroup")->required();
  vf->add_option("--m", o.m, "noncm: number of x variables");
  vf->add_option("--d", o.d, "dimension parameter");
  vf->add_option("--samples", o.samples, "sampled parameter ideals")->check(CLI::NonNegativeNumber);
  vf->add_option("--minpoly", o.minpoly, "field-extension: quadratic in u");
  vf->add_option("--trials", o.trials, "depth probe attempts")->check(CLI::PositiveNumber);
  vf->add_flag("--timings", o.timings, "include wall times in JSON");

  auto* run = app.add_subcommand("run", "execute script files");
  run->add_option("scripts", o.scripts, "script files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const exec::Policy previous = exec::default_policy();
  if (o.serial) exec::set_default_policy(exec::Policy::Serial);
  int status;
  try {
    configure_cache(o);
    status = dispatch(command, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    status = kExitUsage;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << '\n';
    status = kExitComputation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    status = kExitUsage;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    status = kExitComputation;
  }
  exec::set_default_policy(previous);
  return status;
}

}  // namespace socle
