#include "socle/families.hpp"

#include <chrono>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

#include "socle/error.hpp"
#include "socle/invariants.hpp"
#include "socle/parallel.hpp"
#include "socle/text.hpp"

namespace socle {

namespace {

constexpr const char* kLiterature = "literature";
constexpr const char* kDerived = "derived";
constexpr const char* kElementary = "elementary";

std::string indexed(const std::string& stem, int i) { return stem + std::to_string(i); }

std::vector<std::string> indexed_names(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(indexed(stem, i));
  return out;
}

IdealHandle ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(ring->parse(g));
  return IdealHandle(ring, std::move(polys));
}

void put(FamilyInstance& inst, const std::string& id, ReportValue value, const char* source, std::string claim,
         std::string note, bool flagged = false) {
  inst.expected[id] = ExpectedValue{std::move(claim), std::move(value), source, std::move(note), flagged};
}

std::string char_param(const Field& field) { return std::to_string(field.characteristic()); }

// --- quadratic minimal polynomials ------------------------------------------

struct Quadratic {
  Scalar b, c;  // u^2 + b*u + c
};

Scalar power_mod(const Field& f, Scalar base, std::uint64_t e) {
  Scalar r = f.one();
  while (e) {
    if (e & 1) r = f.mul(r, base);
    base = f.mul(base, base);
    e >>= 1;
  }
  return r;
}

bool irreducible(const Field& f, const Quadratic& q) {
  if (f.is_rational()) {
    mpq_class disc = q.b.rational() * q.b.rational() - 4 * q.c.rational();
    if (disc < 0) return true;
    mpz_class num = disc.get_num(), den = disc.get_den();
    return !(mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()));
  }
  const std::uint32_t p = f.characteristic();
  if (p == 2) {
    for (std::uint32_t r = 0; r < 2; ++r) {
      Scalar x = f.from_int(r);
      if (f.is_zero(f.add(f.add(f.mul(x, x), f.mul(q.b, x)), q.c))) return false;
    }
    return true;
  }
  Scalar disc = f.sub(f.mul(q.b, q.b), f.mul(f.from_int(4), q.c));
  if (f.is_zero(disc)) return false;
  return !f.is_one(power_mod(f, disc, (p - 1) / 2));
}

std::string quadratic_text(const Field& f, const Quadratic& q) {
  auto ring = PolyRing::make(f, {"u"}, MonomialOrder::degrevlex());
  Polynomial u = Polynomial::variable(ring, 0);
  return (u * u + Polynomial::constant(ring, q.b) * u + Polynomial::constant(ring, q.c)).to_string();
}

Quadratic default_quadratic(const Field& f) {
  if (f.characteristic() == 2) return {f.one(), f.one()};
  Quadratic q{f.zero(), f.one()};
  if (irreducible(f, q)) return q;
  for (long c = 2;; ++c) {
    q.c = f.from_int(-c);
    if (irreducible(f, q)) return q;
  }
}

Quadratic parse_quadratic(const Field& f, const std::string& text) {
  auto ring = PolyRing::make(f, {"u"}, MonomialOrder::degrevlex());
  Polynomial p = parse_polynomial(text, ring);
  if (p.is_zero() || p.total_degree() != 2) {
    throw PreconditionError("only quadratic extensions modeled: minimal polynomial '" + text + "' has degree " +
                            std::to_string(p.is_zero() ? 0 : p.total_degree()));
  }
  p = p.monic();
  Quadratic q{f.zero(), f.zero()};
  for (const auto& t : p.terms()) {
    if (t.monomial[0] == 1) q.b = t.coeff;
    if (t.monomial[0] == 0) q.c = t.coeff;
  }
  if (!irreducible(f, q)) {
    throw PreconditionError("minimal polynomial '" + text + "' is reducible over " + f.descriptor());
  }
  return q;
}

// --- verification plumbing ---------------------------------------------------

template <class T>
class Memo {
 public:
  template <class F>
  const T& get(F&& compute) {
    std::call_once(once_, [&] { value_.emplace(compute()); });
    return *value_;
  }

 private:
  std::once_flag once_;
  std::optional<T> value_;
};

struct Outcome {
  ReportValue computed;
  std::optional<ReportValue> expected;  // overrides the table value
  std::string detail;
};

struct Check {
  std::string id;
  std::string claim_id;
  std::function<Outcome()> run;
};

// A parameter ideal together with the values several rows share.
struct ParamSlot {
  std::string name;
  std::function<IdealHandle()> make;
  Memo<IdealHandle> q;
  Memo<IdealHandle> socle_ideal;
  Memo<MultiplicityResult> mult;
  Memo<long> colength;

  const IdealHandle& ideal() { return q.get(make); }
  const IdealHandle& link() {
    return socle_ideal.get([&] { return colon(ideal(), IdealHandle::maximal(ideal().ring())); });
  }
};

class Plan {
 public:
  Plan(const FamilyInstance& inst, const VerifyConfig& config) : inst_(inst), config_(config) {}

  const FamilyInstance& instance() const { return inst_; }
  const VerifyConfig& config() const { return config_; }

  MultiplicityOptions mult_options() const {
    MultiplicityOptions o;
    o.nmax = config_.nmax;
    return o;
  }

  ParamSlot& slot(std::string name, std::function<IdealHandle()> make) {
    auto& s = slots_.emplace_back();
    s.name = std::move(name);
    s.make = std::move(make);
    return s;
  }

  ParamSlot& fixed(const std::string& name, const std::string& ideal_name) {
    const IdealHandle q = inst_.ideal(ideal_name);
    return slot(name, [q] { return q; });
  }

  std::vector<ParamSlot*> samples() {
    std::vector<ParamSlot*> out;
    RingPtr ring = inst_.ring;
    for (int i = 0; i < config_.samples; ++i) {
      const std::uint64_t seed = config_.seed;
      out.push_back(&slot(indexed("sample", i), [ring, seed, i] {
        auto rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        return sample_parameter_ideal(ring, rng);
      }));
    }
    return out;
  }

  void add(std::string id, std::string claim_id, std::function<Outcome()> run) {
    checks_.push_back(Check{std::move(id), std::move(claim_id), std::move(run)});
  }
  void add(const std::string& id, std::function<Outcome()> run) { add(id, id, std::move(run)); }

  long multiplicity(ParamSlot& s) {
    return s.mult.get([&] { return multiplicity_details(s.ideal(), mult_options()); }).value;
  }
  long colength(ParamSlot& s) {
    return s.colength.get([&] { return length(s.ideal()); });
  }
  long defect(ParamSlot& s) { return colength(s) - multiplicity(s); }

  // Rows every parameter ideal can carry, keyed by the table entries given.
  void stability_row(ParamSlot& s, const std::string& claim_id) {
    add(s.name + ".stability", claim_id, [this, &s] {
      auto trace = stability_trace(s.link(), s.ideal(), config_.kmax);
      return Outcome{trace.index ? ReportValue{long{*trace.index}} : ReportValue{}, {}, {}};
    });
  }
  void multiplicity_row(ParamSlot& s, const std::string& claim_id) {
    add(s.name + ".multiplicity", claim_id, [this, &s] { return Outcome{multiplicity(s), {}, {}}; });
  }
  void colength_row(ParamSlot& s, const std::string& claim_id) {
    add(s.name + ".colength", claim_id, [this, &s] { return Outcome{colength(s), {}, {}}; });
  }
  void defect_row(ParamSlot& s, const std::string& claim_id) {
    add(s.name + ".defect", claim_id, [this, &s] { return Outcome{defect(s), {}, {}}; });
  }
  void generators_row(ParamSlot& s) {
    add(s.name + ".generators", "generators", [this, &s] {
      const long mu = min_generators(s.link());
      const long rel = relative_length(s.ideal(), s.link());
      const long d = ring_dimension(inst_.ring);
      return Outcome{mu, ReportValue{rel + d},
                     "l(I/Q) = " + std::to_string(rel) + ", d = " + std::to_string(d)};
    });
  }
  void constancy_row(const std::vector<ParamSlot*>& slots) {
    add("defect.constant", [this, slots] {
      std::vector<long> values;
      for (ParamSlot* s : slots) values.push_back(defect(*s));
      bool constant = true;
      for (long v : values) constant = constant && v == values.front();
      return Outcome{constant, {}, "values " + format_value(values)};
    });
  }

  VerificationReport run();

 private:
  const FamilyInstance& inst_;
  const VerifyConfig& config_;
  std::deque<ParamSlot> slots_;
  std::vector<Check> checks_;
};

VerificationReport Plan::run() {
  auto rows = exec::map_indices<ReportRow>(checks_.size(), [&](std::size_t i) {
    const Check& check = checks_[i];
    const ExpectedValue& ev = inst_.expect(check.claim_id);
    ReportRow row;
    row.id = check.id;
    row.claim = ev.claim;
    row.expected = ev.value;
    row.source = ev.source;
    row.note = ev.note;
    row.flagged = ev.flagged;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome out = check.run();
      row.computed = std::move(out.computed);
      if (out.expected) row.expected = std::move(*out.expected);
      if (!out.detail.empty()) row.note += "; " + out.detail;
      row.pass = value_matches(row.computed, row.expected);
    } catch (const std::exception& e) {
      row.error = e.what();
      row.pass = false;
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
  });
  VerificationReport report;
  report.family = family_name(inst_.tag);
  report.params = inst_.params;
  report.params["samples"] = std::to_string(config_.samples);
  report.params["kmax"] = std::to_string(config_.kmax);
  report.params["nmax"] = std::to_string(config_.nmax);
  report.seed = config_.seed;
  report.characteristic = inst_.ring->field().characteristic();
  report.rows = std::move(rows);
  return report;
}

Outcome boolean(bool b, std::string detail = {}) { return Outcome{b, {}, std::move(detail)}; }

void plan_noncm(Plan& plan) {
  const FamilyInstance& inst = plan.instance();
  const RingPtr& ring = inst.ring;
  plan.add("dimension", [ring] { return Outcome{long{ring_dimension(ring)}, {}, {}}; });

  ParamSlot& q = plan.fixed("Q", "Q");
  plan.colength_row(q, "colength");
  plan.multiplicity_row(q, "multiplicity");
  plan.defect_row(q, "defect");
  plan.add("socle_ideal", [&inst, &q] { return boolean(ideal_equal(q.link(), inst.ideal("J_shape"))); });
  plan.add("cube_reduction", [&inst] {
    const auto& m = inst.ideal("m");
    return boolean(ideal_equal(power(m, 3), product(inst.ideal("Q"), power(m, 2))));
  });
  plan.add("cube_literal", [&inst] {
    const auto& m = inst.ideal("m");
    return boolean(ideal_equal(power(m, 3), product(inst.ideal("Q"), power(inst.ideal("p"), 2))));
  });
  plan.add("p_cubed", [&inst] { return boolean(power(inst.ideal("p"), 3).is_zero()); });
  plan.add("link_square", [&inst, &q] {
    const IdealHandle& j = q.link();
    IdealHandle rhs = sum(product(q.ideal(), j), ideal_of(inst.ring, {"v^2"}));
    return boolean(ideal_equal(power(j, 2), rhs));
  });
  plan.add("square_equality", [&q] {
    const IdealHandle& j = q.link();
    return boolean(ideal_equal(power(j, 2), product(q.ideal(), j)));
  });
  plan.add("cube_equality", [&q] {
    const IdealHandle& j = q.link();
    return boolean(ideal_equal(power(j, 3), product(q.ideal(), power(j, 2))));
  });
  plan.stability_row(q, "stability");
  plan.generators_row(q);
  ParamSlot& squares = plan.fixed("Q2", "Q_squares");
  plan.defect_row(squares, "defect_squares");
  plan.multiplicity_row(squares, "multiplicity_squares");
  plan.add("depth", [&plan, &inst] {
    const IdealHandle& qq = inst.ideal("Q");
    DepthProbe probe = depth_probe(inst.ring, plan.config().depth_trials, plan.config().seed, &qq);
    std::string detail = "regular sequence of length " + std::to_string(probe.lower_bound);
    if (probe.defect) detail += ", defect " + std::to_string(*probe.defect);
    return Outcome{probe.depth ? ReportValue{long{*probe.depth}} : ReportValue{}, {}, detail};
  });

  std::vector<ParamSlot*> all{&q};
  for (ParamSlot* s : plan.samples()) {
    plan.defect_row(*s, "sampled.defect");
    plan.generators_row(*s);
    all.push_back(s);
  }
  if (all.size() > 1) plan.constancy_row(all);
}

void plan_fiber(Plan& plan) {
  const FamilyInstance& inst = plan.instance();
  const RingPtr& ring = inst.ring;
  plan.add("dimension", [ring] { return Outcome{long{ring_dimension(ring)}, {}, {}}; });
  plan.add("primes_meet", [&inst] { return boolean(intersect(inst.ideal("p1"), inst.ideal("p2")).is_zero()); });
  plan.add("primes_product", [&inst] { return boolean(product(inst.ideal("p1"), inst.ideal("p2")).is_zero()); });
  plan.add("primes_sum", [&inst] {
    return boolean(ideal_equal(sum(inst.ideal("p1"), inst.ideal("p2")), inst.ideal("m")));
  });

  ParamSlot& q = plan.fixed("Q", "Q");
  plan.multiplicity_row(q, "multiplicity");
  plan.stability_row(q, "stability");
  plan.generators_row(q);
  if (inst.expected.count("link_is_maximal")) {
    plan.add("link_is_maximal", [&inst, &q] { return boolean(ideal_equal(q.link(), inst.ideal("m"))); });
  }
  std::vector<ParamSlot*> all{&q};
  for (ParamSlot* s : plan.samples()) {
    plan.stability_row(*s, "stability");
    plan.multiplicity_row(*s, "multiplicity");
    plan.generators_row(*s);
    all.push_back(s);
  }
  if (all.size() > 1) plan.constancy_row(all);
  plan.add("defect.invariant", [&plan, &q] { return Outcome{plan.defect(q), {}, {}}; });
}

void plan_field_extension(Plan& plan) {
  const FamilyInstance& inst = plan.instance();
  const RingPtr& ring = inst.ring;
  plan.add("dimension", [ring] { return Outcome{long{ring_dimension(ring)}, {}, {}}; });
  plan.add("relations", [&inst] {
    const IdealHandle kernel = IdealHandle::zero(inst.ring);
    const IdealHandle& rel = inst.ideal("relations");
    std::size_t missing = 0;
    for (const auto& g : rel.gens()) missing += kernel.contains(g) ? 0 : 1;
    return boolean(missing == 0, std::to_string(rel.gens().size() - missing) + " of " +
                                     std::to_string(rel.gens().size()) + " relations vanish");
  });
  ParamSlot& q = plan.fixed("Q", "Q");
  plan.multiplicity_row(q, "multiplicity");
  plan.add("reduction", [&inst] {
    const auto& m = inst.ideal("m");
    return boolean(ideal_equal(power(m, 2), product(inst.ideal("Q"), m)));
  });
  plan.stability_row(q, "stability");
  plan.generators_row(q);
  std::vector<ParamSlot*> all{&q};
  for (ParamSlot* s : plan.samples()) {
    plan.stability_row(*s, "stability");
    plan.multiplicity_row(*s, "multiplicity");
    plan.generators_row(*s);
    all.push_back(s);
  }
  if (all.size() > 1) plan.constancy_row(all);
}

void plan_regular(Plan& plan) {
  const FamilyInstance& inst = plan.instance();
  if (inst.label == "line") {
    ParamSlot& q = plan.fixed("Q", "Q");
    plan.stability_row(q, "stability");
    return;
  }
  for (const char* name : {"closed", "open", "maximal"}) {
    const std::string key = std::string("socle_") + name;
    const std::string ideal_name = std::string("Q_") + name;
    plan.add(key, [&inst, ideal_name] {
      IdealHandle qm = product(inst.ideal(ideal_name), inst.ideal("m"));
      return Outcome{socle(qm).length, {}, {}};
    });
  }
  plan.add("open_link", [&inst] {
    const IdealHandle& q = inst.ideal("Q_open");
    const IdealHandle& m = inst.ideal("m");
    return boolean(ideal_equal(colon(q, m), colon(product(q, m), m)));
  });
  plan.add("type", [&inst, &plan] { return Outcome{cm_type(inst.ideal("Q_maximal"), plan.mult_options()), {}, {}}; });
}

void plan_semigroup(Plan& plan) {
  const FamilyInstance& inst = plan.instance();
  const RingPtr& ring = inst.ring;
  plan.add("dimension", [ring] { return Outcome{long{ring_dimension(ring)}, {}, {}}; });
  ParamSlot& q = plan.fixed("Q", "Q");
  plan.colength_row(q, "colength");
  plan.multiplicity_row(q, "multiplicity");
  plan.defect_row(q, "defect");
  plan.add("type", [&inst, &plan] { return Outcome{cm_type(inst.ideal("Q"), plan.mult_options()), {}, {}}; });
  plan.stability_row(q, "stability");
  plan.generators_row(q);
  // No sampled rows: a linear form other than a multiple of x also vanishes
  // at points of the curve away from the origin, so it never passes the
  // origin-primary gate of the global ring.
}

}  // namespace

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::NonCM: return "noncm";
    case FamilyTag::FiberProduct: return "fiber";
    case FamilyTag::FieldExtension: return "field-extension";
    case FamilyTag::RegularParam: return "regular";
    case FamilyTag::SemigroupCurve: return "semigroup";
  }
  return "unknown";
}

std::optional<FamilyTag> parse_family_name(const std::string& name) {
  for (auto tag : {FamilyTag::NonCM, FamilyTag::FiberProduct, FamilyTag::FieldExtension, FamilyTag::RegularParam,
                   FamilyTag::SemigroupCurve}) {
    if (family_name(tag) == name) return tag;
  }
  if (name == "fiber-product") return FamilyTag::FiberProduct;
  if (name == "regular-param") return FamilyTag::RegularParam;
  if (name == "semigroup-curve") return FamilyTag::SemigroupCurve;
  return std::nullopt;
}

const IdealHandle& FamilyInstance::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw PreconditionError("instance has no ideal named '" + name + "'");
  return it->second;
}

const ExpectedValue& FamilyInstance::expect(const std::string& claim_id) const {
  auto it = expected.find(claim_id);
  if (it == expected.end()) throw PreconditionError("no expected value for claim '" + claim_id + "'");
  return it->second;
}

FamilyInstance noncm_ring(int m, int d, const Field& field) {
  if (d < 1 || d >= m) {
    throw PreconditionError("noncm ring needs 1 <= d < m (the colength computation uses d < m); got m = " +
                            std::to_string(m) + ", d = " + std::to_string(d));
  }
  std::vector<std::string> xs = indexed_names("x", m), as = indexed_names("a", d);
  std::vector<std::string> names = xs;
  names.push_back("v");
  names.insert(names.end(), as.begin(), as.end());

  std::vector<std::string> defining;
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) defining.push_back(indexed("x", i) + "*" + indexed("x", j));
  }
  defining.push_back(indexed("x", m) + "^2");
  for (const auto& x : xs) defining.push_back(x + "*v");
  std::string rel = "v^2";
  for (int i = 1; i <= d; ++i) rel += " - " + indexed("a", i) + "*" + indexed("x", i);
  defining.push_back(rel);

  auto plain = RingPresentation::make(field, names);
  std::vector<Polynomial> polys;
  for (const auto& g : defining) polys.push_back(plain->parse(g));

  FamilyInstance inst;
  inst.tag = FamilyTag::NonCM;
  inst.params = {{"m", std::to_string(m)}, {"d", std::to_string(d)}, {"char", char_param(field)}};
  inst.ring = RingPresentation::quotient(plain->ambient(), std::move(polys));
  const RingPtr& ring = inst.ring;

  std::vector<std::string> squares, j_shape = as, p = xs;
  for (const auto& a : as) squares.push_back(a + "^2");
  for (int i = 1; i < m; ++i) j_shape.push_back(indexed("x", i) + "*" + indexed("x", m));
  j_shape.push_back("v");
  p.push_back("v");
  inst.ideals["Q"] = ideal_of(ring, as);
  inst.ideals["Q_squares"] = ideal_of(ring, squares);
  inst.ideals["m"] = IdealHandle::maximal(ring);
  inst.ideals["p"] = ideal_of(ring, p);
  inst.ideals["J_shape"] = ideal_of(ring, j_shape);

  const long two_m = 2L * m;
  put(inst, "dimension", long{d}, kLiterature, "dim A = d", "the radical of the defining ideal is (x, v)");
  put(inst, "colength", two_m + 1, kLiterature, "l(A/Q) = 2m + 1", "A/Q has a monomial basis of size 2m + 1");
  put(inst, "multiplicity", two_m, kLiterature, "e_Q(A) = 2m",
      "length of the localization at the unique minimal prime");
  put(inst, "defect", 1L, kDerived, "l(A/Q) - e_Q(A) = 1", "difference of the colength and multiplicity rows");
  put(inst, "socle_ideal", true, kLiterature, "Q : m = Q + (xi*xm : i < m) + (v)", "read off the basis of A/Q");
  put(inst, "cube_reduction", true, kLiterature, "m^3 = Q m^2", "p^3 = 0 and m = Q + p");
  put(inst, "cube_literal", false, kDerived, "m^3 = Q p^2 fails as an ideal identity",
      "a1^3 lies in m^3 but not in p, while Q p^2 is inside p");
  put(inst, "p_cubed", true, kLiterature, "p^3 = 0", "every cubic monomial in x, v lies in the defining ideal");
  put(inst, "link_square", true, kLiterature, "J^2 = QJ + (v^2) for J = Q : m", "expand the generators of J");
  put(inst, "square_equality", false, kLiterature, "J^2 = QJ fails for J = Q : m",
      "v^2 is not in QJ after specializing to k[x1, v, a1]");
  put(inst, "cube_equality", true, kLiterature, "J^3 = QJ^2 for J = Q : m", "J^2 = QJ + (v^2) and v^3 = 0");
  put(inst, "stability", 2L, kLiterature, "least n with J^(n+1) = Q J^n is 2",
      "square fails and cube holds");
  put(inst, "generators", ReportValue{}, kLiterature, "mu(Q : m) = l((Q : m)/Q) + d when e(A) >= 2",
      "Q is a minimal reduction of Q : m, so m(Q : m) = mQ");
  put(inst, "defect_squares", 1L, kLiterature, "l(A/(a^2)) - e_(a^2)(A) = 1", "the ring is Buchsbaum with invariant 1");
  put(inst, "multiplicity_squares", (1L << d) * two_m, kDerived, "e_(a^2)(A) = 2^d * 2m",
      "e_(q) for q generated by squares of a system of parameters is 2^d e_Q");
  put(inst, "depth", long{d - 1}, kLiterature, "depth A = d - 1",
      "depth probe certifies d - 1 and positive defect excludes d");
  put(inst, "sampled.defect", 1L, kLiterature, "l(A/q) - e_q(A) = 1 for a sampled parameter ideal q",
      "Buchsbaum: the defect does not depend on the parameter ideal");
  put(inst, "defect.constant", true, kLiterature, "defect is the same for every parameter ideal",
      "Buchsbaum rings have constant defect");
  return inst;
}

FamilyInstance fiber_product_ring(int d, const Field& field) {
  if (d < 1) throw PreconditionError("fiber product needs d >= 1");
  std::vector<std::string> xs = indexed_names("x", d), ys = indexed_names("y", d);
  std::vector<std::string> names = xs;
  names.insert(names.end(), ys.begin(), ys.end());
  auto plain = RingPresentation::make(field, names);
  std::vector<Polynomial> defining;
  for (const auto& x : xs) {
    for (const auto& y : ys) defining.push_back(plain->parse(x + "*" + y));
  }
  FamilyInstance inst;
  inst.tag = FamilyTag::FiberProduct;
  inst.params = {{"d", std::to_string(d)}, {"char", char_param(field)}};
  inst.ring = RingPresentation::quotient(plain->ambient(), std::move(defining));
  std::vector<std::string> q;
  for (int i = 1; i <= d; ++i) q.push_back(indexed("x", i) + " + " + indexed("y", i));
  inst.ideals["Q"] = ideal_of(inst.ring, q);
  inst.ideals["m"] = IdealHandle::maximal(inst.ring);
  inst.ideals["p1"] = ideal_of(inst.ring, xs);
  inst.ideals["p2"] = ideal_of(inst.ring, ys);

  put(inst, "dimension", long{d}, kElementary, "dim A = d", "both components are polynomial rings in d variables");
  put(inst, "primes_meet", true, kLiterature, "p1 and p2 intersect in (0)", "intersection via a tag variable");
  put(inst, "primes_product", true, kElementary, "p1 p2 = (0)", "every xi*yj is a defining generator");
  put(inst, "primes_sum", true, kLiterature, "p1 + p2 = m", "generators of p1 and p2 are all the variables");
  put(inst, "multiplicity", 2L, kDerived, "e_Q(A) = 2 for a minimal reduction Q of m",
      "e(A/p1) + e(A/p2) = 1 + 1 with both components of full dimension");
  put(inst, "stability", 1L, kLiterature, "(Q : m)^2 = Q (Q : m)", "equality holds for every parameter ideal");
  put(inst, "generators", ReportValue{}, kLiterature, "mu(Q : m) = l((Q : m)/Q) + d when e(A) >= 2",
      "Q is a minimal reduction of Q : m, so m(Q : m) = mQ");
  put(inst, "defect.constant", true, kLiterature, "defect is the same for every parameter ideal",
      "the ring is Buchsbaum");
  put(inst, "defect.invariant", std::vector<long>{d, d - 1}, kLiterature,
      "Buchsbaum invariant l(A/Q) - e_Q(A)",
      "sources disagree between d and d - 1; both are admissible and neither is chosen", true);
  if (d == 1) {
    put(inst, "link_is_maximal", true, kDerived, "(x1 + y1) : m = m", "m^2 = (x^2, y^2) lies in (x + y) modulo xy");
  }
  return inst;
}

FamilyInstance field_extension_ring(int d, const std::string& minpoly, const Field& field) {
  if (d < 2) throw PreconditionError("field extension model needs d >= 2");
  Quadratic q = minpoly.empty() ? default_quadratic(field) : parse_quadratic(field, minpoly);
  const std::string poly_text = quadratic_text(field, q);

  std::vector<std::string> target_names{"u"};
  for (const auto& x : indexed_names("X", d)) target_names.push_back(x);
  auto target = RingPresentation::make(field, target_names);
  target = RingPresentation::quotient(target->ambient(), {target->parse(poly_text)});
  std::vector<Polynomial> images;
  std::vector<std::string> pres = indexed_names("y", d);
  for (int j = 1; j <= d; ++j) images.push_back(target->parse(indexed("X", j)));
  for (int j = 1; j <= d; ++j) images.push_back(target->parse("u*" + indexed("X", j)));
  for (const auto& z : indexed_names("z", d)) pres.push_back(z);
  IdealHandle kernel = subalgebra_presentation(target, images, pres);

  FamilyInstance inst;
  inst.tag = FamilyTag::FieldExtension;
  inst.params = {{"d", std::to_string(d)}, {"minpoly", poly_text}, {"char", char_param(field)}};
  inst.ring = RingPresentation::quotient(kernel.ring()->ambient(), kernel.basis().elements());
  const RingPtr& ring = inst.ring;

  // Products of u*Xi and u*Xj rewritten with u^2 = -b*u - c.
  Polynomial b = Polynomial::constant(ring->ambient(), q.b), c = Polynomial::constant(ring->ambient(), q.c);
  std::vector<Polynomial> relations;
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Polynomial yi = ring->variable(indexed("y", i)), yj = ring->variable(indexed("y", j));
      Polynomial zi = ring->variable(indexed("z", i)), zj = ring->variable(indexed("z", j));
      relations.push_back(zi * zj + b * yi * zj + c * yi * yj);
      if (i != j) relations.push_back(yi * zj - yj * zi);
    }
  }
  inst.ideals["relations"] = IdealHandle(ring, relations);
  inst.ideals["Q"] = ideal_of(ring, indexed_names("y", d));
  inst.ideals["m"] = IdealHandle::maximal(ring);

  put(inst, "dimension", long{d}, kElementary, "dim A = d", "A is a subring of K[X] over which K[X] is finite");
  put(inst, "relations", true, kDerived, "yi*zj - yj*zi and zi*zj + b yi*zj + c yi*yj vanish in A",
      "substitution of yj = Xj, zj = u*Xj with u^2 = -b u - c");
  put(inst, "multiplicity", 2L, kLiterature, "e(A) equals the extension degree 2",
      "e_Q(A) = l(B/QB) = [K : k] for the normalization B");
  put(inst, "reduction", true, kLiterature, "m^2 = Q m for Q generated by the Xj",
      "m K[X] is the maximal ideal of K[X]");
  put(inst, "stability", 1L, kLiterature, "(Q : m)^2 = Q (Q : m)",
      "Buchsbaum of multiplicity 2 with positive depth");
  put(inst, "generators", ReportValue{}, kLiterature, "mu(Q : m) = l((Q : m)/Q) + d when e(A) >= 2",
      "Q is a minimal reduction of Q : m, so m(Q : m) = mQ");
  put(inst, "defect.constant", true, kLiterature, "defect is the same for every parameter ideal",
      "the ring is Buchsbaum");
  return inst;
}

std::vector<FamilyInstance> regular_param_scenarios(const Field& field) {
  std::vector<FamilyInstance> out;

  FamilyInstance plane;
  plane.tag = FamilyTag::RegularParam;
  plane.label = "plane";
  plane.params = {{"char", char_param(field)}};
  plane.ring = RingPresentation::make(field, {"x", "y"});
  plane.ideals["Q_closed"] = ideal_of(plane.ring, {"x", "y^3"});
  plane.ideals["Q_open"] = ideal_of(plane.ring, {"x^2", "y^2"});
  plane.ideals["Q_maximal"] = ideal_of(plane.ring, {"x", "y"});
  plane.ideals["m"] = IdealHandle::maximal(plane.ring);
  put(plane, "socle_closed", 2L, kLiterature, "l((Qm : m)/Qm) = d for Q = (x, y^3)",
      "Q has the integrally closed shape (a1, a2^q), so Qm : m = Q");
  put(plane, "socle_open", 3L, kLiterature, "l((Qm : m)/Qm) = r(A) + d for Q = (x^2, y^2)",
      "Q is not integrally closed, so Q : m = Qm : m");
  put(plane, "socle_maximal", 2L, kElementary, "l((Qm : m)/Qm) = d for Q = (x, y)",
      "the closed shape with q = 1");
  put(plane, "open_link", true, kLiterature, "Q : m = Qm : m for Q = (x^2, y^2)",
      "m(Q : m) = mQ once Q is a reduction of Q : m");
  put(plane, "type", 1L, kElementary, "r(A) = 1", "a regular ring is Gorenstein");
  out.push_back(std::move(plane));

  FamilyInstance line;
  line.tag = FamilyTag::RegularParam;
  line.label = "line";
  line.params = {{"char", char_param(field)}};
  line.ring = RingPresentation::make(field, {"x"});
  line.ideals["Q"] = ideal_of(line.ring, {"x^2"});
  line.ideals["m"] = IdealHandle::maximal(line.ring);
  put(line, "stability", ReportValue{}, kElementary, "no n with (x)^(n+1) = (x^2)(x)^n",
      "degrees n + 1 and n + 2 never agree");
  out.push_back(std::move(line));
  return out;
}

FamilyInstance semigroup_curve(const Field& field) {
  auto plain = RingPresentation::make(field, {"x", "y", "z"});
  FamilyInstance inst;
  inst.tag = FamilyTag::SemigroupCurve;
  inst.params = {{"char", char_param(field)}};
  inst.ring = RingPresentation::quotient(
      plain->ambient(), {plain->parse("y^2 - x*z"), plain->parse("z^2 - x^2*y"), plain->parse("x^3 - y*z")});
  inst.ideals["Q"] = ideal_of(inst.ring, {"x"});
  inst.ideals["m"] = IdealHandle::maximal(inst.ring);
  put(inst, "dimension", 1L, kElementary, "dim A = 1", "A is the semigroup ring of <3, 4, 5>");
  put(inst, "colength", 3L, kDerived, "l(A/(t^3)) = 3", "residues of the semigroup modulo 3");
  put(inst, "multiplicity", 3L, kDerived, "e(A) = 3", "smallest generator of the semigroup");
  put(inst, "defect", 0L, kElementary, "l(A/Q) - e_Q(A) = 0", "a one-dimensional domain is Cohen-Macaulay");
  put(inst, "type", 2L, kDerived, "r(A) = 2", "pseudo-Frobenius numbers of <3, 4, 5> are 1 and 2");
  put(inst, "stability", 1L, kLiterature, "(Q : m)^2 = Q (Q : m)",
      "holds in every Cohen-Macaulay ring of multiplicity at least 2");
  put(inst, "generators", ReportValue{}, kLiterature, "mu(Q : m) = l((Q : m)/Q) + d when e(A) >= 2",
      "Q is a minimal reduction of Q : m, so m(Q : m) = mQ");
  return inst;
}

void check_provenance(const FamilyInstance& instance) {
  for (const auto& [id, ev] : instance.expected) {
    if (ev.source.empty() || ev.note.empty() || ev.claim.empty()) {
      throw PreconditionError("expected value '" + id + "' has no provenance");
    }
    if (ev.source != kLiterature && ev.source != kDerived && ev.source != kElementary) {
      throw PreconditionError("expected value '" + id + "' has unknown source '" + ev.source + "'");
    }
  }
}

VerificationReport verify(const FamilyInstance& instance, const VerifyConfig& config) {
  check_provenance(instance);
  Plan plan(instance, config);
  switch (instance.tag) {
    case FamilyTag::NonCM: plan_noncm(plan); break;
    case FamilyTag::FiberProduct: plan_fiber(plan); break;
    case FamilyTag::FieldExtension: plan_field_extension(plan); break;
    case FamilyTag::RegularParam: plan_regular(plan); break;
    case FamilyTag::SemigroupCurve: plan_semigroup(plan); break;
  }
  VerificationReport report = plan.run();
  if (!instance.label.empty()) {
    for (auto& row : report.rows) row.id = instance.label + "." + row.id;
  }
  return report;
}

VerificationReport verify_all(const std::vector<FamilyInstance>& instances, const VerifyConfig& config) {
  if (instances.empty()) throw PreconditionError("no instances to verify");
  VerificationReport merged;
  for (const auto& inst : instances) {
    VerificationReport r = verify(inst, config);
    if (merged.family.empty()) {
      merged = std::move(r);
      continue;
    }
    for (auto& row : r.rows) merged.rows.push_back(std::move(row));
  }
  return merged;
}

}  // namespace socle
