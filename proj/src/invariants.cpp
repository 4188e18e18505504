#include "socle/invariants.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "socle/error.hpp"

namespace socle {

namespace {

void require_finite(const IdealHandle& ideal) {
  auto lms = ideal.basis().leading_monomials();
  const PolyRing& r = *ideal.ring()->ambient();
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m[i] == m.degree(); });
    if (!pure) {
      throw PreconditionError("ideal is not primary to the origin: no power of " + r.name(i) +
                              " is a leading monomial, so the quotient is infinite-dimensional");
    }
  }
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ArtinianQuotient::ArtinianQuotient(IdealHandle ideal, std::size_t max_monomials) : ideal_(std::move(ideal)) {
  const GroebnerBasis& gb = ideal_.basis();
  if (gb.is_unit_ideal()) return;
  require_finite(ideal_);
  auto lms = gb.leading_monomials();
  std::vector<std::uint64_t> masks;
  for (const auto& m : lms) masks.push_back(m.support_mask());
  auto standard = [&](const Monomial& m) {
    std::uint64_t mm = m.support_mask();
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if ((masks[i] & ~mm) == 0 && lms[i].divides(m)) return false;
    }
    return true;
  };
  const std::size_t n = ideal_.ring()->nvars();
  std::deque<Monomial> queue;
  Monomial one(n);
  index_.emplace(one, 0);
  basis_.push_back(one);
  queue.push_back(one);
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(n, i);
      if (index_.count(next) || !standard(next)) continue;
      if (basis_.size() >= max_monomials) {
        throw ResourceLimitError("more than " + std::to_string(max_monomials) + " standard monomials");
      }
      index_.emplace(next, basis_.size());
      basis_.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  const PolyRing& r = *ideal_.ring()->ambient();
  std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) { return r.compare(a, b) < 0; });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

std::optional<std::size_t> ArtinianQuotient::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> ArtinianQuotient::coordinates(const Polynomial& f) const {
  const Field& k = ideal_.ring()->field();
  std::vector<Scalar> out(basis_.size(), k.zero());
  Polynomial r = ideal_.basis().reduce(f);
  for (const auto& t : r.terms()) {
    auto idx = index_of(t.monomial);
    if (!idx) throw ComputationError("normal form has a non-standard monomial");
    out[*idx] = t.coeff;
  }
  return out;
}

long length(const IdealHandle& ideal, std::size_t max_monomials) {
  ArtinianQuotient quotient(ideal, max_monomials);
  const long len = static_cast<long>(quotient.length());
  if (len == 0) return 0;
  const RingPtr& ring = ideal.ring();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    // In a quotient of dimension len, x is nilpotent iff x^len vanishes.
    Polynomial p = Polynomial::term(ring->ambient(), Monomial::variable(ring->nvars(), i, static_cast<int>(len)),
                                    ring->field().one());
    if (!ideal.contains(p)) {
      throw PreconditionError("ideal is not primary to the origin: variable " + ring->ambient()->name(i) +
                              " is not nilpotent modulo it");
    }
  }
  return len;
}

long relative_length(const IdealHandle& inner, const IdealHandle& outer) {
  require_same_ring(*inner.ring(), *outer.ring());
  for (const auto& g : inner.gens()) {
    if (!outer.contains(g)) {
      throw PreconditionError("relative length needs inner ⊆ outer; generator " + g.to_string() +
                              " is not in the outer ideal");
    }
  }
  return length(inner) - length(outer);
}

SocleResult socle(const IdealHandle& ideal) {
  long base = length(ideal);
  IdealHandle s = colon(ideal, IdealHandle::maximal(ideal.ring()));
  return SocleResult{s, base - length(s)};
}

long min_generators(const IdealHandle& ideal) {
  IdealHandle m = IdealHandle::maximal(ideal.ring());
  return length(product(m, ideal)) - length(ideal);
}

HilbertSamuelSequence hilbert_samuel(const IdealHandle& q, unsigned nmax, const HilbertSamuelOptions& options) {
  length(q, options.max_standard_monomials);  // origin-primary gate
  struct Term {
    long value = 0;
    std::optional<std::string> truncated;
  };
  auto terms = exec::map_indices<Term>(
      nmax,
      [&](std::size_t i) {
        try {
          return Term{length(power(q, static_cast<unsigned>(i + 1)), options.max_standard_monomials), std::nullopt};
        } catch (const ResourceLimitError& e) {
          return Term{0, std::string(e.what())};
        }
      },
      options.policy);
  HilbertSamuelSequence out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].truncated) {
      out.truncated = true;
      out.truncation_reason = "n = " + std::to_string(i + 1) + ": " + *terms[i].truncated;
      break;
    }
    out.lengths.push_back(terms[i].value);
  }
  return out;
}

MultiplicityResult multiplicity_details(const IdealHandle& q, const MultiplicityOptions& options) {
  MultiplicityResult result;
  const int d = ring_dimension(q.ring());
  result.dimension = d;
  const unsigned nmax = options.nmax ? options.nmax : static_cast<unsigned>(d + 6);
  if (nmax < static_cast<unsigned>(d + 2)) {
    throw PreconditionError("nmax must be at least dim + 2 = " + std::to_string(d + 2));
  }
  length(q, options.max_standard_monomials);
  auto difference = [&](std::size_t start) {
    long acc = 0;
    for (int j = 0; j <= d; ++j) {
      long sign = ((d - j) % 2 == 0) ? 1 : -1;
      acc += sign * binomial(d, j) * result.sequence[start + static_cast<std::size_t>(j)];
    }
    return acc;
  };
  const std::size_t chunk = static_cast<std::size_t>(std::max(1, exec::max_threads()));
  std::size_t have = 0;
  std::size_t want = static_cast<std::size_t>(d + 2);
  while (true) {
    auto fresh = exec::map_indices<long>(
        want - have,
        [&](std::size_t i) {
          return length(power(q, static_cast<unsigned>(have + i + 1)), options.max_standard_monomials);
        },
        options.policy);
    result.sequence.insert(result.sequence.end(), fresh.begin(), fresh.end());
    have = want;
    for (std::size_t start = 0; start + static_cast<std::size_t>(d) + 1 < have; ++start) {
      long a = difference(start);
      long b = difference(start + 1);
      if (a == b) {
        result.value = a;
        result.stabilized_at = static_cast<unsigned>(start + 1);
        result.sequence.resize(start + static_cast<std::size_t>(d) + 2);
        return result;
      }
    }
    if (have >= nmax) break;
    want = std::min<std::size_t>(nmax, have + chunk);
  }
  throw ComputationError("postulation not reached within nmax = " + std::to_string(nmax) +
                         "; Hilbert-Samuel sequence: " + join(result.sequence));
}

long multiplicity(const IdealHandle& q, const MultiplicityOptions& options) {
  return multiplicity_details(q, options).value;
}

long buchsbaum_defect(const IdealHandle& q, const MultiplicityOptions& options) {
  return length(q, options.max_standard_monomials) - multiplicity(q, options);
}

long cm_type(const IdealHandle& q, const MultiplicityOptions& options) {
  long defect = buchsbaum_defect(q, options);
  if (defect != 0) {
    throw PreconditionError("type via socle requires Cohen-Macaulay (defect of the parameter ideal is " +
                            std::to_string(defect) + ")");
  }
  return relative_length(q, colon(q, IdealHandle::maximal(q.ring())));
}

StabilityTrace stability_trace(const IdealHandle& ideal, const IdealHandle& q, int kmax) {
  require_same_ring(*ideal.ring(), *q.ring());
  if (!ideal.contains(q)) throw PreconditionError("stability index needs Q ⊆ I");
  StabilityTrace trace;
  IdealHandle current = ideal;  // I^n
  for (int n = 1; n <= kmax; ++n) {
    IdealHandle next = power(ideal, static_cast<unsigned>(n + 1));
    bool eq = ideal_equal(next, product(q, current));
    trace.equal.push_back(eq);
    if (eq) {
      trace.index = n;
      break;
    }
    current = next;
  }
  return trace;
}

std::optional<int> stability_index(const IdealHandle& ideal, const IdealHandle& q, int kmax) {
  return stability_trace(ideal, q, kmax).index;
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Scalar random_coefficient(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) return field.from_int(static_cast<long long>(rng() % 19) - 9);
  return Scalar(static_cast<std::uint32_t>(rng() % field.characteristic()));
}

Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  std::vector<Term> terms;
  const std::size_t n = ring->nvars();
  for (std::size_t i = 0; i < n; ++i) terms.push_back(Term{Monomial::variable(n, i), random_coefficient(ring->field(), rng)});
  return Polynomial::from_terms(ring->ambient(), std::move(terms));
}

IdealHandle sample_parameter_ideal(const RingPtr& ring, std::mt19937_64& rng, const SamplerOptions& options) {
  const int d = ring_dimension(ring);
  const std::size_t n = ring->nvars();
  for (int attempt = 0; attempt <= options.max_rejections; ++attempt) {
    std::vector<Polynomial> forms;
    for (int i = 0; i < d; ++i) {
      Polynomial f = random_linear_form(ring, rng);
      if (options.inhomogeneous) {
        std::vector<Term> extra;
        for (int k = 0; k < 2; ++k) {
          Monomial m = Monomial::variable(n, rng() % n) * Monomial::variable(n, rng() % n);
          extra.push_back(Term{std::move(m), random_coefficient(ring->field(), rng)});
        }
        f = f + Polynomial::from_terms(ring->ambient(), std::move(extra));
      }
      forms.push_back(std::move(f));
    }
    IdealHandle q(ring, std::move(forms));
    if (is_origin_primary(q)) return q;
  }
  throw ComputationError("no parameter ideal found after " + std::to_string(options.max_rejections) +
                         " rejected samples");
}

DepthProbe depth_probe(const RingPtr& ring, int trials, std::uint64_t seed, const IdealHandle* parameter_ideal) {
  DepthProbe probe;
  probe.dimension = ring_dimension(ring);
  const int d = probe.dimension;
  for (int trial = 0; trial < trials && probe.lower_bound < d; ++trial) {
    auto rng = sample_stream(seed ^ 0x6465707468ull, static_cast<std::uint64_t>(trial));
    std::vector<Polynomial> seq;
    while (static_cast<int>(seq.size()) < d) {
      Polynomial f = random_linear_form(ring, rng);
      IdealHandle prev(ring, seq);
      if (!ideal_equal(colon_element(prev, f), prev)) break;
      seq.push_back(std::move(f));
    }
    if (static_cast<int>(seq.size()) > probe.lower_bound) {
      probe.lower_bound = static_cast<int>(seq.size());
      probe.witness = seq;
    }
  }
  if (probe.lower_bound == d) {
    probe.depth = d;
    return probe;
  }
  if (probe.lower_bound == d - 1) {
    long defect;
    if (parameter_ideal) {
      defect = buchsbaum_defect(*parameter_ideal);
    } else {
      auto rng = sample_stream(seed, 0);
      defect = buchsbaum_defect(sample_parameter_ideal(ring, rng));
    }
    probe.defect = defect;
    if (defect > 0) probe.depth = d - 1;
  }
  return probe;
}

}  // namespace socle
