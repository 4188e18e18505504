#include "socle/ring.hpp"

#include "socle/error.hpp"
#include "socle/text.hpp"

namespace socle {

RingPresentation::RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> defining)
    : ambient_(std::move(ambient)) {
  for (auto& g : defining) {
    require_same_ring(*ambient_, *g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) graded_ = false;
    defining_.push_back(std::move(g));
  }
  id_ = ambient_->id();
  if (!defining_.empty()) id_ += "/" + format_polynomial_list(defining_);
}

std::shared_ptr<const RingPresentation> RingPresentation::make(Field field, std::vector<std::string> names,
                                                               MonomialOrder order,
                                                               std::vector<Polynomial> defining) {
  return quotient(PolyRing::make(field, std::move(names), order), std::move(defining));
}

std::shared_ptr<const RingPresentation> RingPresentation::quotient(PolyRingPtr ambient,
                                                                   std::vector<Polynomial> defining) {
  return std::shared_ptr<const RingPresentation>(new RingPresentation(std::move(ambient), std::move(defining)));
}

Polynomial RingPresentation::variable(const std::string& name) const {
  auto idx = ambient_->index_of(name);
  if (!idx) throw PreconditionError("no variable '" + name + "' in " + id_);
  return variable(*idx);
}

Polynomial RingPresentation::parse(const std::string& text) const { return parse_polynomial(text, ambient_); }

std::shared_ptr<const GroebnerBasis> RingPresentation::defining_basis() const {
  return groebner_basis(defining_, ambient_);
}

void require_same_ring(const RingPresentation& a, const RingPresentation& b) {
  if (!a.same_as(b)) throw RingMismatchError(a.id(), b.id());
}

}  // namespace socle
