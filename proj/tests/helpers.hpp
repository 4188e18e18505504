#pragma once

#include <string>

#include "socle/ideal.hpp"
#include "socle/script.hpp"
#include "socle/text.hpp"

namespace testing_helpers {

inline socle::RingPtr ring(const std::string& spec) { return socle::parse_ring_spec(spec); }

inline socle::Polynomial poly(const socle::RingPtr& r, const std::string& text) { return r->parse(text); }

inline socle::IdealHandle ideal(const socle::RingPtr& r, const std::string& text) {
  return socle::IdealHandle(r, socle::parse_polynomial_list(text, r->ambient()));
}

}  // namespace testing_helpers
