#pragma once

#include <string>

#include "wittlab/errors.hpp"
#include "wittlab/numeric.hpp"

namespace wittlab {

// A place of Q: the real place or a finite prime p.
class Place {
 public:
  static Place real() { return Place(true, 0); }

  static Place prime(const Int& p) {
    if (!is_prime(p)) {
      throw ValidationError("place must be 'real' or a prime, got " + p.get_str());
    }
    return Place(false, p);
  }

  bool is_real() const { return real_; }

  const Int& prime_value() const {
    if (real_) throw std::logic_error("real place has no residue characteristic");
    return p_;
  }

  bool operator==(const Place& o) const { return real_ == o.real_ && p_ == o.p_; }
  bool operator!=(const Place& o) const { return !(*this == o); }

  std::string str() const { return real_ ? "real" : p_.get_str(); }

  // Accepts "real" (also "R", "inf") or a prime written in decimal.
  static Place parse(const std::string& text);

 private:
  Place(bool real, const Int& p) : real_(real), p_(p) {}

  bool real_;
  Int p_;
};

}  // namespace wittlab
