#pragma once

#include <stdexcept>
#include <vector>

#include "gle/frames.hpp"
#include "gle/linalg.hpp"

namespace gle {

class NotARepresentation : public std::runtime_error {
 public:
  explicit NotARepresentation(const std::string& m) : std::runtime_error(m) {}
};

class ComponentNotFound : public std::runtime_error {
 public:
  explicit ComponentNotFound(const std::string& m) : std::runtime_error(m) {}
};

/// Label (p,q) of a complex isotypic component of so(1,3); the real form
/// pairs (p,q) with (q,p) when p != q.
struct IsotypicLabel {
  Rat p, q;
  bool paired = false;  // real form is (p,q) ⊕ (q,p)

  int real_dim() const {
    Rat d = (2 * p + 1) * (2 * q + 1);
    long v = d.get_num().get_si();  // denominators cancel for valid labels
    return paired ? int(2 * v) : int(v);
  }
  bool operator==(const IsotypicLabel& o) const {
    return p == o.p && q == o.q && paired == o.paired;
  }
};

struct IsotypicComponent {
  IsotypicLabel label;
  std::vector<Vec<Rat>> basis;       // real rational basis of the component
  Matrix<Rat> projector;             // real isotypic projector onto it
};

/// Exact so(W)-isotypic decomposition of a representation given by the six
/// matrices for (sigma_1, sigma_2, sigma_3, sigma_23, sigma_31, sigma_12)
/// acting on Q^n. Computed over Q(i) through the commuting Casimirs of
/// A_k = (M_k + i N_k)/2 and B_k = (M_k - i N_k)/2, then realified by
/// pairing conjugate components.
std::vector<IsotypicComponent> isotypic_decompose(const std::array<Matrix<Rat>, 6>& rep);

/// Same with the opposite orientation A = (M - iN)/2; the components as
/// subspaces must agree.
std::vector<IsotypicComponent> isotypic_decompose_opposite(const std::array<Matrix<Rat>, 6>& rep);

}  // namespace gle
