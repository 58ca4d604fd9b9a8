#include "lhull/group_image.hpp"

namespace lhull {

  std::string GroupDescriptor::to_string() const {
    switch (kind) {
      case Kind::free_group:
        return "FreeGroup(" + std::to_string(rank) + ")";
      case Kind::integers:
        return rank == 1 ? "Integers(Z)" : "Integers(Z^" + std::to_string(rank) + ")";
      case Kind::integer_lattice:
        return "IntegerLattice(" + std::to_string(step) + "Z)";
      case Kind::rational_affine:
        return "RationalAffine(Q x| Q^x)";
      case Kind::finite_group:
        return "FiniteGroup(order " + std::to_string(order) + ")";
    }
    return "?";
  }

  IntVector add_vectors(IntVector const& x, IntVector const& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = checked::add(x[i], y[i]);
    }
    return out;
  }

  IntVector sub_vectors(IntVector const& x, IntVector const& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = checked::sub(x[i], y[i]);
    }
    return out;
  }

}  // namespace lhull
