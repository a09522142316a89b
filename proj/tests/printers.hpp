#pragma once

#include <ostream>

#include "assocgeom/relation.hpp"

namespace asg {

template <FieldElement K>
void PrintTo(const Subspace<K>& s, std::ostream* os) {
  *os << "dim " << s.dim() << " in " << s.ambient() << "\n" << s.str();
}

template <FieldElement K>
void PrintTo(const Relation<K>& r, std::ostream* os) {
  *os << "relation " << r.src_dim() << " -> " << r.dst_dim() << ", ";
  PrintTo(r.graph(), os);
}

}  // namespace asg
