#pragma once

#include <string>
#include <string_view>

#include "assocgeom/gamma.hpp"
#include "assocgeom/pairs.hpp"
#include "assocgeom/relation.hpp"

namespace asg {

// Subspace block:
//   field p=<prime> | field q
//   ambient <n>
//   <one basis row per line, space-separated scalars, rationals as a/b>
// '#' starts a comment. A quintuple is five blocks, each preceded by a
// label line [x], [a], [y], [b], [z]. A relation is "relation <n> <m>"
// followed by one block of ambient n + m.
// Parse errors throw kParse with a 1-based line number.
//
// Structure constants:
//   algebra dim=<d> field <p=N|q>
//   <d lines of d rows each: line (i,j) holds c(i,j,0..d-1)>
//   unit <d scalars>            (optional)
//   pair dim+=<m> dim-=<k> field <p=N|q>
//   [plus]   <m·k·m lines, line (i,j,k) holds c(+,i,j,k,0..m-1)>
//   [minus]  <k·m·k lines, likewise>

/// Field named by the first "field" line or header; throws kParse if there is none.
Field peek_field(std::string_view text);

template <FieldElement K>
std::string format_subspace(const Subspace<K>& s);
template <FieldElement K>
Subspace<K> parse_subspace(std::string_view text);
/// Basis rows on one line: "{1 0 2; 0 1 1}", "{}" for the zero subspace.
template <FieldElement K>
std::string format_subspace_line(const Subspace<K>& s);

template <FieldElement K>
std::string format_quintuple(const Quintuple<K>& q);
template <FieldElement K>
Quintuple<K> parse_quintuple(std::string_view text);

template <FieldElement K>
std::string format_relation(const Relation<K>& r);
template <FieldElement K>
Relation<K> parse_relation(std::string_view text);

template <FieldElement K>
std::string format_algebra(const Algebra<K>& a);
template <FieldElement K>
Algebra<K> parse_algebra(std::string_view text);

template <FieldElement K>
std::string format_pair(const PairModel<K>& p);
template <FieldElement K>
PairModel<K> parse_pair(std::string_view text);

}  // namespace asg
