#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degpow/exact_int.hpp"
#include "degpow/finite_field.hpp"
#include "degpow/graph.hpp"

namespace degpow {

Graph star(int n);          // S_n, centre 0
Graph cycle_graph(int n);   // C_n, 0-1-...-(n-1)-0

/// Star with centre 0 plus the matching (1,2),(3,4),...; for even n the last
/// leaf n-1 stays unmatched.
Graph friendship(int n);

/// K_{t,n-t} with parts {0..t-1} and {t..n-1}.
Graph complete_bipartite(int t, int n);

/// Hub 0 joined to the rim cycle 1-2-...-(n-1)-1. Requires n >= 4.
Graph wheel(int n);

/// Clique on {0..k-1}, each clique vertex joined to all of {k..n-1}.
Graph split_graph(int n, int k);

/// Point of PG(2, q): first non-zero coordinate is 1.
struct ProjectivePoint {
  std::array<int, 3> coords;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// The q^2+q+1 normalized points, ordered (0,0,1), (0,1,*), (1,*,*).
std::vector<ProjectivePoint> projective_points(const FiniteField& field);

/// Orthogonal polarity graph: points adjacent iff their dot product vanishes.
/// q must be a prime power with q^2+q+1 <= 64.
Graph polarity_graph(int q);

enum class FamilyKind { star, cycle, friendship, complete_bipartite, wheel, split, polarity };

/// A named family; `param` is t for complete_bipartite and k for split.
struct FamilyId {
  FamilyKind kind;
  int param = 0;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string to_string(const FamilyId& f);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Builds the family member on n vertices (q for polarity).
Graph construct(const FamilyId& f, int n_or_q);

/// e_p of the family member from its degree sequence shape, without
/// constructing it. Valid for any parameter the constructor accepts, and
/// for polarity any prime power q (no 64-vertex limit).
ExactInt ep_closed_form(const FamilyId& f, int n_or_q, int p);

}  // namespace degpow
