#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "cbperm/lattice_path.hpp"
#include "cbperm/permutation.hpp"

namespace cbperm {

/// Selects Av(3214, 3241, 4213, 4231) or Av(3124, 3142, 4123, 4132).
enum class ClassTag { T1, T2 };

std::string_view to_string(ClassTag tag);
/// Accepts "t1"/"t2" in either case.
ClassTag parse_class_tag(std::string_view text);
PatternBasis basis_of(ClassTag tag);

/// The Dyck prefix of length 2n attached to sigma in S_{n+1}(T1) or S_{n+1}(T2).
/// Throws std::invalid_argument when sigma lies in neither class.
LatticePath phi(const Permutation& sigma);

/// phi without the membership check, for callers that already know sigma is
/// a class member. The last entry of sigma never contributes a step.
LatticePath phi_unchecked(const Permutation& sigma);

/// Inverse of phi restricted to Av(T1): a permutation of length n + 1 for a
/// prefix of length 2n.
Permutation phi1_inverse(const LatticePath& path);
/// Inverse of phi restricted to Av(T2).
Permutation phi2_inverse(const LatticePath& path);
Permutation phi_inverse(const LatticePath& path, ClassTag tag);

/// Deletes the trailing maximum. Throws unless sigma(n) = n.
Permutation psi_delete_last(const Permutation& sigma);

struct JuxtapositionSplit {
  Permutation tau;  // sigma' followed by l + 1
  Permutation rho;  // renormalized sigma''
};

/// sigma = sigma' sigma'' with sigma' a permutation of {1..l}, l < n maximal.
/// Empty for connected sigma. Throws when sigma is not in the tagged class.
std::optional<JuxtapositionSplit> juxtaposition_split(const Permutation& sigma, ClassTag tag);

/// For a 321-avoider: phi(sigma) followed by UD when it is a Dyck path, by DD
/// when it ends at height 2. Always a Dyck path of semilength n.
LatticePath krattenthaler_extend(const Permutation& sigma);

}  // namespace cbperm
