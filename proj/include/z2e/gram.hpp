#pragma once

// Gram realizations A = Y^T Omega Y over GF(2) with Omega = I_beta or H_{beta/2}.

#include <cstddef>

#include "z2e/gf2.hpp"

namespace z2e {

enum class OmegaKind { TypeI, TypeH };
const char* to_string(OmegaKind k);

struct OmegaSpec {
  OmegaKind kind = OmegaKind::TypeI;
  std::size_t beta = 0;
  friend bool operator==(const OmegaSpec&, const OmegaSpec&) = default;
};

/// I_beta or H_{beta/2}. Throws std::invalid_argument for TypeH with odd beta.
Gf2Matrix omega_matrix(const OmegaSpec& spec);

bool realizable(const Gf2Matrix& a, const OmegaSpec& spec);

/// beta x n matrix Y with Y^T Omega Y = A, checked before return. Throws
/// std::invalid_argument when A is not realizable.
Gf2Matrix construct_Y(const Gf2Matrix& a, const OmegaSpec& spec);

/// Smallest beta admitting a realization (even for TypeH). Throws
/// std::invalid_argument for TypeH with a non-alternating A.
std::size_t min_beta(const Gf2Matrix& a, OmegaKind kind);

/// Y^T Omega Y.
Gf2Matrix gram(const Gf2Matrix& y, const Gf2Matrix& omega);

}  // namespace z2e
