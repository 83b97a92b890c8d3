#include "z2e/gram.hpp"

#include <stdexcept>

#include "z2e/delprod.hpp"

namespace z2e {

const char* to_string(OmegaKind k) { return k == OmegaKind::TypeI ? "I" : "H"; }

namespace {

void check_square_symmetric(const Gf2Matrix& a) {
  if (a.rows() != a.cols() || !a.is_symmetric()) throw std::invalid_argument("matrix must be square and symmetric");
}

void check_spec(const OmegaSpec& spec) {
  if (spec.kind == OmegaKind::TypeH && spec.beta % 2 != 0) throw std::invalid_argument("TypeH needs even beta");
}

}  // namespace

Gf2Matrix omega_matrix(const OmegaSpec& spec) {
  check_spec(spec);
  return spec.kind == OmegaKind::TypeI ? Gf2Matrix::identity(spec.beta) : Gf2Matrix::hyperbolic(spec.beta / 2);
}

Gf2Matrix gram(const Gf2Matrix& y, const Gf2Matrix& omega) { return y.transpose() * (omega * y); }

bool realizable(const Gf2Matrix& a, const OmegaSpec& spec) {
  check_square_symmetric(a);
  check_spec(spec);
  const std::size_t r = rank(a);
  const bool alt = form_type(a) == FormType::Alternating;
  if (spec.kind == OmegaKind::TypeH) return alt && r <= spec.beta;
  if (!alt) return r <= spec.beta;
  return r == 0 || r + 1 <= spec.beta;
}

std::size_t min_beta(const Gf2Matrix& a, OmegaKind kind) {
  check_square_symmetric(a);
  const std::size_t r = rank(a);
  const bool alt = form_type(a) == FormType::Alternating;
  if (kind == OmegaKind::TypeH) {
    if (!alt) throw std::invalid_argument("TypeH needs an alternating matrix");
    return r;
  }
  if (!alt || r == 0) return r;
  return r + 1;
}

Gf2Matrix construct_Y(const Gf2Matrix& a, const OmegaSpec& spec) {
  if (!realizable(a, spec)) throw std::invalid_argument("matrix is not realizable for this Omega");
  const std::size_t n = a.rows();
  const auto nf = congruence_normal_form(a);
  const auto& d = nf.descriptor;

  // Z with Z^T Omega Z = diag(I_ones, H_pairs, 0); columns follow the blocks
  Gf2Matrix z(spec.beta, n);
  if (spec.kind == OmegaKind::TypeH) {
    for (std::size_t j = 0; j < d.hyperbolic_pairs; ++j) {
      z.set(2 * j, d.ones + 2 * j);
      z.set(2 * j + 1, d.ones + 2 * j + 1);
    }
  } else if (d.ones + d.hyperbolic_pairs > 0) {
    std::size_t next = 0;
    // odd vector carried along the hyperbolic chain
    Gf2Vector o = Gf2Vector::unit(spec.beta, next++);
    for (std::size_t j = 0; j < d.hyperbolic_pairs; ++j) {
      const auto f = Gf2Vector::unit(spec.beta, next++);
      const auto g = Gf2Vector::unit(spec.beta, next++);
      z.set_col(d.ones + 2 * j, o ^ f);
      z.set_col(d.ones + 2 * j + 1, o ^ g);
      o ^= f ^ g;
    }
    if (d.ones > 0) {
      z.set_col(0, o);
      for (std::size_t i = 1; i < d.ones; ++i) z.set_col(i, Gf2Vector::unit(spec.beta, next++));
    }
  }

  const auto s_inv = inverse(nf.transform);
  if (!s_inv) throw ConsistencyError("congruence transform is singular");
  const Gf2Matrix y = z * *s_inv;
  if (gram(y, omega_matrix(spec)) != a) throw ConsistencyError("constructed Y does not realize A");
  return y;
}

}  // namespace z2e
