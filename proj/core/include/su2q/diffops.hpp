#pragma once

#include <Eigen/Core>

#include <string>

#include "su2q/fourier.hpp"
#include "su2q/group.hpp"

namespace su2q {

/// Left-invariant fields with exact multiplier symbols. The creation /
/// annihilation / neutral triple is the working basis; D1, D2, D3 are the
/// real su(2) fields, tied to it by the single conversion table
///   D1 = -i (d_- + d_+)/2,   D2 = (d_- - d_+)/2,   D3 = -i d_0,
/// which is the one place the sign and i-factor bookkeeping lives.
enum class Field {
    d1,
    d2,
    d3,
    partial_plus,
    partial_minus,
    partial_zero,
    laplacian,
};

Field field_from_name(const std::string& name);
std::string field_name(Field f);

/// Multiplier matrix sigma(l) of the field:
///   sigma_{d+}(l)_{mn} = -sqrt((l-n)(l+n+1)) delta_{m,n+1}
///   sigma_{d-}(l)_{mn} = -sqrt((l+n)(l-n+1)) delta_{m,n-1}
///   sigma_{d0}(l)      = diag(n),  sigma_L(l) = -l(l+1) I,
/// with D1, D2, D3 assembled from the conversion table.
Eigen::MatrixXcd multiplier(Field f, int two_l);

/// Applies the field on the coefficient side: result(l) = multiplier(l) * fhat(l)
/// (left-invariant operators act by left coefficient multiplication).
BandLimitedFunction apply_field(Field f, const BandLimitedFunction& fhat);

/// t^l(u)^* sigma_{d0}(l) t^l(u): the multiplier of i D_{u^{-1} Y3 u}.
/// Hermitian with spectrum exactly {-l, ..., l}.
Eigen::MatrixXcd rotated_multiplier(const GroupElement& u, int two_l);

}  // namespace su2q
