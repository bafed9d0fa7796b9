#pragma once

#include "mdlmon/btl.hpp"
#include "mdlmon/mdl.hpp"

namespace mdlmon {

/// Inductive translation of a temporal formula into monadic difference logic
/// with starting point x. The result's only free variable is x; quantifier
/// variables are drawn from the supply left to right, so output is
/// deterministic.
MdlFormula translate(const BtlFormula& psi, VarId x, VarSupply& supply);

/// translate with x = z and a fresh supply starting at v1.
MdlFormula translate_z(const BtlFormula& psi);

/// Positive form of translate_z(psi).
MdlFormula translate_positive(const BtlFormula& psi);

}  // namespace mdlmon
