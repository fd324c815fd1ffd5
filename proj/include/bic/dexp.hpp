#pragma once

#include "bic/channel.hpp"
#include "bic/linsys.hpp"

namespace bic::dm {

enum class DexpKind { L3, L4, L5, L6 };

DexpKind dexp_kind_from_name(const std::string& name);

// Closed-form dominant extreme points of the four superposition regions,
// duplicates merged at 1e-9. The partial-order precondition of the cited
// formula set is assumed, not re-verified here.
std::vector<poly::RatePoint> dexp_formula(DexpKind kind, const DmBicChannel& ch,
                                          const SimpleInput& in);
std::vector<poly::RatePoint> dexp_formula(DexpKind kind, const JointPmf& joint);

}  // namespace bic::dm
