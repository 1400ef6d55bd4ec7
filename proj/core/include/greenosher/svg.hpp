#pragma once

#include <ostream>

#include "greenosher/support_body.hpp"

namespace greenosher {

/// Both boundaries (512 samples each), origin marker, scaled copies
/// r dL and R dL dashed; optional rho(theta) polar inset.
void write_plot_svg(std::ostream& out, const SupportBody& k,
                    const SupportBody& l, double r, double R,
                    bool rho_inset = false);

}  // namespace greenosher
