#include "shearbq/params.hpp"

namespace shearbq {

Params validate(const Params& p) {
    auto bad = [](const char* name) {
        throw NegativeCoefficient(std::string("negative coefficient: ") + name);
    };
    if (p.nu_x < 0.0) bad("nu_x");
    if (p.nu_y < 0.0) bad("nu_y");
    if (p.eta_x < 0.0) bad("eta_x");
    if (p.eta_y < 0.0) bad("eta_y");
    if (p.alpha < 0.0) bad("alpha");
    if (p.sobolev_n < 0) throw NegativeCoefficient("negative Sobolev index");
    return p;
}

}  // namespace shearbq
