#pragma once

#include "cychains/generators.hpp"
#include "cychains/suite.hpp"

namespace cychains {

void register_cartan_suite();
void register_hochschild_suite();
void register_extended_suite();
void register_koszul_suite();
void register_uactions_suite();
void register_linfty_suite();

inline int sign_of(int deg) { return ((deg % 2) + 2) % 2 == 0 ? 1 : -1; }

} // namespace cychains
