#include "suites_common.hpp"

namespace cychains {

void register_all_suites() {
    static bool done = false;
    if (done) return;
    done = true;
    register_cartan_suite();
    register_hochschild_suite();
    register_extended_suite();
    register_koszul_suite();
    register_uactions_suite();
    register_linfty_suite();
}

} // namespace cychains
