#include "qcap/kernels/enumeration_kernel.hpp"

namespace qcap::kernels {

bool avx2_available() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace qcap::kernels
