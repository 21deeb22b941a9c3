#include "qlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qlab {

unsigned default_jobs()
{
    if (const char* env = std::getenv("QLAB_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace qlab
