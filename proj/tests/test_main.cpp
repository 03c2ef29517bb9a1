#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "test_support.hpp"

namespace testsupport {
unsigned seed_override = 0;
bool seed_overridden = false;
} // namespace testsupport

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0) {
            testsupport::seed_override =
                static_cast<unsigned>(std::strtoul(arg.c_str() + 7, nullptr, 10));
            testsupport::seed_overridden = true;
        }
    }
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    return context.run();
}
