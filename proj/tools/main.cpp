#include <dltzeta/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dltz::run_cli(args);
}
