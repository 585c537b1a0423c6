#include "pzt/cli.hpp"

int main(int argc, char** argv)
{
    return pzt::run_cli(argc, argv);
}
