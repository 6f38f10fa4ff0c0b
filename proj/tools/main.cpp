#include "cli.hpp"

int main(int argc, char** argv)
{
    return kapteyn::cli::run(argc, argv);
}
