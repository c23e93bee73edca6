#include "cca/cli.hpp"

int main(int argc, char** argv) {
    return cca::cli::run(argc, argv);
}
