#include "slicecert/certificate_io.hpp"

int main(int argc, char** argv) { return slicecert::cli_dispatch(argc, argv); }
