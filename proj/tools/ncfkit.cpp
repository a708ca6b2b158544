#include "commands.hpp"

int main( int argc, char** argv )
{
  return ncfkit::cli::run( argc, argv );
}
