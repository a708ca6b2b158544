/* Runs the ten acceptance checks at full size; one line per check, exit 1 on any failure */

#include <iostream>
#include <thread>

#include <ncfkit/acceptance.hpp>

int main()
{
  using namespace ncfkit::acceptance;
  auto const results = run( level::full, std::max( 1u, std::thread::hardware_concurrency() ),
                            []( check_result const& r ) { std::cout << format( r ) << std::endl; } );
  bool const ok = all_passed( results );
  std::cout << ( ok ? "all acceptance checks passed" : "acceptance FAILED" ) << std::endl;
  return ok ? 0 : 1;
}
