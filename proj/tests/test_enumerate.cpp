#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>

#include <ncfkit/enumerate.hpp>
#include <ncfkit/structure_io.hpp>

using namespace ncfkit;

namespace
{
std::vector<std::string> first_structures( unsigned n, std::size_t count, std::optional<unsigned> r = std::nullopt )
{
  std::vector<std::string> out;
  structure_iterator it( n, r );
  while ( out.size() < count )
  {
    auto s = it.next();
    if ( !s )
      break;
    out.push_back( to_text( *s ) );
  }
  return out;
}

/* chi-square statistic of observed counts against expected probabilities */
double chi_square( std::vector<uint64_t> const& observed, std::vector<double> const& p, double draws )
{
  double chi2 = 0;
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    double const e = p[i] * draws;
    chi2 += ( observed[i] - e ) * ( observed[i] - e ) / e;
  }
  return chi2;
}
} // namespace

TEST_CASE( "emission order", "[enumerate]" )
{
  CHECK( first_structures( 2, 4 ) ==
         std::vector<std::string>{"0 ⊕ (x1)(x2)", "1 ⊕ (x1)(x2)", "0 ⊕ (x1')(x2)", "1 ⊕ (x1')(x2)"} );
  CHECK( first_structures( 3, 3, 2 ) ==
         std::vector<std::string>{"0 ⊕ (x1) [ (x2)(x3) ]", "1 ⊕ (x1) [ (x2)(x3) ]", "0 ⊕ (x1') [ (x2)(x3) ]"} );

  /* after all 16 sign/b settings of layer 1 = {x1}, colex moves to {x2} */
  auto const s = first_structures( 3, 17, 2 );
  CHECK( s.back() == "0 ⊕ (x2) [ (x1)(x3) ]" );
}

TEST_CASE( "emitted counts match the closed form", "[enumerate]" )
{
  for ( unsigned n = 2; n <= 6; ++n )
  {
    for ( unsigned r = 1; r < n; ++r )
    {
      uint64_t count = 0;
      enumerate_ncf( n, r, [&]( layer_structure const& s ) {
        REQUIRE( layer_number( s ) == r );
        ++count;
      } );
      REQUIRE( count == count_ncf( n, r ) );
    }
  }
  CHECK_THROWS_AS( structure_iterator( 1 ), error );
  CHECK_THROWS_AS( structure_iterator( 4, 0 ), error );
  CHECK_THROWS_AS( structure_iterator( 4, 4 ), error );
}

TEST_CASE( "enumerated tables are pairwise distinct", "[enumerate][property]" )
{
  for ( unsigned n = 2; n <= 5; ++n )
  {
    std::map<std::size_t, std::set<uint64_t>> by_layer;
    enumerate_ncf( n, std::nullopt, [&]( layer_structure const& s ) {
      REQUIRE( by_layer[layer_number( s )].insert( reconstruct( s ).words()[0] ).second );
    } );
    for ( unsigned r = 1; r < n; ++r )
    {
      REQUIRE( by_layer[r].size() == count_ncf( n, r ) );
    }
  }
}

TEST_CASE( "splitmix64 reference values", "[enumerate]" )
{
  splitmix64 rng( 1234567 );
  CHECK( rng() == 6457827717110365317ull );
  CHECK( rng() == 3203168211198807973ull );
  CHECK( rng() == 9817491932198370423ull );
}

TEST_CASE( "bounded uniform integers", "[enumerate]" )
{
  splitmix64 rng( 9 );
  std::vector<uint64_t> hits( 7, 0 );
  for ( int k = 0; k < 70000; ++k )
  {
    auto const v = uniform_below( rng, uint64_t( 7 ) );
    REQUIRE( v < 7 );
    ++hits[v];
  }
  CHECK( chi_square( hits, std::vector<double>( 7, 1.0 / 7 ), 70000 ) < 22.458 ); /* df 6, p = 0.001 */
  CHECK( uniform_below( rng, uint64_t( 1 ) ) == 0 );
  CHECK_THROWS_AS( uniform_below( rng, uint64_t( 0 ) ), error );

  big_int const bound = pow2( 100 ) + 3;
  for ( int k = 0; k < 100; ++k )
  {
    auto const v = uniform_below( rng, bound );
    REQUIRE( v >= 0 );
    REQUIRE( v < bound );
  }
}

TEST_CASE( "sampling is deterministic and valid", "[enumerate]" )
{
  CHECK( sample_ncf( 3, 99 ) == sample_ncf( 3, 99 ) );
  for ( unsigned n = 2; n <= 31; ++n )
  {
    auto const s = sample_ncf( n, n );
    REQUIRE_NOTHROW( validate( s ) );
    REQUIRE( s.n == n );
  }
  CHECK_THROWS_AS( sample_ncf( 1, 0 ), error );
  CHECK_THROWS_AS( sample_ncf( 32, 0 ), error );
}

TEST_CASE( "n = 2: every structure about 1/8 of the draws", "[enumerate][statistical]" )
{
  unsigned const draws = 100000;
  std::map<std::string, uint64_t> counts;
  splitmix64 seeds( 2024 );
  for ( unsigned k = 0; k < draws; ++k )
  {
    ++counts[to_text( sample_ncf( 2, seeds() ) )];
  }
  REQUIRE( counts.size() == 8 );
  double const p = 1.0 / 8;
  double const sigma = std::sqrt( draws * p * ( 1 - p ) );
  std::vector<uint64_t> observed;
  for ( auto const& [text, c] : counts )
  {
    CHECK( std::abs( double( c ) - draws * p ) <= 3 * sigma );
    observed.push_back( c );
  }
  CHECK( chi_square( observed, std::vector<double>( 8, p ), draws ) < 24.322 ); /* df 7, p = 0.001 */
}

TEST_CASE( "n = 5: layer numbers follow the exact counts", "[enumerate][statistical]" )
{
  unsigned const draws = 100000;
  std::vector<uint64_t> observed( 4, 0 );
  splitmix64 seeds( 5 );
  for ( unsigned k = 0; k < draws; ++k )
  {
    ++observed[layer_number( sample_ncf( 5, seeds() ) ) - 1];
  }
  std::vector<double> p;
  for ( unsigned r = 1; r <= 4; ++r )
  {
    p.push_back( static_cast<double>( count_ncf( 5, r ) ) / 10624.0 );
  }
  CHECK( chi_square( observed, p, draws ) < 16.266 ); /* df 3, p = 0.001 */
}

TEST_CASE( "n = 4: every one of the 736 functions is drawn", "[enumerate][statistical]" )
{
  std::set<std::string> seen;
  for ( uint64_t seed = 0; seed < 20000; ++seed )
  {
    seen.insert( to_text( sample_ncf( 4, seed ) ) );
  }
  CHECK( seen.size() == 736 );
}
