#include <catch_amalgamated.hpp>

#include <random>

#include <ncfkit/canalyze.hpp>
#include <ncfkit/enumerate.hpp>
#include <ncfkit/oracle.hpp>

#include "helpers.hpp"

using namespace ncfkit;

TEST_CASE( "brute-force quantities of Y", "[oracle]" )
{
  auto const y = from_binary( "01010000000100000101000000000000" );
  CHECK( oracle::weight_bruteforce( y ) == 5 );
  std::vector<dyadic> const expected{dyadic( 5, 4 ), dyadic( 1, 4 ), dyadic( 5, 4 ), dyadic( 3, 4 ), dyadic( 1, 4 )};
  CHECK( oracle::activity_vector( y ) == expected );
  CHECK( oracle::sensitivity_profile_of( y ).average == dyadic( 15, 4 ) );
  CHECK_THROWS_AS( oracle::activity_bruteforce( y, 6 ), error );
}

TEST_CASE( "definition-based NCF test", "[oracle]" )
{
  CHECK( oracle::is_ncf_by_definition( from_binary( "0001" ) ) );
  CHECK_FALSE( oracle::is_ncf_by_definition( from_binary( "0110" ) ) );
  CHECK_FALSE( oracle::is_ncf_by_definition( from_binary( "1111101111110111" ) ) );
  CHECK( oracle::is_ncf_by_definition( from_binary( "01010000000100000101000000000000" ) ) );
  CHECK_THROWS_AS( oracle::is_ncf_by_definition( truth_table( 9 ) ), error );
}

TEST_CASE( "census of all small truth tables", "[oracle]" )
{
  auto const c2 = oracle::classify_all( 2, true );
  CHECK( c2.ncf_total() == 8 );
  CHECK( c2.disagreements == 0 );

  auto const c3 = oracle::classify_all( 3, true, 3 );
  CHECK( c3.by_layer_number == std::map<std::size_t, uint64_t>{{1, 16}, {2, 48}} );
  CHECK( c3.not_ncf == 256 - 64 );
  CHECK( oracle::to_csv( c3 ) == "layer_number,count\n1,16\n2,48\nnot_ncf,192\n" );

  auto const c1 = oracle::classify_all( 1 );
  CHECK( c1.degenerate == 2 );
  CHECK( c1.not_ncf == 2 );

  auto const c4 = oracle::classify_all( 4, true, 2 );
  CHECK( c4.by_layer_number == std::map<std::size_t, uint64_t>{{1, 32}, {2, 320}, {3, 384}} );
  CHECK( c4.disagreements == 0 );
  CHECK_THROWS_AS( oracle::classify_all( 5 ), error );
}

TEST_CASE( "decomposer and definition agree on random n = 5, 6 functions", "[oracle][property]" )
{
  std::mt19937_64 rng( 31 );
  for ( unsigned n : {5u, 6u} )
  {
    for ( int k = 0; k < 10000; ++k )
    {
      auto const f = test::random_table( n, rng );
      REQUIRE( is_ncf( ncf_decompose( f ) ) == oracle::is_ncf_by_definition( f ) );
    }
    /* random tables are almost never NCFs, so also feed sampled ones */
    for ( uint64_t seed = 0; seed < 500; ++seed )
    {
      auto const f = reconstruct( sample_ncf( n, seed ) );
      REQUIRE( oracle::is_ncf_by_definition( f ) );
    }
  }
}

TEST_CASE( "average sensitivity equals the sum of activities", "[oracle][property]" )
{
  std::mt19937_64 rng( 32 );
  for ( unsigned n = 1; n <= 10; ++n )
  {
    for ( int k = 0; k < 20; ++k )
    {
      auto const f = test::random_table( n, rng );
      dyadic sum;
      for ( auto const& a : oracle::activity_vector( f ) )
        sum += a;
      REQUIRE( oracle::sensitivity_profile_of( f ).average == sum );
    }
  }
}

TEST_CASE( "canalyzing functions are unbalanced unless they are literals", "[oracle][property]" )
{
  /* x_i = a forcing the value b leaves a balanced f only when the other
     half is constantly not b, that is f = x_i + c */
  for ( unsigned n = 1; n <= 4; ++n )
  {
    uint64_t balanced = 0;
    for ( uint64_t bits = 0; bits < ( uint64_t( 1 ) << ( 1u << n ) ); ++bits )
    {
      truth_table const f( n, {bits} );
      if ( !canalyzing_triples( f ).empty() && oracle::weight_bruteforce( f ) == ( uint64_t( 1 ) << ( n - 1 ) ) )
      {
        REQUIRE( essential_variables( f ).size() == 1 );
        ++balanced;
      }
    }
    REQUIRE( balanced == 2 * n );
  }
}
