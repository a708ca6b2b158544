#include <catch_amalgamated.hpp>

#include <numeric>

#include <ncfkit/enumerate.hpp>
#include <ncfkit/formulas.hpp>

using namespace ncfkit;

namespace
{
composition comp( std::vector<unsigned> parts )
{
  return composition( std::move( parts ) );
}

std::vector<std::string> texts( std::vector<composition> const& cs )
{
  std::vector<std::string> out;
  for ( auto const& c : cs )
    out.push_back( to_string( c ) );
  return out;
}
} // namespace

TEST_CASE( "compositions", "[formulas]" )
{
  CHECK( texts( compositions( 2 ) ) == std::vector<std::string>{"(2)"} );
  CHECK( texts( compositions( 4 ) ) == std::vector<std::string>{"(4)", "(1,3)", "(2,2)", "(1,1,2)"} );
  for ( unsigned n = 2; n <= 16; ++n )
  {
    REQUIRE( compositions( n ).size() == ( std::size_t( 1 ) << ( n - 2 ) ) );
  }
  CHECK( compositions( 6, 3 ).size() == 6 );
  CHECK_THROWS_AS( compositions( 1 ), error );
  CHECK_THROWS_AS( comp( {2, 1} ), error );
  CHECK_THROWS_AS( comp( {0, 2} ), error );
  CHECK( to_string( staircase( 5 ) ) == "(1,1,1,2)" );
}

TEST_CASE( "NCF counts", "[formulas]" )
{
  CHECK( count_ncf( 2, 1 ) == 8 );
  CHECK( count_ncf( 3, 1 ) == 16 );
  CHECK( count_ncf( 3, 2 ) == 48 );
  CHECK( count_ncf( 4, 1 ) == 32 );
  CHECK( count_ncf( 4, 2 ) == 320 );
  CHECK( count_ncf( 4, 3 ) == 384 );
  std::vector<unsigned> const layers5{64, 1600, 5120, 3840};
  for ( unsigned r = 1; r <= 4; ++r )
    CHECK( count_ncf( 5, r ) == layers5[r - 1] );
  std::vector<unsigned> const layers6{128, 7168, 46080, 84480, 46080};
  for ( unsigned r = 1; r <= 5; ++r )
    CHECK( count_ncf( 6, r ) == layers6[r - 1] );

  std::vector<unsigned long> const totals{8, 64, 736, 10624, 183936, 3715072};
  for ( unsigned n = 2; n <= 7; ++n )
  {
    CHECK( count_ncf_total( n ) == totals[n - 2] );
  }
  CHECK( count_ncf_total( 20 ) == big_int( "1723137628271418499043164160" ) );
  CHECK( count_ncf_total( 30 ) == big_int( "7514511795369967055872595630267172787725533184" ) );
  for ( unsigned n = 2; n <= 30; ++n )
  {
    REQUIRE( count_recursive( n ) == count_ncf_total( n ) );
  }
  for ( unsigned n = 2; n <= 60; ++n )
  {
    auto const layers = count_ncf_by_layer( n );
    REQUIRE( layers.size() == n - 1 );
    REQUIRE( std::accumulate( layers.begin(), layers.end(), big_int( 0 ) ) == count_ncf_total( n ) );
    REQUIRE( layers[( n - 1 ) / 2] == count_ncf( n, ( n - 1 ) / 2 + 1 ) );
  }
  CHECK_THROWS_AS( count_ncf( 4, 4 ), error );
  CHECK_THROWS_AS( count_ncf_total( 1 ), error );
}

TEST_CASE( "counts are 2^(n+1) times a sum of multinomials", "[formulas][property]" )
{
  for ( unsigned n = 2; n <= 14; ++n )
  {
    for ( unsigned r = 1; r < n; ++r )
    {
      big_int sum = 0;
      for_each_composition( n, [&]( composition const& c ) { sum += multinomial( c ); }, r );
      REQUIRE( count_ncf( n, r ) == pow2( n + 1 ) * sum );
    }
  }
}

TEST_CASE( "weights", "[formulas]" )
{
  CHECK( weight_from_composition( comp( {2, 1, 2} ), false ) == 5 );
  CHECK( weight_from_composition( comp( {1, 3} ), true ) == 9 );
  CHECK( weight_from_composition( comp( {2} ), false ) == 1 );
  for ( unsigned n = 2; n <= 14; ++n )
  {
    for_each_composition( n, [&]( composition const& c ) {
      REQUIRE( weight_from_composition( c, false ) + weight_from_composition( c, true ) == pow2( n ) );
    } );
  }
}

TEST_CASE( "activities and average sensitivity", "[formulas]" )
{
  auto const c = comp( {2, 1, 2} );
  CHECK( activity_of_layer( c, 1 ) == dyadic( 5, 4 ) );
  CHECK( activity_of_layer( c, 2 ) == dyadic( 3, 4 ) );
  CHECK( activity_of_layer( c, 3 ) == dyadic( 1, 4 ) );
  CHECK( average_sensitivity( c ) == dyadic( 15, 4 ) );
  CHECK( average_sensitivity( comp( {1, 2, 1, 2} ) ) == dyadic( 21, 4 ) );
  CHECK( average_sensitivity( comp( {1, 2} ) ) == dyadic( 5, 2 ) );
  CHECK( average_sensitivity( comp( {3} ) ) == dyadic( 3, 2 ) );
  CHECK_THROWS_AS( activity_of_layer( c, 0 ), error );
  CHECK_THROWS_AS( activity_of_layer( c, 4 ), error );
}

TEST_CASE( "activity monotonicity and sensitivity bounds", "[formulas][property]" )
{
  for ( unsigned n = 3; n <= 14; ++n )
  {
    auto const [lower, upper] = sensitivity_bounds( n );
    CHECK( lower == dyadic( n, n - 1 ) );
    for_each_composition( n, [&]( composition const& c ) {
      dyadic sum;
      for ( std::size_t l = 1; l <= c.r(); ++l )
      {
        if ( l > 1 )
          REQUIRE( activity_of_layer( c, l ) < activity_of_layer( c, l - 1 ) );
        sum += dyadic( c[l - 1] ) * activity_of_layer( c, l );
      }
      auto const s = average_sensitivity( c );
      REQUIRE( s == sum );
      REQUIRE( dyadic( 0 ) < s );
      REQUIRE( s < dyadic( 2 ) );
      REQUIRE( lower <= s );
      REQUIRE( s < upper );
      REQUIRE( ( s == lower ) == ( c.r() == 1 ) );
    } );
  }
  CHECK_THROWS_AS( sensitivity_bounds( 2 ), error );
}

TEST_CASE( "closed forms", "[formulas]" )
{
  CHECK( lemma42_value( 3, 1 ) == dyadic( 5, 2 ) );
  CHECK( lemma42_value( 6, 1 ) == dyadic( 21, 4 ) );
  CHECK( lemma42_value( 7, 1 ) == dyadic( 85, 6 ) );
  CHECK( to_string( lemma42_composition( 8, 3 ) ) == "(1,2,2,3)" );
  CHECK( to_string( lemma42_composition( 5, 2 ) ) == "(1,1,3)" );
  for ( unsigned n = 3; n <= 40; ++n )
  {
    REQUIRE( lemma42_value( n, 1 ) == average_sensitivity( lemma42_composition( n, 1 ) ) );
    if ( n >= 4 )
      REQUIRE( lemma42_value( n, 2 ) == average_sensitivity( lemma42_composition( n, 2 ) ) );
    if ( n >= 6 && n % 2 == 0 )
    {
      REQUIRE( lemma42_value( n, 3 ) == average_sensitivity( lemma42_composition( n, 3 ) ) );
      REQUIRE( lemma42_value( n, 3 ) == lemma42_value( n, 1 ) );
    }
  }
  CHECK_THROWS_AS( lemma42_value( 7, 3 ), error );
  CHECK_THROWS_AS( lemma42_value( 3, 2 ), error );
  CHECK_THROWS_AS( lemma42_value( 5, 4 ), error );
}

TEST_CASE( "conjecture scan", "[formulas]" )
{
  auto const r3 = conjecture_scan( 3 );
  CHECK( r3.max == dyadic( 5, 2 ) );
  CHECK( texts( r3.argmax ) == std::vector<std::string>{"(1,2)"} );
  CHECK( r3.consistent_with_conjecture() );

  auto const r6 = conjecture_scan( 6 );
  CHECK( r6.max == dyadic( 21, 4 ) );
  CHECK( texts( r6.argmax ) == std::vector<std::string>{"(1,2,3)", "(1,1,1,3)", "(1,2,1,2)", "(1,1,1,1,2)"} );
  CHECK( r6.evaluated == 16 );

  auto const r7 = conjecture_scan( 7, {scan_mode::exhaustive, 3} );
  CHECK( r7.max == dyadic( 85, 6 ) );
  CHECK( texts( r7.argmax ) == std::vector<std::string>{"(1,2,2,2)", "(1,1,1,2,2)", "(1,2,1,1,2)", "(1,1,1,1,1,2)"} );

  CHECK_THROWS_AS( conjecture_scan( max_scan_n + 1 ), error );
}

TEST_CASE( "scan maxima agree with the exact dyadic evaluation", "[formulas][property]" )
{
  for ( unsigned n = 3; n <= 12; ++n )
  {
    dyadic best;
    std::vector<composition> argmax;
    for_each_composition( n, [&]( composition const& c ) {
      auto const s = average_sensitivity( c );
      if ( argmax.empty() || best < s )
      {
        best = s;
        argmax = {c};
      }
      else if ( s == best )
      {
        argmax.push_back( c );
      }
    } );
    std::sort( argmax.begin(), argmax.end() );
    auto const r = conjecture_scan( n );
    REQUIRE( r.max == best );
    REQUIRE( r.argmax == argmax );
  }
}

TEST_CASE( "pruned and exhaustive scans agree", "[formulas][property]" )
{
  for ( unsigned n = 3; n <= 20; ++n )
  {
    auto const a = conjecture_scan( n, {scan_mode::exhaustive, 2} );
    auto const b = conjecture_scan( n, {scan_mode::pruned, 2} );
    REQUIRE( a.max == b.max );
    REQUIRE( a.argmax == b.argmax );
    REQUIRE( b.evaluated <= a.evaluated );
  }
}
