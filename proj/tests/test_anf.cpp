#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include <ncfkit/anf.hpp>

#include "helpers.hpp"

using namespace ncfkit;

namespace
{
std::string const y_text = "x1*x2*x3*x4*x5 + x1*x2*x3*x4 + x1*x2*x4*x5 + x1*x2*x4 + x1*x3*x4 + x1*x3 + x1*x4 + x1";
std::string const n_text = "x1*x2*x3 + x2*x3*x4 + x1*x3 + x3*x4 + 1";

/* sum over monomials m of prod_{i in m} x_i, evaluated point by point */
truth_table table_naive( anf_poly const& p )
{
  truth_table f( p.num_vars() );
  std::vector<uint64_t> words( f.words().begin(), f.words().end() );
  for ( uint64_t t = 0; t < f.num_bits(); ++t )
  {
    bool v = false;
    for ( auto m : p.monomials() )
    {
      v ^= ( t & m ) == m;
    }
    if ( v )
      words[t >> 6] |= uint64_t( 1 ) << ( t & 63 );
  }
  return truth_table( p.num_vars(), std::move( words ) );
}
} // namespace

TEST_CASE( "worked-example polynomials", "[anf]" )
{
  auto const y = parse_anf( y_text );
  CHECK( y.num_vars() == 5 );
  CHECK( degree( y ) == 5 );
  CHECK( to_binary( truth_table_from_anf( y ) ) == "01010000000100000101000000000000" );
  CHECK( to_string( y ) == y_text );

  auto const n = parse_anf( n_text );
  auto const f = truth_table_from_anf( n );
  CHECK( to_binary( f ) == "1111101111110111" );
  CHECK( hamming_weight( f ) == 14 );
  CHECK( to_string( n ) == n_text );
}

TEST_CASE( "parser accepts constants and cancels repeated terms", "[anf]" )
{
  CHECK( parse_anf( "0", 3 ).is_zero() );
  CHECK( degree( parse_anf( "0", 3 ) ) == -1 );
  CHECK( to_string( parse_anf( "1 + 1 + x2", 2 ) ) == "x2" );
  CHECK( parse_anf( "x1 + x1", 2 ).is_zero() );
  CHECK( to_string( parse_anf( "x2*x1*x2" ) ) == "x1*x2" );
  CHECK( to_string( parse_anf( " X3 +x1* x2 + 1 " ) ) == "x1*x2 + x3 + 1" );
  CHECK( parse_anf( "x1", 4 ).num_vars() == 4 );
  CHECK( truth_table_from_anf( parse_anf( "1", 2 ) ).is_const1() );
}

TEST_CASE( "parse errors carry the position", "[anf]" )
{
  auto position_of = []( std::string const& text ) -> long {
    try
    {
      parse_anf( text );
    }
    catch ( parse_error const& e )
    {
      return static_cast<long>( e.position() );
    }
    return -1;
  };
  CHECK( position_of( "x1 * * x2" ) == 5 );
  CHECK( position_of( "x1 + " ) == 5 );
  CHECK( position_of( "x1 x2" ) == 3 );
  CHECK( position_of( "x0" ) == 0 );
  CHECK( position_of( "x1 + x25" ) == 5 );
  CHECK( position_of( "" ) == 0 );
  CHECK( position_of( "x1 + y" ) == 5 );
  CHECK_THROWS_AS( parse_anf( "x1 + x4", 3 ), parse_error );
  CHECK_THROWS_AS( parse_anf( "x1", max_table_vars + 1 ), error );
}

TEST_CASE( "ANF and truth table round trips", "[anf]" )
{
  std::mt19937_64 rng( 11 );
  for ( unsigned n = 0; n <= 12; ++n )
  {
    int const samples = n <= 8 ? 1000 : 500;
    for ( int k = 0; k < samples; ++k )
    {
      auto const f = test::random_table( n, rng );
      auto const p = anf_from_truth_table( f );
      REQUIRE( truth_table_from_anf( p ) == f );
      if ( n <= 8 )
      {
        REQUIRE( table_naive( p ) == f );
        REQUIRE( parse_anf( to_string( p ), n ) == p );
      }
    }
  }
}

TEST_CASE( "the Moebius transform is an involution", "[anf]" )
{
  std::mt19937_64 rng( 12 );
  for ( unsigned n = 0; n <= 10; ++n )
  {
    auto const f = test::random_table( n, rng );
    std::vector<uint64_t> words( f.words().begin(), f.words().end() );
    REQUIRE( detail::moebius( detail::moebius( words, n ), n ) == words );
  }
}
