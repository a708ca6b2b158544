#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <ncfkit/truth_table.hpp>

namespace ncfkit::test
{

inline truth_table random_table( unsigned n, std::mt19937_64& rng )
{
  std::vector<uint64_t> words( n <= 6 ? 1 : ( std::size_t( 1 ) << ( n - 6 ) ) );
  for ( auto& w : words )
  {
    w = rng();
  }
  return truth_table( n, std::move( words ) );
}

/* f restricted to x_var = value, recomputed point by point */
inline truth_table restrict_naive( truth_table const& f, unsigned var, bool value )
{
  truth_table g( f.num_vars() - 1 );
  std::vector<uint64_t> words( g.words().begin(), g.words().end() );
  uint64_t const low = ( uint64_t( 1 ) << ( var - 1 ) ) - 1;
  for ( uint64_t t = 0; t < g.num_bits(); ++t )
  {
    uint64_t const full = ( t & low ) | ( uint64_t( value ) << ( var - 1 ) ) | ( ( t & ~low ) << 1 );
    if ( f.get_bit( full ) )
    {
      words[t >> 6] |= uint64_t( 1 ) << ( t & 63 );
    }
  }
  return truth_table( g.num_vars(), std::move( words ) );
}

} // namespace ncfkit::test
