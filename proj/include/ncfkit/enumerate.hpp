/*!
  \file enumerate.hpp
  \brief Exhaustive generation and uniform sampling of nested canalyzing functions

  Layer structures are in bijection with NCFs, so enumerating structures
  enumerates functions. Emission order: compositions (by number of parts,
  then lexicographically), then the variable subset of each layer in colex
  order (first layer outermost), then the sign bits as a binary counter,
  then b.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "canalyze.hpp"
#include "formulas.hpp"

namespace ncfkit
{

namespace detail
{

inline void compositions_with_parts( unsigned n, unsigned r, std::vector<unsigned>& prefix,
                                     std::function<void( composition const& )> const& fn )
{
  if ( r == 1 )
  {
    if ( n >= 2 )
    {
      prefix.push_back( n );
      fn( composition( prefix ) );
      prefix.pop_back();
    }
    return;
  }
  /* the remaining r-1 parts need at least r variables (r-2 ones and a final 2) */
  for ( unsigned k = 1; k + r <= n; ++k )
  {
    prefix.push_back( k );
    compositions_with_parts( n - k, r - 1, prefix, fn );
    prefix.pop_back();
  }
}

} // namespace detail

/*! \brief Calls fn on every composition of n (last part >= 2), optionally only those with r parts */
inline void for_each_composition( unsigned n, std::function<void( composition const& )> const& fn,
                                  std::optional<unsigned> r = std::nullopt )
{
  if ( n < 2 )
  {
    throw error( "compositions need n >= 2" );
  }
  std::vector<unsigned> prefix;
  for ( unsigned parts = 1; parts <= n - 1; ++parts )
  {
    if ( !r || *r == parts )
    {
      detail::compositions_with_parts( n, parts, prefix, fn );
    }
  }
}

inline std::vector<composition> compositions( unsigned n, std::optional<unsigned> r = std::nullopt )
{
  std::vector<composition> out;
  for_each_composition( n, [&]( composition const& c ) { out.push_back( c ); }, r );
  return out;
}

/*! \brief Single-pass cursor over every layer structure of n variables

  Each valid structure is emitted exactly once; the number emitted equals
  count_ncf(n, r) (or count_ncf_total(n) without r).
*/
class structure_iterator
{
public:
  explicit structure_iterator( unsigned n, std::optional<unsigned> r = std::nullopt ) : n_( n )
  {
    if ( n < 2 || n > 31 )
    {
      throw error( "structure enumeration needs 2 <= n <= 31" );
    }
    if ( r && ( *r < 1 || *r > n - 1 ) )
    {
      throw error( "layer number r must satisfy 1 <= r <= n-1" );
    }
    comps_ = compositions( n, r );
    start_composition();
  }

  std::optional<layer_structure> next()
  {
    if ( ci_ >= comps_.size() )
    {
      return std::nullopt;
    }
    auto s = current();
    advance();
    return s;
  }

private:
  layer_structure current() const
  {
    auto const& c = comps_[ci_];
    layer_structure s{n_, {}, b_, false};
    uint32_t available = ( n_ == 32 ? ~0u : ( ( 1u << n_ ) - 1u ) );
    unsigned sign_bit = 0;
    for ( std::size_t l = 0; l < c.r(); ++l )
    {
      uint32_t const chosen = deposit( subsets_[l], available );
      std::vector<factor> factors;
      for ( uint32_t w = chosen; w; w &= w - 1 )
      {
        factors.push_back( {static_cast<unsigned>( std::countr_zero( w ) ) + 1, ( ( signs_ >> sign_bit++ ) & 1u ) != 0} );
      }
      s.layers.emplace_back( std::move( factors ) );
      available &= ~chosen;
    }
    return s;
  }

  /* places the bits of `pattern` onto the set bits of `mask`, lowest first */
  static uint32_t deposit( uint32_t pattern, uint32_t mask )
  {
    uint32_t out = 0;
    for ( uint32_t bit = 1; mask; bit <<= 1 )
    {
      uint32_t const low = mask & ( ~mask + 1u );
      if ( pattern & bit )
      {
        out |= low;
      }
      mask &= mask - 1;
    }
    return out;
  }

  /* next k-subset of an m-set in colex order (Gosper), false on wrap-around */
  static bool next_subset( uint32_t& s, unsigned m )
  {
    uint32_t const low = s & ( ~s + 1u );
    uint64_t const ripple = uint64_t( s ) + low;
    uint64_t const next = ripple | ( ( ( uint64_t( s ) ^ ripple ) >> 2 ) / low );
    if ( next >> m )
    {
      return false;
    }
    s = static_cast<uint32_t>( next );
    return true;
  }

  void start_composition()
  {
    if ( ci_ >= comps_.size() )
    {
      return;
    }
    auto const& c = comps_[ci_];
    subsets_.assign( c.r(), 0u );
    reset_layers_from( 0 );
    signs_ = 0;
    b_ = false;
  }

  void reset_layers_from( std::size_t l0 )
  {
    auto const& c = comps_[ci_];
    for ( std::size_t l = l0; l < c.r(); ++l )
    {
      subsets_[l] = ( c[l] == 32 ? ~0u : ( ( 1u << c[l] ) - 1u ) );
    }
  }

  void advance()
  {
    if ( !b_ )
    {
      b_ = true;
      return;
    }
    b_ = false;
    if ( ++signs_ < ( uint64_t( 1 ) << n_ ) )
    {
      return;
    }
    signs_ = 0;
    auto const& c = comps_[ci_];
    /* the last layer takes all remaining variables, so only layers 1..r-1 move */
    for ( std::size_t l = c.r() - 1; l-- > 0; )
    {
      unsigned universe = n_;
      for ( std::size_t i = 0; i < l; ++i )
      {
        universe -= c[i];
      }
      if ( next_subset( subsets_[l], universe ) )
      {
        reset_layers_from( l + 1 );
        return;
      }
    }
    ++ci_;
    start_composition();
  }

  unsigned n_;
  std::vector<composition> comps_;
  std::size_t ci_ = 0;
  /* per layer: chosen positions among the variables not used by earlier layers */
  std::vector<uint32_t> subsets_;
  uint64_t signs_ = 0;
  bool b_ = false;
};

/*! \brief Calls fn on every layer structure of n variables (optionally with layer number r) */
inline void enumerate_ncf( unsigned n, std::optional<unsigned> r, std::function<void( layer_structure const& )> const& fn )
{
  structure_iterator it( n, r );
  while ( auto s = it.next() )
  {
    fn( *s );
  }
}

/* -------------------------------------------------------------------------- */

/*! \brief SplitMix64, a counter-based generator: output i is mix(seed + (i + 1) * gamma)

  Satisfies UniformRandomBitGenerator. `split` derives an independent stream.
*/
class splitmix64
{
public:
  using result_type = uint64_t;

  explicit splitmix64( uint64_t seed ) : state_( seed ) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type( 0 ); }

  result_type operator()()
  {
    return mix( state_ += gamma );
  }

  splitmix64 split() { return splitmix64( ( *this )() ); }

  static constexpr uint64_t mix( uint64_t z )
  {
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

private:
  static constexpr uint64_t gamma = 0x9e3779b97f4a7c15ull;
  uint64_t state_;
};

/*! \brief Unbiased integer in [0, bound) by rejection */
inline uint64_t uniform_below( splitmix64& rng, uint64_t bound )
{
  if ( bound == 0 )
  {
    throw error( "uniform_below needs a positive bound" );
  }
  /* values in [threshold, 2^64) cover every residue equally often */
  uint64_t const threshold = ( uint64_t( 0 ) - bound ) % bound;
  for ( ;; )
  {
    uint64_t const x = rng();
    if ( x >= threshold )
    {
      return x % bound;
    }
  }
}

/*! \brief Unbiased big integer in [0, bound) by rejection on msb(bound)+1 random bits */
inline big_int uniform_below( splitmix64& rng, big_int const& bound )
{
  if ( bound <= 0 )
  {
    throw error( "uniform_below needs a positive bound" );
  }
  unsigned const bits = static_cast<unsigned>( boost::multiprecision::msb( bound ) ) + 1;
  for ( ;; )
  {
    big_int x = 0;
    for ( unsigned got = 0; got < bits; got += 64 )
    {
      x = ( x << 64 ) | big_int( rng() );
    }
    x &= pow2( bits ) - 1;
    if ( x < bound )
    {
      return x;
    }
  }
}

/*! \brief Uniformly random NCF structure on n variables, deterministic in the seed

  Layers are drawn front to back. With m variables left, the layer is the
  last one (all m) with weight [m >= 2], or has k < m variables with weight
  C(m,k) T(m-k), where T(m) counts ordered partitions of m variables into
  valid layers. This draws the composition proportionally to its
  multinomial coefficient and the ordered partition uniformly; signs and b
  are uniform, so every structure, hence every NCF, has probability
  1 / |NCF(n)|.
*/
inline layer_structure sample_ncf( unsigned n, uint64_t seed )
{
  if ( n < 2 || n > 31 )
  {
    throw error( "sampling needs 2 <= n <= 31" );
  }
  auto const partitions = detail::ordered_partition_totals( n );
  auto const binom = detail::pascal_triangle( n );

  splitmix64 rng( seed );
  std::vector<unsigned> pool;
  for ( unsigned i = 1; i <= n; ++i )
  {
    pool.push_back( i );
  }

  layer_structure s{n, {}, false, false};
  while ( !pool.empty() )
  {
    unsigned const m = static_cast<unsigned>( pool.size() );
    big_int u = uniform_below( rng, partitions[m] );
    unsigned k = m;
    if ( u >= 1 )
    {
      u -= 1;
      for ( k = 1; k + 2 <= m; ++k )
      {
        big_int const w = binom[m][k] * partitions[m - k];
        if ( u < w )
        {
          break;
        }
        u -= w;
      }
    }
    /* uniform k-subset: partial Fisher-Yates onto the front of the pool */
    for ( unsigned j = 0; j < k; ++j )
    {
      auto const pick = j + uniform_below( rng, uint64_t( m - j ) );
      std::swap( pool[j], pool[pick] );
    }
    std::vector<factor> factors;
    for ( unsigned j = 0; j < k; ++j )
    {
      factors.push_back( {pool[j], ( rng() & 1u ) != 0} );
    }
    s.layers.emplace_back( std::move( factors ) );
    pool.erase( pool.begin(), pool.begin() + k );
  }
  s.b = ( rng() & 1u ) != 0;
  return s;
}

} // namespace ncfkit
