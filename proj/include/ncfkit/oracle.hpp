/*!
  \file oracle.hpp
  \brief Brute-force reference implementations

  These functions recompute every quantity straight from its definition with
  plain loops over input points. They share no code with the decomposer or
  the closed forms (only `truth_table::get_bit`), so agreement between the
  two is independent evidence. `classify_all` is the exception: it is the
  census that runs the decomposer over every table.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "canalyze.hpp"
#include "dyadic.hpp"
#include "truth_table.hpp"

namespace ncfkit::oracle
{

inline uint64_t weight_bruteforce( truth_table const& f )
{
  uint64_t w = 0;
  for ( uint64_t t = 0; t < f.num_bits(); ++t )
  {
    w += f.get_bit( t ) ? 1u : 0u;
  }
  return w;
}

/*! \brief alpha_i = 2^-(n-1) * #{ x with x_i = 0 : f(x) != f(x with x_i = 1) } */
inline dyadic activity_bruteforce( truth_table const& f, unsigned var )
{
  if ( var < 1 || var > f.num_vars() )
  {
    throw error( "variable index x" + std::to_string( var ) + " out of range for n=" + std::to_string( f.num_vars() ) );
  }
  uint64_t const bit = uint64_t( 1 ) << ( var - 1 );
  uint64_t count = 0;
  for ( uint64_t t = 0; t < f.num_bits(); ++t )
  {
    if ( !( t & bit ) && f.get_bit( t ) != f.get_bit( t | bit ) )
    {
      ++count;
    }
  }
  return dyadic( static_cast<long long>( count ), f.num_vars() - 1 );
}

inline std::vector<dyadic> activity_vector( truth_table const& f )
{
  std::vector<dyadic> alphas;
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    alphas.push_back( activity_bruteforce( f, i ) );
  }
  return alphas;
}

struct sensitivity_profile
{
  /*! s(x) for every point index t */
  std::vector<unsigned> pointwise;
  dyadic average;
};

/*! \brief Number of Hamming neighbours with a different value, at every point */
inline sensitivity_profile sensitivity_profile_of( truth_table const& f )
{
  sensitivity_profile p;
  p.pointwise.resize( f.num_bits() );
  uint64_t total = 0;
  for ( uint64_t t = 0; t < f.num_bits(); ++t )
  {
    unsigned s = 0;
    for ( unsigned i = 0; i < f.num_vars(); ++i )
    {
      if ( f.get_bit( t ) != f.get_bit( t ^ ( uint64_t( 1 ) << i ) ) )
      {
        ++s;
      }
    }
    p.pointwise[t] = s;
    total += s;
  }
  p.average = dyadic( static_cast<long long>( total ), f.num_vars() );
  return p;
}

inline constexpr unsigned max_definition_vars = 8;

namespace detail
{

using table = std::vector<uint8_t>;

inline table substitute( table const& f, unsigned i, uint8_t a )
{
  table g;
  g.reserve( f.size() / 2 );
  for ( uint64_t t = 0; t < f.size(); ++t )
  {
    if ( ( ( t >> i ) & 1u ) == a )
    {
      g.push_back( f[t] );
    }
  }
  return g;
}

inline bool all_equal( table const& f, uint8_t b )
{
  for ( auto v : f )
  {
    if ( v != b )
      return false;
  }
  return true;
}

/* nested canalyzing in some variable order: pick a variable and input that
   fixes the output, then the complementary restriction must be NCF on the
   remaining variables; on one variable, f must be nonconstant */
inline bool nested_canalyzing( table const& f, unsigned n, std::map<table, bool>& memo )
{
  if ( n == 0 )
  {
    return false;
  }
  if ( n == 1 )
  {
    return f[0] != f[1];
  }
  if ( auto it = memo.find( f ); it != memo.end() )
  {
    return it->second;
  }
  bool result = false;
  for ( unsigned i = 0; i < n && !result; ++i )
  {
    for ( uint8_t a = 0; a < 2 && !result; ++a )
    {
      auto const fixed = substitute( f, i, a );
      if ( all_equal( fixed, fixed[0] ) && nested_canalyzing( substitute( f, i, uint8_t( 1 - a ) ), n - 1, memo ) )
      {
        result = true;
      }
    }
  }
  memo.emplace( f, result );
  return result;
}

} // namespace detail

/*! \brief NCF test straight from the definition (n <= 8) */
inline bool is_ncf_by_definition( truth_table const& f )
{
  if ( f.num_vars() > max_definition_vars )
  {
    throw error( "definition-based NCF test limited to n <= " + std::to_string( max_definition_vars ) );
  }
  detail::table t( f.num_bits() );
  for ( uint64_t j = 0; j < f.num_bits(); ++j )
  {
    t[j] = f.get_bit( j ) ? 1 : 0;
  }
  std::map<detail::table, bool> memo;
  return detail::nested_canalyzing( t, f.num_vars(), memo );
}

/* -------------------------------------------------------------------------- */

inline constexpr unsigned max_census_vars = 4;

/*! \brief Tally of decomposer verdicts over a set of truth tables */
struct census
{
  std::map<std::size_t, uint64_t> by_layer_number;
  uint64_t not_ncf = 0;
  /*! single-variable functions x_1 + c */
  uint64_t degenerate = 0;
  /*! tables where the decomposer and the definition-based test disagree (when checked) */
  uint64_t disagreements = 0;

  uint64_t ncf_total() const
  {
    uint64_t s = 0;
    for ( auto const& [r, c] : by_layer_number )
      s += c;
    return s;
  }

  void merge( census const& o )
  {
    for ( auto const& [r, c] : o.by_layer_number )
      by_layer_number[r] += c;
    not_ncf += o.not_ncf;
    degenerate += o.degenerate;
    disagreements += o.disagreements;
  }
};

/*! \brief Decomposes the tables with index in [begin, end) */
inline census classify_range( unsigned n, uint64_t begin, uint64_t end, bool check_definition )
{
  census c;
  for ( uint64_t bits = begin; bits < end; ++bits )
  {
    truth_table const f( n, {bits} );
    auto const verdict = ncf_decompose( f );
    bool decomposer_ncf = false;
    if ( auto const* s = std::get_if<layer_structure>( &verdict ) )
    {
      if ( s->degenerate )
      {
        ++c.degenerate;
      }
      else
      {
        ++c.by_layer_number[layer_number( *s )];
        decomposer_ncf = true;
      }
    }
    else
    {
      ++c.not_ncf;
    }
    if ( check_definition && n >= 2 && decomposer_ncf != is_ncf_by_definition( f ) )
    {
      ++c.disagreements;
    }
  }
  return c;
}

/*! \brief Runs the decomposer on all 2^(2^n) tables (n <= 4) */
inline census classify_all( unsigned n, bool check_definition = false, unsigned threads = 1 )
{
  if ( n > max_census_vars )
  {
    throw error( "exhaustive census limited to n <= " + std::to_string( max_census_vars ) );
  }
  uint64_t const total = uint64_t( 1 ) << ( 1u << n );
  threads = std::max( 1u, threads );
  uint64_t const chunk = std::max<uint64_t>( 1, ( total + threads - 1 ) / threads );
  std::vector<census> parts( threads );
  std::vector<std::thread> pool;
  for ( unsigned t = 0; t < threads; ++t )
  {
    uint64_t const begin = std::min( total, t * chunk );
    uint64_t const end = std::min( total, begin + chunk );
    if ( t + 1 == threads )
    {
      parts[t] = classify_range( n, begin, end, check_definition );
    }
    else
    {
      pool.emplace_back( [&, t, begin, end] { parts[t] = classify_range( n, begin, end, check_definition ); } );
    }
  }
  for ( auto& th : pool )
  {
    th.join();
  }
  census all;
  for ( auto const& p : parts )
  {
    all.merge( p );
  }
  return all;
}

/*! \brief CSV with header "layer_number,count" */
inline std::string to_csv( census const& c )
{
  std::string s = "layer_number,count\n";
  for ( auto const& [r, count] : c.by_layer_number )
  {
    s += std::to_string( r ) + "," + std::to_string( count ) + "\n";
  }
  if ( c.degenerate )
  {
    s += "degenerate," + std::to_string( c.degenerate ) + "\n";
  }
  s += "not_ncf," + std::to_string( c.not_ncf ) + "\n";
  return s;
}

} // namespace ncfkit::oracle
