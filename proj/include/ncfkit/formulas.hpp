/*!
  \file formulas.hpp
  \brief Closed forms for counts, weights, activities and average sensitivities of NCFs

  Everything here is a function of the layer-size composition (k_1,...,k_r)
  alone. With prefix sums P_j = k_1 + ... + k_j:

      |NCF(n, r)| = 2^(n+1) * sum over compositions with r parts of n! / (k_1! ... k_r!)
      W(f_r)      = sum_{j=1..r} (-1)^(j-1) 2^(n - P_j)
      W(f_r + 1)  = sum_{j=0..r} (-1)^j     2^(n - P_j),  P_0 = 0
      A_l         = 2^-(n-1) sum_{j=1..r-l+1} (-1)^(j-1) 2^(n - P_(j+l-1))
      s           = sum_l k_l A_l
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dyadic.hpp"

namespace ncfkit
{

/*! \brief Layer sizes (k_1,...,k_r): positive, summing to n >= 2, with k_r >= 2 */
class composition
{
public:
  composition() = default;

  explicit composition( std::vector<unsigned> parts ) : parts_( std::move( parts ) )
  {
    if ( parts_.empty() )
    {
      throw error( "composition needs at least one part" );
    }
    for ( auto k : parts_ )
    {
      if ( k == 0 )
      {
        throw error( "composition parts must be positive" );
      }
      n_ += k;
    }
    if ( n_ < 2 )
    {
      throw error( "composition needs n >= 2" );
    }
    if ( parts_.back() < 2 )
    {
      throw error( "last part of a composition must be at least 2" );
    }
  }

  unsigned n() const noexcept { return n_; }
  std::size_t r() const noexcept { return parts_.size(); }
  std::vector<unsigned> const& parts() const noexcept { return parts_; }
  unsigned operator[]( std::size_t l ) const { return parts_[l]; }

  friend bool operator==( composition const&, composition const& ) = default;

  /*! \brief Order by number of parts, then lexicographically */
  friend bool operator<( composition const& a, composition const& b )
  {
    if ( a.r() != b.r() )
    {
      return a.r() < b.r();
    }
    return a.parts_ < b.parts_;
  }

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

inline std::string to_string( composition const& c )
{
  std::string s = "(";
  for ( std::size_t l = 0; l < c.r(); ++l )
  {
    s += ( l ? "," : "" ) + std::to_string( c[l] );
  }
  return s + ")";
}

/*! \brief (1,...,1,2) with n - 2 ones */
inline composition staircase( unsigned n )
{
  std::vector<unsigned> parts( n - 1, 1u );
  parts.back() = 2;
  return composition( std::move( parts ) );
}

inline big_int binomial( unsigned n, unsigned k )
{
  if ( k > n )
  {
    return 0;
  }
  big_int c = 1;
  for ( unsigned i = 1; i <= k; ++i )
  {
    c = c * ( n - k + i ) / i;
  }
  return c;
}

inline big_int multinomial( composition const& c )
{
  big_int m = 1;
  unsigned left = c.n();
  for ( auto k : c.parts() )
  {
    m *= binomial( left, k );
    left -= k;
  }
  return m;
}

namespace detail
{

inline void check_count_args( unsigned n )
{
  if ( n < 2 )
  {
    throw error( "NCF counts need n >= 2" );
  }
}

/* pascal[m][k] = C(m, k) */
inline std::vector<std::vector<big_int>> pascal_triangle( unsigned n )
{
  std::vector<std::vector<big_int>> c( n + 1 );
  for ( unsigned m = 0; m <= n; ++m )
  {
    c[m].resize( m + 1, 1 );
    for ( unsigned k = 1; k < m; ++k )
    {
      c[m][k] = c[m - 1][k - 1] + c[m - 1][k];
    }
  }
  return c;
}

/* ordered[m][r]: ordered partitions of m labelled items into r nonempty blocks, last block >= 2 */
inline std::vector<std::vector<big_int>> ordered_partition_counts( unsigned n )
{
  auto const binom = pascal_triangle( n );
  std::vector<std::vector<big_int>> d( n + 1, std::vector<big_int>( n + 1, 0 ) );
  for ( unsigned m = 2; m <= n; ++m )
  {
    d[m][1] = 1;
  }
  for ( unsigned r = 2; r <= n; ++r )
  {
    for ( unsigned m = r; m <= n; ++m )
    {
      for ( unsigned k = 1; k + 2 <= m; ++k )
      {
        d[m][r] += binom[m][k] * d[m - k][r - 1];
      }
    }
  }
  return d;
}

/* totals[m]: the same partitions for any number of blocks; the first block has k < m items or is the last */
inline std::vector<big_int> ordered_partition_totals( unsigned n )
{
  auto const binom = pascal_triangle( n );
  std::vector<big_int> t( n + 1, 0 );
  for ( unsigned m = 2; m <= n; ++m )
  {
    t[m] = 1;
    for ( unsigned k = 1; k + 2 <= m; ++k )
    {
      t[m] += binom[m][k] * t[m - k];
    }
  }
  return t;
}

} // namespace detail

/*! \brief Number of n-variable NCFs with layer number r */
inline big_int count_ncf( unsigned n, unsigned r )
{
  detail::check_count_args( n );
  if ( r < 1 || r > n - 1 )
  {
    throw error( "layer number r must satisfy 1 <= r <= n-1" );
  }
  return pow2( n + 1 ) * detail::ordered_partition_counts( n )[n][r];
}

/*! \brief count_ncf(n, r) for r = 1..n-1 (entry r-1) */
inline std::vector<big_int> count_ncf_by_layer( unsigned n )
{
  detail::check_count_args( n );
  auto const d = detail::ordered_partition_counts( n );
  std::vector<big_int> counts;
  for ( unsigned r = 1; r <= n - 1; ++r )
  {
    counts.push_back( pow2( n + 1 ) * d[n][r] );
  }
  return counts;
}

inline big_int count_ncf_total( unsigned n )
{
  detail::check_count_args( n );
  return pow2( n + 1 ) * detail::ordered_partition_totals( n )[n];
}

/*! \brief a_2 = 8, a_n = sum_{r=2}^{n-1} C(n, r-1) 2^(r-1) a_(n-r+1) + 2^(n+1) */
inline big_int count_recursive( unsigned n )
{
  detail::check_count_args( n );
  auto const binom = detail::pascal_triangle( n );
  std::vector<big_int> a( n + 1, 0 );
  a[2] = 8;
  for ( unsigned m = 3; m <= n; ++m )
  {
    big_int sum = pow2( m + 1 );
    for ( unsigned r = 2; r <= m - 1; ++r )
    {
      sum += binom[m][r - 1] * pow2( r - 1 ) * a[m - r + 1];
    }
    a[m] = sum;
  }
  return a[n];
}

/*! \brief Weight of an NCF with this composition; b = 0 unless `complemented` */
inline big_int weight_from_composition( composition const& c, bool complemented )
{
  big_int w = complemented ? pow2( c.n() ) : big_int( 0 );
  unsigned prefix = 0;
  for ( std::size_t j = 1; j <= c.r(); ++j )
  {
    prefix += c[j - 1];
    bool const positive = ( ( j - 1 ) % 2 == 0 ) != complemented;
    if ( positive )
      w += pow2( c.n() - prefix );
    else
      w -= pow2( c.n() - prefix );
  }
  return w;
}

/*! \brief Activity shared by every variable of layer l (1-based) */
inline dyadic activity_of_layer( composition const& c, std::size_t l )
{
  if ( l < 1 || l > c.r() )
  {
    throw error( "layer index " + std::to_string( l ) + " out of range 1.." + std::to_string( c.r() ) );
  }
  unsigned prefix = 0;
  for ( std::size_t i = 0; i + 1 < l; ++i )
  {
    prefix += c[i];
  }
  big_int sum = 0;
  for ( std::size_t j = 1; j <= c.r() - l + 1; ++j )
  {
    prefix += c[j + l - 2];
#ifdef NCFKIT_MUTANT_FLIP_ACTIVITY_SIGN
    bool const positive = ( j - 1 ) % 2 == 1;
#else
    bool const positive = ( j - 1 ) % 2 == 0;
#endif
    if ( positive )
      sum += pow2( c.n() - prefix );
    else
      sum -= pow2( c.n() - prefix );
  }
  return dyadic( sum, c.n() - 1 );
}

inline dyadic average_sensitivity( composition const& c )
{
  dyadic s;
  for ( std::size_t l = 1; l <= c.r(); ++l )
  {
    s += dyadic( c[l - 1] ) * activity_of_layer( c, l );
  }
  return s;
}

/*! \brief (n / 2^(n-1), 2 - 1 / 2^(n-2)); the lower bound is attained at r = 1, the upper is strict */
inline std::pair<dyadic, dyadic> sensitivity_bounds( unsigned n )
{
  if ( n < 3 )
  {
    throw error( "sensitivity bounds need n >= 3" );
  }
  return {dyadic( n, n - 1 ), dyadic( 2 ) - dyadic( 1, n - 2 )};
}

/*! \brief Member of the closed-form family `variant` (1, 2 or 3) */
inline composition lemma42_composition( unsigned n, int variant )
{
  switch ( variant )
  {
  case 1:
    if ( n < 3 )
      break;
    return staircase( n );
  case 2:
  {
    if ( n < 4 )
      break;
    std::vector<unsigned> parts( n - 3, 1u );
    parts.push_back( 3 );
    return composition( std::move( parts ) );
  }
  case 3:
  {
    if ( n < 6 || n % 2 != 0 )
      break;
    std::vector<unsigned> parts{1};
    parts.insert( parts.end(), n / 2 - 2, 2u );
    parts.push_back( 3 );
    return composition( std::move( parts ) );
  }
  default:
    throw error( "closed-form variant must be 1, 2 or 3" );
  }
  throw error( "n=" + std::to_string( n ) + " outside the domain of closed-form variant " + std::to_string( variant ) );
}

/*! \brief Closed-form average sensitivities

  variant 1 (n >= 3):          4/3 - (3 + (-1)^n) / (3 * 2^n)
  variant 2 (n >= 4):          4/3 - (9 + 5 (-1)^(n-1)) / (3 * 2^n)
  variant 3 (n even, n >= 6):  4/3 - 4 / (3 * 2^n)
*/
inline dyadic lemma42_value( unsigned n, int variant )
{
  lemma42_composition( n, variant ); /* domain check */
  int const sign = n % 2 == 0 ? 1 : -1;
  big_int subtract;
  switch ( variant )
  {
  case 1:
    subtract = 3 + sign;
    break;
  case 2:
    subtract = 9 - 5 * sign;
    break;
  default:
    subtract = 4;
    break;
  }
  big_int const numerator = pow2( n + 2 ) - subtract;
  if ( numerator % 3 != 0 )
  {
    throw internal_error( "closed-form numerator not divisible by 3" );
  }
  return dyadic( numerator / 3, n );
}

/* -------------------------------------------------------------------------- */

enum class scan_mode
{
  exhaustive,
  pruned
};

inline constexpr unsigned max_scan_n = 40;

struct scan_options
{
  scan_mode mode = scan_mode::exhaustive;
  unsigned threads = 1;
};

/*! \brief Maximum average sensitivity over all compositions of n */
struct scan_result
{
  unsigned n = 0;
  dyadic max;
  /*! every maximizing composition, in composition order */
  std::vector<composition> argmax;
  uint64_t evaluated = 0;

  bool matches_closed_form() const { return n >= 3 && max == lemma42_value( n, 1 ); }

  bool staircase_attains() const
  {
    return n >= 3 && std::find( argmax.begin(), argmax.end(), staircase( n ) ) != argmax.end();
  }

  bool consistent_with_conjecture() const { return matches_closed_form() && staircase_attains(); }
};

namespace detail
{

/* scan partial result; values are numerators over 2^(n-1) */
struct scan_partial
{
  int64_t best = -1;
  std::vector<std::vector<unsigned>> argmax;
  uint64_t evaluated = 0;

  void offer( int64_t value, std::vector<unsigned> const& parts )
  {
    ++evaluated;
    if ( value > best )
    {
      best = value;
      argmax.clear();
    }
    if ( value == best )
    {
      argmax.push_back( parts );
    }
  }

  void merge( scan_partial const& o )
  {
    evaluated += o.evaluated;
    if ( o.best > best )
    {
      best = o.best;
      argmax = o.argmax;
    }
    else if ( o.best == best )
    {
      argmax.insert( argmax.end(), o.argmax.begin(), o.argmax.end() );
    }
  }
};

class composition_scanner
{
public:
  composition_scanner( unsigned n, bool prune, int64_t incumbent ) : n_( n ), prune_( prune ), incumbent_( incumbent ) {}

  scan_partial run( unsigned first_part )
  {
    parts_.assign( 1, first_part );
    visit( n_ - first_part );
    return std::move( result_ );
  }

  /* s * 2^(n-1) for a complete composition */
  static int64_t scaled_sensitivity( unsigned n, std::vector<unsigned> const& parts )
  {
    std::vector<unsigned> prefix( parts.size() );
    unsigned p = 0;
    for ( std::size_t l = 0; l < parts.size(); ++l )
    {
      prefix[l] = p += parts[l];
    }
    int64_t tail = 0, total = 0;
    for ( std::size_t l = parts.size(); l-- > 0; )
    {
      tail = ( int64_t( 1 ) << ( n - prefix[l] ) ) - tail;
      total += int64_t( parts[l] ) * tail;
    }
    return total;
  }

private:
  void visit( unsigned remaining )
  {
    if ( remaining == 0 )
    {
      /* first part consumed everything: only valid when it is the whole composition */
      if ( parts_.size() == 1 && parts_[0] >= 2 )
      {
        result_.offer( scaled_sensitivity( n_, parts_ ), parts_ );
      }
      return;
    }
    if ( remaining >= 2 )
    {
      parts_.push_back( remaining );
      result_.offer( scaled_sensitivity( n_, parts_ ), parts_ );
      parts_.pop_back();
    }
    for ( unsigned k = 1; k + 2 <= remaining; ++k )
    {
      parts_.push_back( k );
      if ( !prune_ || upper_bound( remaining - k ) >= std::max( incumbent_, result_.best ) )
      {
        visit( remaining - k );
      }
      parts_.pop_back();
    }
  }

  /* bound on s * 2^(n-1) over all completions of parts_ with `remaining` >= 2 free variables:
     the prefix layers' alternating sums are exact up to the sign of the tail term T_(m+1),
     which lies in (0, 2^(remaining-1)]; the tail layers contribute less than 2^remaining */
  int64_t upper_bound( unsigned remaining ) const
  {
    std::size_t const m = parts_.size();
    std::vector<unsigned> prefix( m );
    unsigned p = 0;
    for ( std::size_t l = 0; l < m; ++l )
    {
      prefix[l] = p += parts_[l];
    }
    int64_t partial = 0, known = 0, positive_weight = 0;
    for ( std::size_t l = m; l-- > 0; )
    {
      partial = ( int64_t( 1 ) << ( n_ - prefix[l] ) ) - partial;
      known += int64_t( parts_[l] ) * partial;
      if ( ( m - l ) % 2 == 0 )
      {
        positive_weight += parts_[l];
      }
    }
    return known + positive_weight * ( int64_t( 1 ) << ( remaining - 1 ) ) + ( int64_t( 1 ) << remaining );
  }

  unsigned n_;
  bool prune_;
  int64_t incumbent_;
  std::vector<unsigned> parts_;
  scan_partial result_;
};

} // namespace detail

/*! \brief Work unit of a scan: all compositions with the given first part */
inline detail::scan_partial conjecture_scan_unit( unsigned n, unsigned first_part, scan_mode mode )
{
  bool const prune = mode == scan_mode::pruned;
  int64_t const incumbent = prune && n >= 3 ? detail::composition_scanner::scaled_sensitivity( n, staircase( n ).parts() ) : -1;
  return detail::composition_scanner( n, prune, incumbent ).run( first_part );
}

/*! \brief Maximizes the average sensitivity over all compositions of n

  The work is split by first part k_1 = 1..n; units are evaluated on up to
  `options.threads` threads and merged. Pruned mode discards a prefix only
  when its upper bound is strictly below the incumbent, so ties survive and
  the argmax list is complete in both modes.
*/
inline scan_result conjecture_scan( unsigned n, scan_options const& options = {} )
{
  if ( n < 2 || n > max_scan_n )
  {
    throw error( "scan needs 2 <= n <= " + std::to_string( max_scan_n ) );
  }
  std::vector<detail::scan_partial> partials( n + 1 );
  std::atomic<unsigned> next{1};
  auto worker = [&] {
    for ( unsigned k; ( k = next.fetch_add( 1 ) ) <= n; )
    {
      partials[k] = conjecture_scan_unit( n, k, options.mode );
    }
  };
  unsigned const threads = std::max( 1u, std::min( options.threads, n ) );
  std::vector<std::thread> pool;
  for ( unsigned t = 1; t < threads; ++t )
  {
    pool.emplace_back( worker );
  }
  worker();
  for ( auto& t : pool )
  {
    t.join();
  }

  detail::scan_partial total;
  for ( unsigned k = 1; k <= n; ++k )
  {
    total.merge( partials[k] );
  }

  scan_result result;
  result.n = n;
  result.max = dyadic( total.best, n - 1 );
  result.evaluated = total.evaluated;
  for ( auto& parts : total.argmax )
  {
    result.argmax.emplace_back( std::move( parts ) );
  }
  std::sort( result.argmax.begin(), result.argmax.end() );
  return result;
}

} // namespace ncfkit
