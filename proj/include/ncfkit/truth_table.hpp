/*!
  \file truth_table.hpp
  \brief Packed truth tables for Boolean functions of up to 24 variables

  Bit t of a table holds f(x_1,...,x_n) where x_i = (t >> (i - 1)) & 1, so
  x_1 is the least significant coordinate. Every module and every text form
  in this library uses that single convention.
*/

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncfkit
{

/*! \brief Base class of all errors reported by the library */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Raised when an internal invariant of an algorithm is violated */
class internal_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/*! \brief Text input could not be parsed; carries the 0-based offset */
class parse_error : public error
{
public:
  parse_error( std::string const& what, std::size_t position )
      : error( what + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

inline constexpr unsigned max_table_vars = 24u;

namespace detail
{

/* bits where variable v (0-based, v < 6) is 0 */
inline constexpr std::array<uint64_t, 6> var_mask_neg = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

/* bits where variable v (0-based, v < 6) is 1 */
inline constexpr std::array<uint64_t, 6> var_mask_pos = {
    ~var_mask_neg[0], ~var_mask_neg[1], ~var_mask_neg[2],
    ~var_mask_neg[3], ~var_mask_neg[4], ~var_mask_neg[5]};

/* positions p with (p mod 4s) < s */
constexpr uint64_t low_block_mask( unsigned s )
{
  uint64_t m = 0;
  for ( unsigned p = 0; p < 64; ++p )
  {
    if ( p % ( 4 * s ) < s )
    {
      m |= uint64_t( 1 ) << p;
    }
  }
  return m;
}

inline constexpr std::array<uint64_t, 5> block_masks = {
    low_block_mask( 1 ), low_block_mask( 2 ), low_block_mask( 4 ), low_block_mask( 8 ), low_block_mask( 16 )};

constexpr uint64_t length_mask( unsigned num_vars )
{
  return num_vars >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( 1u << num_vars ) ) - 1u );
}

constexpr std::size_t num_words( unsigned num_vars )
{
  return num_vars <= 6 ? 1u : ( std::size_t( 1 ) << ( num_vars - 6 ) );
}

/* gathers the 32 bits of w where variable v (< 6) equals value into the low half */
constexpr uint64_t compress_cofactor( uint64_t w, unsigned v, bool value )
{
  unsigned const block = 1u << v;
  w = value ? ( ( w >> block ) & var_mask_neg[v] ) : ( w & var_mask_neg[v] );
  for ( unsigned s = block, k = v; s < 32; s <<= 1, ++k )
  {
    w = ( w & block_masks[k] ) | ( ( w >> s ) & ( block_masks[k] << s ) );
  }
  return w;
}

/* inverse of compress_cofactor followed by duplication into both cofactors */
constexpr uint64_t spread_cofactor( uint64_t low_half, unsigned v )
{
  unsigned const block = 1u << v;
  uint64_t w = low_half & 0xffffffffull;
  for ( int k = 4; k >= static_cast<int>( v ); --k )
  {
    unsigned const s = 1u << k;
    w = ( w & block_masks[k] ) | ( ( w & ( block_masks[k] << s ) ) << s );
  }
  return w | ( w << block );
}

} // namespace detail

/*! \brief Complete value table of an n-variable Boolean function

  Immutable value type. Unused high bits of the single word of tables with
  fewer than six variables are kept at zero.
*/
class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}

  /*! \brief All-zero table over `num_vars` variables */
  explicit truth_table( unsigned num_vars )
      : num_vars_( checked_vars( num_vars ) ), words_( detail::num_words( num_vars ), 0u )
  {
  }

  truth_table( unsigned num_vars, std::vector<uint64_t> words )
      : num_vars_( checked_vars( num_vars ) ), words_( std::move( words ) )
  {
    if ( words_.size() != detail::num_words( num_vars_ ) )
    {
      throw error( "truth table word count does not match 2^n bits" );
    }
    words_.back() &= detail::length_mask( num_vars_ );
  }

  static truth_table constant( unsigned num_vars, bool value )
  {
    return truth_table( num_vars, std::vector<uint64_t>( detail::num_words( num_vars ), value ? ~uint64_t( 0 ) : 0u ) );
  }

  /*! \brief Projection x_var, var in 1..num_vars */
  static truth_table nth_var( unsigned num_vars, unsigned var )
  {
    if ( var < 1 || var > num_vars )
    {
      throw error( "variable index x" + std::to_string( var ) + " out of range for n=" + std::to_string( num_vars ) );
    }
    unsigned const v = var - 1;
    std::vector<uint64_t> words( detail::num_words( num_vars ) );
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      words[j] = v < 6 ? detail::var_mask_pos[v] : ( ( ( j >> ( v - 6 ) ) & 1u ) ? ~uint64_t( 0 ) : 0u );
    }
    return truth_table( num_vars, std::move( words ) );
  }

  unsigned num_vars() const noexcept { return num_vars_; }
  uint64_t num_bits() const noexcept { return uint64_t( 1 ) << num_vars_; }
  std::span<uint64_t const> words() const noexcept { return words_; }

  bool get_bit( uint64_t t ) const noexcept { return ( words_[t >> 6] >> ( t & 63u ) ) & 1u; }

  bool is_const0() const noexcept
  {
    return std::all_of( words_.begin(), words_.end(), []( uint64_t w ) { return w == 0u; } );
  }

  bool is_const1() const noexcept
  {
    for ( std::size_t j = 0; j + 1 < words_.size(); ++j )
    {
      if ( words_[j] != ~uint64_t( 0 ) )
      {
        return false;
      }
    }
    return words_.back() == detail::length_mask( num_vars_ );
  }

  bool is_constant() const noexcept { return is_const0() || is_const1(); }

  friend bool operator==( truth_table const&, truth_table const& ) = default;

  friend truth_table operator~( truth_table const& a )
  {
    auto words = a.words_;
    for ( auto& w : words )
    {
      w = ~w;
    }
    return truth_table( a.num_vars_, std::move( words ) );
  }

  friend truth_table operator&( truth_table const& a, truth_table const& b ) { return binary( a, b, []( uint64_t x, uint64_t y ) { return x & y; } ); }
  friend truth_table operator|( truth_table const& a, truth_table const& b ) { return binary( a, b, []( uint64_t x, uint64_t y ) { return x | y; } ); }
  friend truth_table operator^( truth_table const& a, truth_table const& b ) { return binary( a, b, []( uint64_t x, uint64_t y ) { return x ^ y; } ); }

  friend truth_table operator^( truth_table const& a, bool value ) { return value ? ~a : a; }

private:
  static unsigned checked_vars( unsigned num_vars )
  {
    if ( num_vars > max_table_vars )
    {
      throw error( "n=" + std::to_string( num_vars ) + " exceeds the table limit of " + std::to_string( max_table_vars ) );
    }
    return num_vars;
  }

  template<typename Fn>
  static truth_table binary( truth_table const& a, truth_table const& b, Fn&& fn )
  {
    if ( a.num_vars_ != b.num_vars_ )
    {
      throw error( "truth table dimension mismatch" );
    }
    std::vector<uint64_t> words( a.words_.size() );
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      words[j] = fn( a.words_[j], b.words_[j] );
    }
    return truth_table( a.num_vars_, std::move( words ) );
  }

  unsigned num_vars_;
  std::vector<uint64_t> words_;
};

/*! \brief Argument vector (x_1,...,x_n) packed as an index */
struct point
{
  point( unsigned num_vars, uint64_t index ) : n( num_vars ), t( index )
  {
    if ( num_vars > 63 || index >= ( uint64_t( 1 ) << num_vars ) )
    {
      throw error( "point index " + std::to_string( index ) + " out of range for n=" + std::to_string( num_vars ) );
    }
  }

  unsigned n;
  uint64_t t;
};

inline bool evaluate( truth_table const& f, point const& x )
{
  if ( x.n != f.num_vars() )
  {
    throw error( "point dimension " + std::to_string( x.n ) + " does not match n=" + std::to_string( f.num_vars() ) );
  }
  return f.get_bit( x.t );
}

namespace detail
{

inline void check_var( truth_table const& f, unsigned var )
{
  if ( var < 1 || var > f.num_vars() )
  {
    throw error( "variable index x" + std::to_string( var ) + " out of range for n=" + std::to_string( f.num_vars() ) );
  }
}

} // namespace detail

/*! \brief Substitutes x_var = value

  The result is a table over the remaining n-1 variables, renumbered 1..n-1
  in their original relative order.
*/
inline truth_table restrict( truth_table const& f, unsigned var, bool value )
{
  detail::check_var( f, var );
  unsigned const n = f.num_vars();
  unsigned const v = var - 1;
  auto const in = f.words();
  std::vector<uint64_t> out( detail::num_words( n - 1 ) );

  if ( v >= 6 )
  {
    std::size_t const stride = std::size_t( 1 ) << ( v - 6 );
    std::size_t k = 0;
    for ( std::size_t j = 0; j < in.size(); ++j )
    {
      if ( ( ( j & stride ) != 0 ) == value )
      {
        out[k++] = in[j];
      }
    }
  }
  else if ( n <= 6 )
  {
    out[0] = detail::compress_cofactor( in[0], v, value );
  }
  else
  {
    for ( std::size_t j = 0; j < out.size(); ++j )
    {
      out[j] = detail::compress_cofactor( in[2 * j], v, value ) |
               ( detail::compress_cofactor( in[2 * j + 1], v, value ) << 32 );
    }
  }
  return truth_table( n - 1, std::move( out ) );
}

/*! \brief Result of a restriction together with its variable map */
struct restriction
{
  truth_table table;
  /*! original_var[j - 1] is the index in the input of new variable x_j */
  std::vector<unsigned> original_var;
};

inline restriction restrict_with_map( truth_table const& f, unsigned var, bool value )
{
  restriction r{restrict( f, var, value ), {}};
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    if ( i != var )
    {
      r.original_var.push_back( i );
    }
  }
  return r;
}

/*! \brief Inserts a fresh variable at position `var` that f does not depend on

  Variables at positions >= var shift up by one. Inverse of restrict on the
  inserted variable for either value.
*/
inline truth_table insert_var( truth_table const& f, unsigned var )
{
  unsigned const n = f.num_vars() + 1;
  if ( var < 1 || var > n )
  {
    throw error( "insertion position x" + std::to_string( var ) + " out of range for n=" + std::to_string( n ) );
  }
  unsigned const v = var - 1;
  auto const in = f.words();
  std::vector<uint64_t> out( detail::num_words( n ) );

  if ( v >= 6 )
  {
    std::size_t const stride = std::size_t( 1 ) << ( v - 6 );
    for ( std::size_t j = 0; j < out.size(); ++j )
    {
      std::size_t const low = j & ( stride - 1 );
      std::size_t const high = ( j >> ( v - 5 ) ) << ( v - 6 );
      out[j] = in[high | low];
    }
  }
  else if ( n <= 6 )
  {
    out[0] = detail::spread_cofactor( in[0], v );
  }
  else
  {
    for ( std::size_t j = 0; j < out.size(); ++j )
    {
      out[j] = detail::spread_cofactor( in[j / 2] >> ( ( j & 1u ) * 32 ), v );
    }
  }
  return truth_table( n, std::move( out ) );
}

inline bool is_essential( truth_table const& f, unsigned var )
{
  detail::check_var( f, var );
  unsigned const v = var - 1;
  auto const w = f.words();
  if ( v < 6 )
  {
    unsigned const block = 1u << v;
    return std::any_of( w.begin(), w.end(), [&]( uint64_t x ) { return ( ( x >> block ) ^ x ) & detail::var_mask_neg[v]; } );
  }
  std::size_t const stride = std::size_t( 1 ) << ( v - 6 );
  for ( std::size_t j = 0; j < w.size(); ++j )
  {
    if ( !( j & stride ) && w[j] != w[j | stride] )
    {
      return true;
    }
  }
  return false;
}

inline std::vector<unsigned> essential_variables( truth_table const& f )
{
  std::vector<unsigned> vars;
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    if ( is_essential( f, i ) )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

/*! \brief Projection of f onto its essential variables */
inline restriction essential_projection( truth_table const& f )
{
  restriction r{f, {}};
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    r.original_var.push_back( i );
  }
  for ( unsigned i = f.num_vars(); i >= 1; --i )
  {
    if ( !is_essential( r.table, i ) )
    {
      r.table = restrict( r.table, i, false );
      r.original_var.erase( r.original_var.begin() + ( i - 1 ) );
    }
  }
  return r;
}

inline uint64_t hamming_weight( truth_table const& f )
{
  uint64_t count = 0;
  for ( auto w : f.words() )
  {
    count += static_cast<uint64_t>( std::popcount( w ) );
  }
  return count;
}

/*! \brief '0'/'1' string; character j holds bit t = j */
inline std::string to_binary( truth_table const& f )
{
  std::string s( f.num_bits(), '0' );
  for ( uint64_t t = 0; t < f.num_bits(); ++t )
  {
    if ( f.get_bit( t ) )
    {
      s[t] = '1';
    }
  }
  return s;
}

inline truth_table from_binary( std::string_view text )
{
  std::size_t const len = text.size();
  if ( len == 0 || !std::has_single_bit( len ) )
  {
    throw parse_error( "binary truth table length " + std::to_string( len ) + " is not a power of two", 0 );
  }
  unsigned const n = static_cast<unsigned>( std::countr_zero( len ) );
  if ( n > max_table_vars )
  {
    throw parse_error( "binary truth table exceeds 2^" + std::to_string( max_table_vars ) + " bits", 0 );
  }
  std::vector<uint64_t> words( detail::num_words( n ), 0u );
  for ( std::size_t j = 0; j < len; ++j )
  {
    if ( text[j] == '1' )
    {
      words[j >> 6] |= uint64_t( 1 ) << ( j & 63u );
    }
    else if ( text[j] != '0' )
    {
      throw parse_error( std::string( "unexpected character '" ) + text[j] + "' in binary truth table", j );
    }
  }
  return truth_table( n, std::move( words ) );
}

/*! \brief Hex form: each digit packs four characters of the binary form

  The leftmost character of a group is the digit's most significant bit.
  Tables with fewer than four bits are left-padded with zeros.
*/
inline std::string to_hex( truth_table const& f )
{
  auto bin = to_binary( f );
  if ( bin.size() < 4 )
  {
    bin.insert( 0, 4 - bin.size(), '0' );
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve( bin.size() / 4 );
  for ( std::size_t j = 0; j < bin.size(); j += 4 )
  {
    unsigned d = 0;
    for ( std::size_t k = 0; k < 4; ++k )
    {
      d = ( d << 1 ) | unsigned( bin[j + k] == '1' );
    }
    s.push_back( digits[d] );
  }
  return s;
}

/*! \brief Parses the hex form; `num_vars` < 0 infers n from the length (n >= 2) */
inline truth_table from_hex( std::string_view text, int num_vars = -1 )
{
  std::string bin;
  bin.reserve( text.size() * 4 );
  for ( std::size_t j = 0; j < text.size(); ++j )
  {
    char const c = text[j];
    unsigned d;
    if ( c >= '0' && c <= '9' )
      d = unsigned( c - '0' );
    else if ( c >= 'a' && c <= 'f' )
      d = unsigned( c - 'a' + 10 );
    else if ( c >= 'A' && c <= 'F' )
      d = unsigned( c - 'A' + 10 );
    else
      throw parse_error( std::string( "unexpected character '" ) + c + "' in hex truth table", j );
    for ( int k = 3; k >= 0; --k )
    {
      bin.push_back( ( ( d >> k ) & 1u ) ? '1' : '0' );
    }
  }
  if ( num_vars >= 0 )
  {
    std::size_t const bits = std::size_t( 1 ) << std::min( num_vars, 30 );
    std::size_t const digits = std::max<std::size_t>( 1, bits / 4 );
    if ( static_cast<unsigned>( num_vars ) > max_table_vars || text.size() != digits )
    {
      throw parse_error( "hex truth table length does not match n=" + std::to_string( num_vars ), 0 );
    }
    if ( bits < 4 )
    {
      if ( bin.find( '1' ) < 4 - bits )
      {
        throw parse_error( "nonzero padding in hex truth table", 0 );
      }
      bin.erase( 0, 4 - bits );
    }
  }
  return from_binary( bin );
}

} // namespace ncfkit
