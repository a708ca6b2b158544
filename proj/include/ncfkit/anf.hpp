/*!
  \file anf.hpp
  \brief Algebraic normal form over GF(2) and its text grammar

  A monomial is stored as a variable mask: bit i-1 set means x_i is a
  factor, the empty mask is the constant term 1. Conversion to and from
  truth tables is the Moebius transform over the subset lattice, which is
  its own inverse.

  Text grammar (whitespace ignored):

      poly := term ('+' term)*
      term := '1' | '0' | var ('*' var)*
      var  := 'x' digits

  Repeated monomials cancel in pairs; a repeated variable inside one
  product is idempotent (x*x = x).
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "truth_table.hpp"

namespace ncfkit
{

class anf_poly
{
public:
  anf_poly() = default;

  /*! \brief Polynomial from monomial masks; duplicates cancel pairwise */
  anf_poly( unsigned num_vars, std::vector<uint32_t> monomials ) : num_vars_( num_vars )
  {
    if ( num_vars > max_table_vars )
    {
      throw error( "n=" + std::to_string( num_vars ) + " exceeds the limit of " + std::to_string( max_table_vars ) );
    }
    uint32_t const allowed = num_vars == 32 ? ~uint32_t( 0 ) : ( ( uint32_t( 1 ) << num_vars ) - 1u );
    for ( auto m : monomials )
    {
      if ( m & ~allowed )
      {
        throw error( "monomial uses a variable beyond n=" + std::to_string( num_vars ) );
      }
    }
    std::sort( monomials.begin(), monomials.end() );
    for ( std::size_t j = 0; j < monomials.size(); )
    {
      if ( j + 1 < monomials.size() && monomials[j] == monomials[j + 1] )
      {
        j += 2;
        continue;
      }
      monomials_.push_back( monomials[j++] );
    }
  }

  unsigned num_vars() const noexcept { return num_vars_; }

  /*! \brief Monomial masks in ascending numeric order */
  std::vector<uint32_t> const& monomials() const noexcept { return monomials_; }

  bool is_zero() const noexcept { return monomials_.empty(); }

  friend bool operator==( anf_poly const&, anf_poly const& ) = default;

private:
  unsigned num_vars_ = 0;
  std::vector<uint32_t> monomials_;
};

/*! \brief Algebraic degree; -1 for the zero polynomial */
inline int degree( anf_poly const& p )
{
  int d = -1;
  for ( auto m : p.monomials() )
  {
    d = std::max( d, std::popcount( m ) );
  }
  return d;
}

namespace detail
{

/* in-place Moebius transform of a packed table; an involution */
inline std::vector<uint64_t> moebius( std::vector<uint64_t> words, unsigned num_vars )
{
  for ( unsigned v = 0; v < std::min( num_vars, 6u ); ++v )
  {
    unsigned const block = 1u << v;
    for ( auto& w : words )
    {
      w ^= ( w & var_mask_neg[v] ) << block;
    }
  }
  for ( unsigned v = 6; v < num_vars; ++v )
  {
    std::size_t const stride = std::size_t( 1 ) << ( v - 6 );
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      if ( j & stride )
      {
        words[j] ^= words[j ^ stride];
      }
    }
  }
  return words;
}

} // namespace detail

inline truth_table truth_table_from_anf( anf_poly const& p )
{
  std::vector<uint64_t> words( detail::num_words( p.num_vars() ), 0u );
  for ( auto m : p.monomials() )
  {
    words[m >> 6] |= uint64_t( 1 ) << ( m & 63u );
  }
  return truth_table( p.num_vars(), detail::moebius( std::move( words ), p.num_vars() ) );
}

inline anf_poly anf_from_truth_table( truth_table const& f )
{
  auto const coeffs = detail::moebius( std::vector<uint64_t>( f.words().begin(), f.words().end() ), f.num_vars() );
  std::vector<uint32_t> monomials;
  for ( std::size_t j = 0; j < coeffs.size(); ++j )
  {
    for ( uint64_t w = coeffs[j]; w; w &= w - 1 )
    {
      monomials.push_back( static_cast<uint32_t>( j * 64 + static_cast<std::size_t>( std::countr_zero( w ) ) ) );
    }
  }
  return anf_poly( f.num_vars(), std::move( monomials ) );
}

/*! \brief Prints terms by descending degree, then by ascending variable list

  The zero polynomial prints as "0". Output re-parses to an equal polynomial.
*/
inline std::string to_string( anf_poly const& p )
{
  if ( p.is_zero() )
  {
    return "0";
  }
  auto ms = p.monomials();
  std::sort( ms.begin(), ms.end(), []( uint32_t a, uint32_t b ) {
    if ( std::popcount( a ) != std::popcount( b ) )
    {
      return std::popcount( a ) > std::popcount( b );
    }
    /* lexicographic on the ascending index lists: the owner of the lowest differing index comes first */
    uint32_t const diff = a ^ b;
    return diff != 0 && ( a & ( diff & ( ~diff + 1u ) ) ) != 0;
  } );
  std::string s;
  for ( auto m : ms )
  {
    if ( !s.empty() )
    {
      s += " + ";
    }
    if ( m == 0 )
    {
      s += "1";
      continue;
    }
    bool first = true;
    for ( uint32_t w = m; w; w &= w - 1 )
    {
      if ( !first )
      {
        s += "*";
      }
      s += "x" + std::to_string( std::countr_zero( w ) + 1 );
      first = false;
    }
  }
  return s;
}

namespace detail
{

class anf_parser
{
public:
  explicit anf_parser( std::string_view text ) : text_( text ) {}

  /* returns monomials with raw indices; max_index receives the largest index seen */
  std::vector<std::pair<uint32_t, std::size_t>> parse( unsigned& max_index )
  {
    std::vector<std::pair<uint32_t, std::size_t>> terms;
    max_index = 0;
    skip_ws();
    if ( pos_ == text_.size() )
    {
      throw parse_error( "empty polynomial", pos_ );
    }
    while ( true )
    {
      std::size_t const start = pos_;
      terms.emplace_back( parse_term( max_index ), start );
      skip_ws();
      if ( pos_ == text_.size() )
      {
        break;
      }
      expect( '+' );
    }
    return terms;
  }

  /* every variable occurrence as (index, position) */
  std::vector<std::pair<unsigned, std::size_t>> const& indices() const noexcept { return indices_; }

  /* marker for a literal 0 term */
  static constexpr uint32_t zero = ~uint32_t( 0 );

private:

  uint32_t parse_term( unsigned& max_index )
  {
    skip_ws();
    if ( pos_ < text_.size() && ( text_[pos_] == '1' || text_[pos_] == '0' ) )
    {
      return text_[pos_++] == '1' ? 0u : zero;
    }
    uint32_t mask = parse_var( max_index );
    while ( true )
    {
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '*' )
      {
        ++pos_;
        mask |= parse_var( max_index );
      }
      else
      {
        return mask;
      }
    }
  }

  uint32_t parse_var( unsigned& max_index )
  {
    skip_ws();
    if ( pos_ >= text_.size() || ( text_[pos_] != 'x' && text_[pos_] != 'X' ) )
    {
      throw parse_error( "expected variable 'x<k>'", pos_ );
    }
    std::size_t const start = pos_++;
    if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      throw parse_error( "expected variable index after 'x'", pos_ );
    }
    unsigned long index = 0;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      index = index * 10 + static_cast<unsigned long>( text_[pos_++] - '0' );
      if ( index > 1000 )
      {
        throw parse_error( "variable index too large", start );
      }
    }
    if ( index < 1 || index > max_table_vars )
    {
      throw parse_error( "variable index x" + std::to_string( index ) + " out of range", start );
    }
    max_index = std::max( max_index, static_cast<unsigned>( index ) );
    indices_.emplace_back( static_cast<unsigned>( index ), start );
    return uint32_t( 1 ) << ( index - 1 );
  }

  void expect( char c )
  {
    if ( pos_ >= text_.size() || text_[pos_] != c )
    {
      throw parse_error( std::string( "expected '" ) + c + "'", pos_ );
    }
    ++pos_;
  }

  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<unsigned, std::size_t>> indices_;

};

inline anf_poly build_anf( anf_parser const& parser, std::vector<std::pair<uint32_t, std::size_t>> const& terms, unsigned num_vars )
{
  for ( auto const& [index, position] : parser.indices() )
  {
    if ( index > num_vars )
    {
      throw parse_error( "variable index x" + std::to_string( index ) + " exceeds n=" + std::to_string( num_vars ), position );
    }
  }
  std::vector<uint32_t> monomials;
  for ( auto const& term : terms )
  {
    if ( term.first != anf_parser::zero )
    {
      monomials.push_back( term.first );
    }
  }
  return anf_poly( num_vars, std::move( monomials ) );
}

} // namespace detail

/*! \brief Parses the ANF grammar over exactly `num_vars` variables */
inline anf_poly parse_anf( std::string_view text, unsigned num_vars )
{
  if ( num_vars > max_table_vars )
  {
    throw error( "n=" + std::to_string( num_vars ) + " exceeds the limit of " + std::to_string( max_table_vars ) );
  }
  detail::anf_parser parser( text );
  unsigned max_index = 0;
  auto const terms = parser.parse( max_index );
  return detail::build_anf( parser, terms, num_vars );
}

/*! \brief Parses the ANF grammar; n is the largest variable index used */
inline anf_poly parse_anf( std::string_view text )
{
  detail::anf_parser parser( text );
  unsigned max_index = 0;
  auto const terms = parser.parse( max_index );
  return detail::build_anf( parser, terms, max_index );
}

} // namespace ncfkit
