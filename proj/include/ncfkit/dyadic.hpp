/*!
  \file dyadic.hpp
  \brief Exact rationals with power-of-two denominators

  Activities and average sensitivities of Boolean functions are always of
  the form p / 2^e, so they are carried exactly instead of as floats.
*/

#pragma once

#include <cmath>
#include <concepts>
#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "truth_table.hpp"

namespace ncfkit
{

using big_int = boost::multiprecision::cpp_int;

/*! \brief 2^k as a big integer */
inline big_int pow2( unsigned k )
{
  return big_int( 1 ) << k;
}

/*! \brief Value numerator / 2^exponent in canonical form (numerator odd or exponent 0) */
class dyadic
{
public:
  dyadic() = default;

  dyadic( big_int numerator, unsigned exponent = 0 ) : num_( std::move( numerator ) ), exp_( exponent )
  {
    normalize();
  }

  template<std::integral T>
  dyadic( T numerator, unsigned exponent = 0 ) : dyadic( big_int( numerator ), exponent ) {}

  big_int const& numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }

  friend dyadic operator+( dyadic const& a, dyadic const& b )
  {
    unsigned const e = std::max( a.exp_, b.exp_ );
    return dyadic( a.num_ * pow2( e - a.exp_ ) + b.num_ * pow2( e - b.exp_ ), e );
  }

  friend dyadic operator-( dyadic const& a ) { return dyadic( -a.num_, a.exp_ ); }
  friend dyadic operator-( dyadic const& a, dyadic const& b ) { return a + ( -b ); }
  friend dyadic operator*( dyadic const& a, dyadic const& b ) { return dyadic( a.num_ * b.num_, a.exp_ + b.exp_ ); }

  dyadic& operator+=( dyadic const& o ) { return *this = *this + o; }

  friend bool operator==( dyadic const&, dyadic const& ) = default;

  friend std::strong_ordering operator<=>( dyadic const& a, dyadic const& b )
  {
    unsigned const e = std::max( a.exp_, b.exp_ );
    big_int const x = a.num_ * pow2( e - a.exp_ );
    big_int const y = b.num_ * pow2( e - b.exp_ );
    return x < y ? std::strong_ordering::less : ( x > y ? std::strong_ordering::greater : std::strong_ordering::equal );
  }

  /*! \brief "p/2^e" */
  std::string to_string() const { return num_.str() + "/2^" + std::to_string( exp_ ); }

  /*! \brief "p/q" with q = 2^e written out, or "p" when e = 0 */
  std::string to_fraction() const
  {
    if ( exp_ == 0 )
    {
      return num_.str();
    }
    return num_.str() + "/" + ( big_int( 1 ) << exp_ ).str();
  }

  /*! \brief Exact decimal expansion (always finite) */
  std::string to_decimal() const
  {
    big_int mag = num_ < 0 ? big_int( -num_ ) : num_;
    std::string const sign = num_ < 0 ? "-" : "";
    if ( exp_ == 0 )
    {
      return sign + mag.str();
    }
    big_int const scaled = mag * boost::multiprecision::pow( big_int( 5 ), exp_ );
    std::string digits = scaled.str();
    if ( digits.size() <= exp_ )
    {
      digits.insert( 0, exp_ + 1 - digits.size(), '0' );
    }
    std::string const whole = digits.substr( 0, digits.size() - exp_ );
    std::string const frac = digits.substr( digits.size() - exp_ );
    return sign + whole + "." + frac;
  }

  double to_double() const { return static_cast<double>( num_ ) / std::ldexp( 1.0, static_cast<int>( exp_ ) ); }

private:
  void normalize()
  {
    if ( num_ == 0 )
    {
      exp_ = 0;
      return;
    }
    unsigned const tz = static_cast<unsigned>( boost::multiprecision::lsb( num_ < 0 ? big_int( -num_ ) : num_ ) );
    unsigned const shift = std::min( tz, exp_ );
    num_ /= big_int( 1 ) << shift;
    exp_ -= shift;
  }

  big_int num_ = 0;
  unsigned exp_ = 0;
};

} // namespace ncfkit
