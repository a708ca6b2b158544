/*!
  \file structure_io.hpp
  \brief Text and JSON forms of layer structures

  Canonical text, for Y = x1 (x3+1) ( x4 ( x2 (x5+1) + 1 ) + 1 ):

      0 ⊕ (x1)(x3') [ (x4) [ (x2)(x5') ] ]

  A primed factor (xj') is x_j + 1. The parser also accepts '^' or '+' in
  place of '⊕'. JSON form: {"n":5,"b":0,"layers":[[[1,0],[3,1]],[[4,0]],[[2,0],[5,1]]]}
  where each factor is [var, sign]; "degenerate": true is added for n = 1.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "canalyze.hpp"

namespace ncfkit
{

inline std::string to_string( extended_monomial const& m )
{
  std::string s;
  for ( auto const& f : m.factors() )
  {
    s += "(x" + std::to_string( f.var ) + ( f.sign ? "')" : ")" );
  }
  return s;
}

inline std::string to_text( layer_structure const& s )
{
  std::string out = std::string( s.b ? "1" : "0" ) + " ⊕ ";
  for ( std::size_t l = 0; l < s.layers.size(); ++l )
  {
    if ( l > 0 )
    {
      out += " [ ";
    }
    out += to_string( s.layers[l] );
  }
  for ( std::size_t l = 1; l < s.layers.size(); ++l )
  {
    out += " ]";
  }
  return out;
}

namespace detail
{

class structure_parser
{
public:
  explicit structure_parser( std::string_view text ) : text_( text ) {}

  layer_structure parse()
  {
    layer_structure s;
    skip_ws();
    if ( pos_ >= text_.size() || ( text_[pos_] != '0' && text_[pos_] != '1' ) )
    {
      throw parse_error( "expected outer constant 0 or 1", pos_ );
    }
    s.b = text_[pos_++] == '1';
    skip_ws();
    if ( text_.substr( pos_, 3 ) == "⊕" )
    {
      pos_ += 3;
    }
    else if ( pos_ < text_.size() && ( text_[pos_] == '^' || text_[pos_] == '+' ) )
    {
      ++pos_;
    }
    else
    {
      throw parse_error( "expected '⊕'", pos_ );
    }

    std::size_t open = 0;
    while ( true )
    {
      s.layers.push_back( parse_layer() );
      skip_ws();
      if ( pos_ < text_.size() && text_[pos_] == '[' )
      {
        ++pos_;
        ++open;
        continue;
      }
      break;
    }
    for ( ; open > 0; --open )
    {
      skip_ws();
      if ( pos_ >= text_.size() || text_[pos_] != ']' )
      {
        throw parse_error( "expected ']'", pos_ );
      }
      ++pos_;
    }
    skip_ws();
    if ( pos_ != text_.size() )
    {
      throw parse_error( "trailing characters", pos_ );
    }
    for ( auto const& m : s.layers )
    {
      s.n += static_cast<unsigned>( m.size() );
    }
    s.degenerate = s.n == 1;
    validate( s );
    return s;
  }

private:
  extended_monomial parse_layer()
  {
    std::vector<factor> factors;
    skip_ws();
    std::size_t const start = pos_;
    while ( pos_ < text_.size() && text_[pos_] == '(' )
    {
      ++pos_;
      if ( pos_ >= text_.size() || text_[pos_] != 'x' )
      {
        throw parse_error( "expected 'x'", pos_ );
      }
      ++pos_;
      unsigned var = 0;
      std::size_t const digits = pos_;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) && var < 100000 )
      {
        var = var * 10 + unsigned( text_[pos_++] - '0' );
      }
      if ( pos_ == digits || var == 0 )
      {
        throw parse_error( "expected variable index", digits );
      }
      bool sign = false;
      if ( pos_ < text_.size() && text_[pos_] == '\'' )
      {
        sign = true;
        ++pos_;
      }
      if ( pos_ >= text_.size() || text_[pos_] != ')' )
      {
        throw parse_error( "expected ')'", pos_ );
      }
      ++pos_;
      factors.push_back( {var, sign} );
    }
    if ( factors.empty() )
    {
      throw parse_error( "expected a layer of factors '(xk)'", start );
    }
    try
    {
      return extended_monomial( std::move( factors ) );
    }
    catch ( error const& e )
    {
      throw parse_error( e.what(), start );
    }
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
};

} // namespace detail

inline layer_structure parse_structure( std::string_view text )
{
  return detail::structure_parser( text ).parse();
}

inline nlohmann::json to_json( layer_structure const& s )
{
  nlohmann::json layers = nlohmann::json::array();
  for ( auto const& m : s.layers )
  {
    nlohmann::json layer = nlohmann::json::array();
    for ( auto const& f : m.factors() )
    {
      layer.push_back( {f.var, f.sign ? 1 : 0} );
    }
    layers.push_back( std::move( layer ) );
  }
  nlohmann::json j = {{"n", s.n}, {"b", s.b ? 1 : 0}, {"layers", std::move( layers )}};
  if ( s.degenerate )
  {
    j["degenerate"] = true;
  }
  return j;
}

inline layer_structure structure_from_json( nlohmann::json const& j )
{
  try
  {
    layer_structure s;
    s.n = j.at( "n" ).get<unsigned>();
    s.b = j.at( "b" ).get<int>() != 0;
    s.degenerate = j.value( "degenerate", false );
    for ( auto const& layer : j.at( "layers" ) )
    {
      std::vector<factor> factors;
      for ( auto const& f : layer )
      {
        factors.push_back( {f.at( 0 ).get<unsigned>(), f.at( 1 ).get<int>() != 0} );
      }
      s.layers.emplace_back( std::move( factors ) );
    }
    validate( s );
    return s;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw error( std::string( "malformed layer structure JSON: " ) + e.what() );
  }
}

} // namespace ncfkit
