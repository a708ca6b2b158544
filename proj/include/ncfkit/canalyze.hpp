/*!
  \file canalyze.hpp
  \brief Canalyzing variables and the layered normal form of nested canalyzing functions

  Every nested canalyzing function (NCF) of n >= 2 variables has exactly one
  representation

      f = M_1 ( M_2 ( ... ( M_{r-1} ( M_r + 1 ) + 1 ) ... ) + 1 ) + b

  where each M_l is an extended monomial (a product of factors x_j + a_j)
  over pairwise disjoint variable sets covering {1..n}, and the last layer
  has at least two variables. `ncf_decompose` recovers it by repeatedly
  peeling the maximal set of canalyzing variables, or returns a witness
  explaining why f is not nested canalyzing.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "truth_table.hpp"

namespace ncfkit
{

/*! \brief f is <var:input:output> canalyzing if f(x_var = input) is the constant output */
struct canalyzing_triple
{
  unsigned var;
  bool input;
  bool output;

  friend auto operator<=>( canalyzing_triple const&, canalyzing_triple const& ) = default;
};

/*! \brief All canalyzing triples of f, sorted by (var, input)

  A constant function is canalyzing for every variable and input.
*/
inline std::vector<canalyzing_triple> canalyzing_triples( truth_table const& f )
{
  std::vector<canalyzing_triple> triples;
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    for ( bool a : {false, true} )
    {
      auto const cofactor = restrict( f, i, a );
      if ( cofactor.is_const0() )
      {
        triples.push_back( {i, a, false} );
      }
      else if ( cofactor.is_const1() )
      {
        triples.push_back( {i, a, true} );
      }
    }
  }
  return triples;
}

/*! \brief Factor (x_var + sign); setting x_var = sign zeroes the factor */
struct factor
{
  unsigned var;
  bool sign;

  friend auto operator<=>( factor const&, factor const& ) = default;
};

/*! \brief Product of factors over distinct variables, kept in ascending variable order */
class extended_monomial
{
public:
  extended_monomial() = default;

  explicit extended_monomial( std::vector<factor> factors ) : factors_( std::move( factors ) )
  {
    if ( factors_.empty() )
    {
      throw error( "extended monomial needs at least one factor" );
    }
    std::sort( factors_.begin(), factors_.end() );
    for ( std::size_t j = 0; j < factors_.size(); ++j )
    {
      if ( factors_[j].var == 0 || ( j > 0 && factors_[j].var == factors_[j - 1].var ) )
      {
        throw error( "extended monomial needs distinct positive variable indices" );
      }
    }
  }

  std::vector<factor> const& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

  std::vector<unsigned> variables() const
  {
    std::vector<unsigned> vars;
    for ( auto const& f : factors_ )
    {
      vars.push_back( f.var );
    }
    return vars;
  }

  /*! \brief Table over `num_vars` variables; 1 exactly when every x_j = sign_j + 1 */
  truth_table table( unsigned num_vars ) const
  {
    auto t = truth_table::constant( num_vars, true );
    for ( auto const& f : factors_ )
    {
      t = t & ( truth_table::nth_var( num_vars, f.var ) ^ f.sign );
    }
    return t;
  }

  friend bool operator==( extended_monomial const&, extended_monomial const& ) = default;

private:
  std::vector<factor> factors_;
};

/*! \brief The layered normal form: layers M_1..M_r and outer constant b

  `degenerate` marks the single-variable case f = x_1 + c, which is kept
  representable but lies outside the n >= 2 normal-form theory.
*/
struct layer_structure
{
  unsigned n = 0;
  std::vector<extended_monomial> layers;
  bool b = false;
  bool degenerate = false;

  friend bool operator==( layer_structure const&, layer_structure const& ) = default;
};

inline std::size_t layer_number( layer_structure const& s )
{
  return s.layers.size();
}

/*! \brief Variables of the first layer */
inline std::vector<unsigned> most_dominant_variables( layer_structure const& s )
{
  return s.layers.empty() ? std::vector<unsigned>{} : s.layers.front().variables();
}

/*! \brief Layer sizes (k_1,...,k_r) */
inline std::vector<unsigned> layer_sizes( layer_structure const& s )
{
  std::vector<unsigned> ks;
  for ( auto const& m : s.layers )
  {
    ks.push_back( static_cast<unsigned>( m.size() ) );
  }
  return ks;
}

/*! \brief Throws unless layers are disjoint, cover 1..n, and the last has >= 2 variables (n >= 2) */
inline void validate( layer_structure const& s )
{
  if ( s.n == 0 || s.layers.empty() )
  {
    throw error( "layer structure needs n >= 1 and at least one layer" );
  }
  std::vector<bool> seen( s.n + 1, false );
  std::size_t total = 0;
  for ( auto const& m : s.layers )
  {
    if ( m.size() == 0 )
    {
      throw error( "empty layer" );
    }
    for ( auto const& f : m.factors() )
    {
      if ( f.var < 1 || f.var > s.n )
      {
        throw error( "layer variable x" + std::to_string( f.var ) + " out of range for n=" + std::to_string( s.n ) );
      }
      if ( seen[f.var] )
      {
        throw error( "variable x" + std::to_string( f.var ) + " appears in two layers" );
      }
      seen[f.var] = true;
      ++total;
    }
  }
  if ( total != s.n )
  {
    throw error( "layers do not cover all " + std::to_string( s.n ) + " variables" );
  }
  if ( s.n >= 2 && s.layers.back().size() < 2 )
  {
    throw error( "last layer must contain at least two variables" );
  }
  if ( s.degenerate != ( s.n == 1 ) )
  {
    throw error( "degenerate flag must be set exactly when n = 1" );
  }
}

/*! \brief Evaluates M_1(M_2(...(M_r + 1)...) + 1) + b */
inline truth_table reconstruct( layer_structure const& s )
{
  validate( s );
  auto inner = s.layers.back().table( s.n );
  for ( auto l = s.layers.size() - 1; l-- > 0; )
  {
    inner = s.layers[l].table( s.n ) & ~inner;
  }
  return inner ^ s.b;
}

/*! \brief Raised when canalyzing triples disagree on the canalyzed value */
class mixed_canalyzed_values : public internal_error
{
public:
  using internal_error::internal_error;
};

/*! \brief One peel f = M * Q + c */
struct layer_peel
{
  extended_monomial layer;
  bool value;
  /*! Q over the variables of f not in the layer */
  truth_table residual{0};
  /*! residual_var[j - 1] is the index in f of residual variable x_j */
  std::vector<unsigned> residual_var{};
};

namespace detail
{

/* lifts a residual over `vars` (ascending) back to a table over n variables */
inline truth_table embed( truth_table table, std::vector<unsigned> const& vars, unsigned num_vars )
{
  std::size_t k = 0;
  for ( unsigned i = 1; i <= num_vars; ++i )
  {
    if ( k < vars.size() && vars[k] == i )
    {
      ++k;
      continue;
    }
    table = insert_var( table, i );
  }
  return table;
}

} // namespace detail

/*! \brief Factors out every canalyzing variable of f at once

  Returns nullopt when f has no canalyzing variable. A function that
  depends on a single variable x_i is peeled as M = (x_i), c = f(x_i = 0).
  Throws mixed_canalyzed_values when canalyzing triples disagree on the
  output although f depends on two or more variables.
*/
inline std::optional<layer_peel> factor_layer( truth_table const& f )
{
  if ( f.is_constant() )
  {
    throw error( "factor_layer requires a nonconstant function" );
  }
  auto const triples = canalyzing_triples( f );
  if ( triples.empty() )
  {
    return std::nullopt;
  }

  std::vector<factor> factors;
  bool value = triples.front().output;
  bool const mixed = std::any_of( triples.begin(), triples.end(), [&]( auto const& t ) { return t.output != value; } );
  if ( mixed )
  {
    auto const ess = essential_variables( f );
    if ( ess.size() != 1 )
    {
      throw mixed_canalyzed_values( "canalyzing triples disagree on the canalyzed value" );
    }
    factors.push_back( {ess.front(), false} );
    value = restrict( f, ess.front(), false ).get_bit( 0 );
  }
  else
  {
    for ( auto const& t : triples )
    {
      factors.push_back( {t.var, t.input} );
    }
  }

  layer_peel peel{extended_monomial( factors ), value, f, {}};
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    peel.residual_var.push_back( i );
  }
  for ( auto it = peel.layer.factors().rbegin(); it != peel.layer.factors().rend(); ++it )
  {
    peel.residual = restrict( peel.residual, it->var, !it->sign );
    peel.residual_var.erase( std::find( peel.residual_var.begin(), peel.residual_var.end(), it->var ) );
  }
  peel.residual = peel.residual ^ value;

  auto const lifted = detail::embed( peel.residual, peel.residual_var, f.num_vars() );
  if ( ( ( peel.layer.table( f.num_vars() ) & lifted ) ^ value ) != f )
  {
    throw internal_error( "layer peel does not reproduce the function" );
  }
  return peel;
}

enum class not_ncf_kind
{
  inessential_variable,
  no_canalyzing_variable,
  constant_function,
  /*! reserved; n = 0 inputs are constants and reported as constant_function */
  too_few_variables
};

/*! \brief Machine-checkable reason why a function is not nested canalyzing */
struct not_ncf
{
  not_ncf_kind kind;
  /*! inessential variable (inessential_variable) */
  unsigned variable = 0;
  /*! peel depth where the residual had no canalyzing variable; depth 1 is f itself */
  unsigned depth = 0;
  /*! residual function at that depth and the original indices of its variables */
  truth_table residual{0};
  std::vector<unsigned> residual_var{};

  friend bool operator==( not_ncf const&, not_ncf const& ) = default;
};

using decompose_verdict = std::variant<layer_structure, not_ncf>;

inline bool is_ncf( decompose_verdict const& v )
{
  return std::holds_alternative<layer_structure>( v );
}

/*! \brief Decides nested canalyzingness and returns the unique layer structure or a witness */
inline decompose_verdict ncf_decompose( truth_table const& f )
{
  if ( f.is_constant() )
  {
    return not_ncf{.kind = not_ncf_kind::constant_function};
  }
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    if ( !is_essential( f, i ) )
    {
      return not_ncf{.kind = not_ncf_kind::inessential_variable, .variable = i};
    }
  }
  unsigned const n = f.num_vars();
  if ( n == 1 )
  {
    bool const c = f.get_bit( 0 );
    return layer_structure{1, {extended_monomial( {{1, false}} )}, c, true};
  }

  layer_structure s{n, {}, false, false};
  truth_table g = f;
  std::vector<unsigned> vars;
  for ( unsigned i = 1; i <= n; ++i )
  {
    vars.push_back( i );
  }

  for ( unsigned depth = 1;; ++depth )
  {
    auto peel = factor_layer( g );
    if ( !peel )
    {
      return not_ncf{not_ncf_kind::no_canalyzing_variable, 0, depth, g, vars};
    }
    if ( depth == 1 )
    {
      s.b = peel->value;
    }
    else if ( !peel->value )
    {
      /* a residual variable canalyzing to 0 would already have been canalyzing one layer up */
      throw internal_error( "inner layer canalyzes to 0; previous peel was not maximal" );
    }

    std::vector<factor> mapped;
    for ( auto const& fac : peel->layer.factors() )
    {
      mapped.push_back( {vars[fac.var - 1], fac.sign} );
    }
    s.layers.emplace_back( std::move( mapped ) );

    std::vector<unsigned> next_vars;
    for ( auto j : peel->residual_var )
    {
      next_vars.push_back( vars[j - 1] );
    }
    vars = std::move( next_vars );
    g = std::move( peel->residual );

    if ( vars.empty() )
    {
      if ( !g.is_const1() )
      {
        throw internal_error( "residual of the last layer must be the constant 1" );
      }
      break;
    }
  }

  if ( s.layers.back().size() < 2 )
  {
    throw internal_error( "decomposition produced a last layer with one variable" );
  }
  if ( reconstruct( s ) != f )
  {
    throw internal_error( "decomposition does not reconstruct the input" );
  }
  return s;
}

/*! \brief Checks that a not-NCF witness actually holds for f */
inline bool check_witness( truth_table const& f, not_ncf const& w )
{
  switch ( w.kind )
  {
  case not_ncf_kind::constant_function:
    return f.is_constant();
  case not_ncf_kind::inessential_variable:
    return w.variable >= 1 && w.variable <= f.num_vars() && !is_essential( f, w.variable );
  case not_ncf_kind::no_canalyzing_variable:
    return w.depth >= 1 && w.residual.num_vars() == w.residual_var.size() && !w.residual.is_constant() &&
           canalyzing_triples( w.residual ).empty();
  case not_ncf_kind::too_few_variables:
    return f.num_vars() == 0;
  }
  return false;
}

inline std::string to_string( not_ncf_kind k )
{
  switch ( k )
  {
  case not_ncf_kind::inessential_variable:
    return "inessential_variable";
  case not_ncf_kind::no_canalyzing_variable:
    return "no_canalyzing_variable";
  case not_ncf_kind::constant_function:
    return "constant_function";
  case not_ncf_kind::too_few_variables:
    return "too_few_variables";
  }
  return "unknown";
}

} // namespace ncfkit
