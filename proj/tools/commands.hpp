/*!
  \file commands.hpp
  \brief Subcommands of the `ncfkit` command-line tool

  `run` parses the arguments and dispatches; output goes to the given
  streams so the tests can drive the tool in-process. Exit codes: 0 on
  success (for analyze: the input is an NCF), 2 when analyze finds a
  function that is not nested canalyzing, 1 on any error.
*/

#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ncfkit/acceptance.hpp>
#include <ncfkit/ncfkit.hpp>

namespace ncfkit::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_not_ncf = 2;

/* keep counting interactive (about a second): totals are quadratic in n, per-layer counts cubic */
inline constexpr unsigned max_count_n = 1000;
inline constexpr unsigned max_layer_count_n = 300;
inline constexpr unsigned default_scan_cap = 30;

using nlohmann::json;

enum class output_format
{
  text,
  json,
  csv
};

/*! \brief Worker count: hardware concurrency, capped by NCFKIT_THREADS when set */
inline unsigned worker_count()
{
  unsigned const hw = std::max( 1u, std::thread::hardware_concurrency() );
  char const* env = std::getenv( "NCFKIT_THREADS" );
  if ( !env || !*env )
  {
    return hw;
  }
  char* end = nullptr;
  long const cap = std::strtol( env, &end, 10 );
  if ( *end != '\0' || cap < 1 )
  {
    throw error( "NCFKIT_THREADS must be a positive integer" );
  }
  return std::min<unsigned>( hw, static_cast<unsigned>( std::min( cap, 4096l ) ) );
}

inline json to_json( dyadic const& d )
{
  return {{"num", d.numerator().str()}, {"log2den", d.exponent()}, {"decimal", d.to_decimal()}};
}

inline json to_json( composition const& c )
{
  return c.parts();
}

/* -------------------------------------------------------------------------- */

struct analyze_config
{
  std::optional<std::string> anf, bin, hex;
  std::optional<unsigned> n;
  output_format format = output_format::text;
  bool oracle = false;
};

namespace detail
{

inline truth_table read_function( analyze_config const& cfg, std::string& format, std::string& text )
{
  int const given = int( cfg.anf.has_value() ) + int( cfg.bin.has_value() ) + int( cfg.hex.has_value() );
  if ( given != 1 )
  {
    throw error( "give exactly one of --anf, --bin, --hex" );
  }
  if ( cfg.n && ( *cfg.n < 1 || *cfg.n > max_table_vars ) )
  {
    throw error( "n must satisfy 1 <= n <= " + std::to_string( max_table_vars ) );
  }
  if ( cfg.anf )
  {
    format = "anf";
    text = *cfg.anf;
    auto const p = cfg.n ? parse_anf( text, *cfg.n ) : parse_anf( text );
    if ( p.num_vars() > max_table_vars )
    {
      throw error( "n=" + std::to_string( p.num_vars() ) + " exceeds the table limit " + std::to_string( max_table_vars ) );
    }
    return truth_table_from_anf( p );
  }
  if ( cfg.bin )
  {
    format = "bin";
    text = *cfg.bin;
    auto f = from_binary( text );
    if ( cfg.n && *cfg.n != f.num_vars() )
    {
      throw error( "--n does not match the table length" );
    }
    return f;
  }
  format = "hex";
  text = *cfg.hex;
  return from_hex( text, cfg.n ? static_cast<int>( *cfg.n ) : -1 );
}

inline std::string variable_list( std::vector<unsigned> const& vars )
{
  std::string s;
  for ( auto v : vars )
  {
    s += ( s.empty() ? "x" : " x" ) + std::to_string( v );
  }
  return s.empty() ? "(none)" : s;
}

inline std::string triple_text( canalyzing_triple const& t )
{
  return "<" + std::to_string( t.var ) + ":" + ( t.input ? "1" : "0" ) + ":" + ( t.output ? "1" : "0" ) + ">";
}

/* residual of a witness written over the original variable names */
inline std::string residual_anf( truth_table const& f, not_ncf const& w )
{
  return to_string( anf_from_truth_table( ncfkit::detail::embed( w.residual, w.residual_var, f.num_vars() ) ) );
}

} // namespace detail

inline int cmd_analyze( analyze_config const& cfg, std::ostream& out, std::ostream& err )
{
  std::string format, text;
  auto const f = detail::read_function( cfg, format, text );
  unsigned const n = f.num_vars();

  bool const check = cfg.oracle && n <= oracle::max_definition_vars;
  if ( cfg.oracle && !check )
  {
    err << "note: oracle cross-check skipped for n > " << oracle::max_definition_vars << "\n";
  }
  std::vector<std::string> mismatches;
  auto expect = [&]( bool ok, std::string const& what ) {
    if ( !ok )
      mismatches.push_back( what );
  };

  json j;
  j["input"] = {{"format", format}, {"text", text}};
  j["n"] = n;
  j["table_hex"] = to_hex( f );
  j["essential_variables"] = essential_variables( f );
  json triples = json::array();
  auto const ts = canalyzing_triples( f );
  for ( auto const& t : ts )
  {
    triples.push_back( {t.var, t.input ? 1 : 0, t.output ? 1 : 0} );
  }
  j["canalyzing_triples"] = triples;

  std::ostringstream txt;
  txt << "input: " << format << " " << text << "\n"
      << "n: " << n << "\n"
      << "truth table (hex): " << to_hex( f ) << "\n"
      << "essential variables: " << detail::variable_list( essential_variables( f ) ) << "\n"
      << "canalyzing triples:";
  for ( auto const& t : ts )
  {
    txt << " " << detail::triple_text( t );
  }
  txt << ( ts.empty() ? " (none)\n" : "\n" );

  auto const verdict = ncf_decompose( f );
  if ( check )
  {
    expect( is_ncf( verdict ) == oracle::is_ncf_by_definition( f ) || n == 1, "NCF verdict" );
  }

  int code = exit_ok;
  if ( auto const* s = std::get_if<layer_structure>( &verdict ) )
  {
    j["verdict"] = "NCF";
    j["structure"] = to_json( *s );
    j["structure_text"] = to_text( *s );
    j["layer_number"] = layer_number( *s );
    txt << "verdict: NCF\n"
        << "structure: " << to_text( *s ) << "\n"
        << "layer number: " << layer_number( *s ) << "\n";
    if ( s->degenerate )
    {
      txt << "single-variable function; composition formulas need n >= 2\n";
    }
    else
    {
      composition const c( layer_sizes( *s ) );
      auto const w = weight_from_composition( c, s->b );
      auto const sens = average_sensitivity( c );
      j["composition"] = to_json( c );
      j["weight"] = {{"formula", w.str()}};
      txt << "composition: " << to_string( c ) << "\n"
          << "weight: " << w;
      if ( check )
      {
        auto const wo = oracle::weight_bruteforce( f );
        expect( w == wo, "weight" );
        j["weight"]["oracle"] = std::to_string( wo );
        txt << " (oracle " << wo << ")";
      }
      txt << "\nactivities:\n";
      json acts = json::array();
      for ( std::size_t l = 1; l <= c.r(); ++l )
      {
        auto const a = activity_of_layer( c, l );
        for ( auto v : s->layers[l - 1].variables() )
        {
          json e = {{"var", v}, {"layer", l}, {"formula", to_json( a )}};
          txt << "  x" << v << " (layer " << l << "): " << a.to_fraction();
          if ( check )
          {
            auto const ao = oracle::activity_bruteforce( f, v );
            expect( a == ao, "activity of x" + std::to_string( v ) );
            e["oracle"] = to_json( ao );
            txt << " (oracle " << ao.to_fraction() << ")";
          }
          acts.push_back( e );
          txt << "\n";
        }
      }
      j["activities"] = acts;
      j["average_sensitivity"] = {{"formula", to_json( sens )}};
      txt << "average sensitivity: " << sens.to_fraction() << " = " << sens.to_decimal();
      if ( check )
      {
        auto const so = oracle::sensitivity_profile_of( f ).average;
        expect( sens == so, "average sensitivity" );
        j["average_sensitivity"]["oracle"] = to_json( so );
        txt << " (oracle " << so.to_fraction() << ")";
      }
      txt << "\n";
      if ( n >= 3 )
      {
        auto const [lower, upper] = sensitivity_bounds( n );
        bool const holds = lower <= sens && sens < upper;
        expect( holds, "sensitivity bounds" );
        j["bounds"] = {{"lower", to_json( lower )}, {"upper", to_json( upper )}, {"holds", holds}};
        txt << "bounds: " << lower.to_fraction() << " <= s < " << upper.to_fraction() << ": " << ( holds ? "ok" : "VIOLATED" ) << "\n";
      }
    }
  }
  else
  {
    auto const& w = std::get<not_ncf>( verdict );
    code = exit_not_ncf;
    j["verdict"] = "NotNCF";
    json wj = {{"kind", to_string( w.kind )}};
    txt << "verdict: NotNCF (" << to_string( w.kind ) << ")\n";
    if ( w.kind == not_ncf_kind::inessential_variable )
    {
      wj["variable"] = w.variable;
      txt << "witness: x" << w.variable << " is inessential\n";
    }
    else if ( w.kind == not_ncf_kind::no_canalyzing_variable )
    {
      auto const residual = detail::residual_anf( f, w );
      wj["depth"] = w.depth;
      wj["residual_variables"] = w.residual_var;
      wj["residual_anf"] = residual;
      wj["residual_table_hex"] = to_hex( w.residual );
      txt << "witness: at depth " << w.depth << " the residual " << residual << " over " << detail::variable_list( w.residual_var )
          << " has no canalyzing variable\n";
    }
    j["witness"] = wj;
    if ( check )
    {
      j["weight"] = {{"oracle", std::to_string( oracle::weight_bruteforce( f ) )}};
    }
  }

  if ( check )
  {
    j["oracle_check"] = mismatches.empty() ? "pass" : "FAIL";
    txt << "oracle check: " << ( mismatches.empty() ? "pass" : "FAIL" ) << "\n";
  }
  out << ( cfg.format == output_format::json ? j.dump( 2 ) + "\n" : txt.str() );
  if ( !mismatches.empty() )
  {
    for ( auto const& m : mismatches )
    {
      err << "error: formula and oracle disagree on " << m << "\n";
    }
    return exit_error;
  }
  return code;
}

/* -------------------------------------------------------------------------- */

struct count_config
{
  unsigned n = 0;
  std::optional<unsigned> r;
  bool per_layer = false;
  output_format format = output_format::text;
};

inline int cmd_count( count_config const& cfg, std::ostream& out, std::ostream& )
{
  if ( cfg.n < 2 || cfg.n > max_count_n )
  {
    throw error( "count needs 2 <= n <= " + std::to_string( max_count_n ) );
  }
  if ( cfg.r && ( *cfg.r < 1 || *cfg.r > cfg.n - 1 ) )
  {
    throw error( "layer number r must satisfy 1 <= r <= n-1" );
  }
  if ( ( cfg.r || cfg.per_layer ) && cfg.n > max_layer_count_n )
  {
    throw error( "per-layer counts need n <= " + std::to_string( max_layer_count_n ) );
  }
  auto const total = count_ncf_total( cfg.n );
  bool const recursion_ok = count_recursive( cfg.n ) == total;
  std::vector<std::pair<unsigned, big_int>> rows;
  if ( cfg.r )
  {
    rows.emplace_back( *cfg.r, count_ncf( cfg.n, *cfg.r ) );
  }
  else if ( cfg.per_layer )
  {
    auto const counts = count_ncf_by_layer( cfg.n );
    for ( unsigned r = 1; r < cfg.n; ++r )
    {
      rows.emplace_back( r, counts[r - 1] );
    }
  }

  switch ( cfg.format )
  {
  case output_format::json:
  {
    json j = {{"n", cfg.n}, {"total", total.str()}, {"recursion_check", recursion_ok ? "pass" : "FAIL"}};
    if ( !rows.empty() )
    {
      json layers = json::array();
      for ( auto const& [r, c] : rows )
      {
        layers.push_back( {{"r", r}, {"count", c.str()}} );
      }
      j["per_layer"] = layers;
    }
    out << j.dump( 2 ) << "\n";
    break;
  }
  case output_format::csv:
    out << "r,count\n";
    for ( auto const& [r, c] : rows )
    {
      out << r << "," << c << "\n";
    }
    if ( !cfg.r )
    {
      out << "total," << total << "\n";
    }
    break;
  case output_format::text:
    if ( cfg.r )
    {
      out << rows.front().second << "\n";
    }
    else
    {
      if ( cfg.per_layer )
      {
        for ( std::size_t i = 0; i < rows.size(); ++i )
        {
          out << ( i ? "," : "" ) << rows[i].second;
        }
        out << "\n";
      }
      out << total << "\n";
    }
    out << "recursion-check: " << ( recursion_ok ? "pass" : "FAIL" ) << "\n";
    break;
  }
  return recursion_ok ? exit_ok : exit_error;
}

/* -------------------------------------------------------------------------- */

struct stream_config
{
  unsigned n = 0;
  std::optional<unsigned> r;
  uint64_t seed = 0;
  uint64_t samples = 1;
  bool tables = false;
  bool count_only = false;
  output_format format = output_format::text;
};

namespace detail
{

inline void check_tables( stream_config const& cfg )
{
  if ( cfg.tables && cfg.n > max_table_vars )
  {
    throw error( "--tables needs n <= " + std::to_string( max_table_vars ) );
  }
}

inline void write_structure( layer_structure const& s, stream_config const& cfg, std::ostream& out )
{
  if ( cfg.format == output_format::json )
  {
    json j = ncfkit::to_json( s );
    if ( cfg.tables )
    {
      j["table_hex"] = to_hex( reconstruct( s ) );
    }
    out << j.dump() << "\n";
    return;
  }
  out << to_text( s );
  if ( cfg.tables )
  {
    out << "\t" << to_hex( reconstruct( s ) );
  }
  out << "\n";
}

} // namespace detail

inline int cmd_enumerate( stream_config const& cfg, std::ostream& out, std::ostream& )
{
  detail::check_tables( cfg );
  structure_iterator it( cfg.n, cfg.r );
  uint64_t count = 0;
  while ( auto s = it.next() )
  {
    ++count;
    if ( !cfg.count_only )
    {
      detail::write_structure( *s, cfg, out );
    }
  }
  if ( cfg.count_only )
  {
    out << count << "\n";
  }
  return exit_ok;
}

/*! \brief Draw k (0-based) uses seed + k */
inline int cmd_sample( stream_config const& cfg, std::ostream& out, std::ostream& )
{
  detail::check_tables( cfg );
  for ( uint64_t k = 0; k < cfg.samples; ++k )
  {
    detail::write_structure( sample_ncf( cfg.n, cfg.seed + k ), cfg, out );
  }
  return exit_ok;
}

/* -------------------------------------------------------------------------- */

struct scan_config
{
  unsigned n = 0;
  unsigned cap = default_scan_cap;
  bool pruned = false;
  output_format format = output_format::text;
};

inline int cmd_scan( scan_config const& cfg, std::ostream& out, std::ostream& err )
{
  if ( cfg.cap > max_scan_n )
  {
    throw error( "--cap cannot exceed " + std::to_string( max_scan_n ) );
  }
  if ( cfg.n < 3 || cfg.n > cfg.cap )
  {
    throw error( "scan needs 3 <= n <= cap (cap " + std::to_string( cfg.cap ) + ")" );
  }
  unsigned const threads = worker_count();
  if ( cfg.n >= 24 )
  {
    err << "scanning n=" << cfg.n << " (" << ( cfg.pruned ? "pruned" : "exhaustive" ) << ", " << threads << " threads)\n";
  }
  auto const r = conjecture_scan( cfg.n, {cfg.pruned ? scan_mode::pruned : scan_mode::exhaustive, threads} );

  std::vector<std::pair<int, dyadic>> closed;
  for ( int v = 1; v <= 3; ++v )
  {
    if ( ( v == 2 && cfg.n < 4 ) || ( v == 3 && ( cfg.n < 6 || cfg.n % 2 ) ) )
      continue;
    closed.emplace_back( v, lemma42_value( cfg.n, v ) );
  }
  bool const consistent = r.consistent_with_conjecture();

  if ( cfg.format == output_format::json )
  {
    json argmax = json::array();
    for ( auto const& c : r.argmax )
      argmax.push_back( to_json( c ) );
    json forms = json::array();
    for ( auto const& [v, value] : closed )
    {
      forms.push_back( {{"variant", v}, {"composition", to_json( lemma42_composition( cfg.n, v ) )}, {"value", to_json( value )}, {"equals_max", value == r.max}} );
    }
    json j = {{"n", cfg.n},
              {"mode", cfg.pruned ? "pruned" : "exhaustive"},
              {"max", to_json( r.max )},
              {"argmax", argmax},
              {"evaluated", r.evaluated},
              {"closed_forms", forms},
              {"staircase_attains", r.staircase_attains()},
              {"conjecture", consistent ? "consistent" : "counterexample"}};
    out << j.dump( 2 ) << "\n";
  }
  else
  {
    out << "n: " << cfg.n << "\n"
        << "max s: " << r.max.to_fraction() << " = " << r.max.to_decimal() << "\n"
        << "argmax (" << r.argmax.size() << "):";
    for ( auto const& c : r.argmax )
      out << " " << to_string( c );
    out << "\n";
    for ( auto const& [v, value] : closed )
    {
      out << "closed form " << v << " " << to_string( lemma42_composition( cfg.n, v ) ) << ": " << value.to_fraction()
          << ( value == r.max ? " (equals max)" : " (below max)" ) << "\n";
    }
    out << "compositions evaluated: " << r.evaluated << ( cfg.pruned ? " (pruned)" : "" ) << "\n"
        << "conjecture: " << ( consistent ? "consistent" : "COUNTEREXAMPLE" ) << "\n";
  }
  return exit_ok;
}

/* -------------------------------------------------------------------------- */

struct classify_config
{
  unsigned n = 0;
  bool oracle = false;
  output_format format = output_format::text;
};

inline int cmd_classify( classify_config const& cfg, std::ostream& out, std::ostream& err )
{
  if ( cfg.n < 1 || cfg.n > oracle::max_census_vars )
  {
    throw error( "classify needs 1 <= n <= " + std::to_string( oracle::max_census_vars ) );
  }
  auto const c = oracle::classify_all( cfg.n, cfg.oracle, worker_count() );
  switch ( cfg.format )
  {
  case output_format::csv:
    out << oracle::to_csv( c );
    break;
  case output_format::json:
  {
    json layers = json::object();
    for ( auto const& [r, count] : c.by_layer_number )
      layers[std::to_string( r )] = count;
    json j = {{"n", cfg.n}, {"tables", uint64_t( 1 ) << ( 1u << cfg.n )}, {"ncf", c.ncf_total()}, {"by_layer_number", layers}, {"degenerate", c.degenerate}, {"not_ncf", c.not_ncf}};
    if ( cfg.oracle )
      j["disagreements"] = c.disagreements;
    out << j.dump( 2 ) << "\n";
    break;
  }
  case output_format::text:
    out << "tables: " << ( uint64_t( 1 ) << ( 1u << cfg.n ) ) << "\n"
        << "NCF: " << c.ncf_total() << "\n";
    for ( auto const& [r, count] : c.by_layer_number )
      out << "  r=" << r << ": " << count << "\n";
    if ( c.degenerate )
      out << "degenerate: " << c.degenerate << "\n";
    out << "not NCF: " << c.not_ncf << "\n";
    if ( cfg.oracle )
      out << "disagreements with the definition: " << c.disagreements << "\n";
    break;
  }
  if ( c.disagreements )
  {
    err << "error: decomposer and definition disagree on " << c.disagreements << " tables\n";
    return exit_error;
  }
  return exit_ok;
}

/* -------------------------------------------------------------------------- */

inline int cmd_selftest( std::string const& lvl, std::ostream& out, std::ostream& )
{
  if ( lvl != "quick" && lvl != "full" )
  {
    throw error( "selftest level must be quick or full" );
  }
  auto const results = acceptance::run( lvl == "full" ? acceptance::level::full : acceptance::level::quick, worker_count(),
                                        [&]( auto const& r ) { out << acceptance::format( r ) << std::endl; } );
  auto const passed = std::count_if( results.begin(), results.end(), []( auto const& r ) { return r.passed; } );
  out << passed << "/" << results.size() << " checks passed (" << lvl << ")\n";
  return acceptance::all_passed( results ) ? exit_ok : exit_error;
}

/* -------------------------------------------------------------------------- */

/*! \brief Parses the command line, runs one subcommand, returns the exit code */
inline int run( int argc, char const* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr )
{
  CLI::App app{"Nested canalyzing functions: analysis, counting, enumeration, sampling"};
  app.name( "ncfkit" );
  app.require_subcommand( 1 );

  auto add_format = []( CLI::App* sub, output_format& fmt, bool csv ) {
    auto* j = sub->add_flag_callback( "--json", [&fmt] { fmt = output_format::json; }, "JSON output" );
    if ( csv )
    {
      sub->add_flag_callback( "--csv", [&fmt] { fmt = output_format::csv; }, "CSV output" )->excludes( j );
    }
  };

  analyze_config acfg;
  auto* analyze = app.add_subcommand( "analyze", "Decompose a Boolean function and report its NCF invariants" );
  auto* o_anf = analyze->add_option( "--anf", acfg.anf, "algebraic normal form, e.g. \"x1*x2 + x3 + 1\"" );
  auto* o_bin = analyze->add_option( "--bin", acfg.bin, "truth table in binary, character t is f at x_i = bit i-1 of t" );
  auto* o_hex = analyze->add_option( "--hex", acfg.hex, "truth table in hex, leftmost digit is most significant" );
  o_anf->excludes( o_bin, o_hex );
  o_bin->excludes( o_hex );
  analyze->add_option( "--n", acfg.n, "number of variables (needed for hex tables shorter than 4 bits)" );
  analyze->add_flag( "--oracle", acfg.oracle, "cross-check every formula against brute force (n <= 8)" );
  add_format( analyze, acfg.format, false );

  count_config ccfg;
  auto* count = app.add_subcommand( "count", "Number of NCFs on n variables" );
  count->add_option( "n,--n", ccfg.n, "number of variables" )->required();
  count->add_option( "--r", ccfg.r, "only functions with this layer number" );
  count->add_flag( "--per-layer", ccfg.per_layer, "counts for every layer number" );
  add_format( count, ccfg.format, true );

  stream_config ecfg;
  auto* enumerate = app.add_subcommand( "enumerate", "Stream every NCF structure on n variables" );
  enumerate->add_option( "n,--n", ecfg.n, "number of variables" )->required();
  enumerate->add_option( "--r", ecfg.r, "only structures with this layer number" );
  enumerate->add_flag( "--tables", ecfg.tables, "append the hex truth table" );
  enumerate->add_flag( "--count", ecfg.count_only, "print only the number of structures" );
  add_format( enumerate, ecfg.format, false );

  stream_config scfg;
  auto* sample = app.add_subcommand( "sample", "Uniformly random NCF structures" );
  sample->add_option( "n,--n", scfg.n, "number of variables" )->required();
  sample->add_option( "--seed", scfg.seed, "random seed" );
  sample->add_option( "--count", scfg.samples, "number of draws (draw k uses seed + k)" );
  sample->add_flag( "--tables", scfg.tables, "append the hex truth table" );
  add_format( sample, scfg.format, false );

  scan_config xcfg;
  auto* scan = app.add_subcommand( "scan-conjecture", "Maximize the average sensitivity over all layer compositions" );
  scan->add_option( "n,--n", xcfg.n, "number of variables" )->required();
  scan->add_option( "--cap", xcfg.cap, "largest n accepted" );
  scan->add_flag( "--pruned", xcfg.pruned, "branch and bound instead of exhaustive search" );
  add_format( scan, xcfg.format, false );

  classify_config kcfg;
  auto* classify = app.add_subcommand( "classify", "Decompose every truth table on n <= 4 variables" );
  classify->add_option( "n,--n", kcfg.n, "number of variables" )->required();
  classify->add_flag( "--oracle", kcfg.oracle, "also test every table against the definition" );
  add_format( classify, kcfg.format, true );

  std::string level = "quick";
  auto* selftest = app.add_subcommand( "selftest", "Run the acceptance checks" );
  selftest->add_option( "level", level, "quick or full" )->check( CLI::IsMember( {"quick", "full"} ) );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_error;
  }

  try
  {
    if ( *analyze )
      return cmd_analyze( acfg, out, err );
    if ( *count )
      return cmd_count( ccfg, out, err );
    if ( *enumerate )
      return cmd_enumerate( ecfg, out, err );
    if ( *sample )
      return cmd_sample( scfg, out, err );
    if ( *scan )
      return cmd_scan( xcfg, out, err );
    if ( *classify )
      return cmd_classify( kcfg, out, err );
    return cmd_selftest( level, out, err );
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
  }
  return exit_error;
}

} // namespace ncfkit::cli
