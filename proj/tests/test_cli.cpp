#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace ncfkit;
using nlohmann::json;

namespace
{
struct result
{
  int code;
  std::string out, err;
};

result run( std::vector<std::string> args )
{
  args.insert( args.begin(), "ncfkit" );
  std::vector<char const*> argv;
  for ( auto const& a : args )
    argv.push_back( a.c_str() );
  std::ostringstream out, err;
  int const code = cli::run( static_cast<int>( argv.size() ), argv.data(), out, err );
  return {code, out.str(), err.str()};
}

std::string const y_anf = "x1*x2*x3*x4*x5 + x1*x2*x3*x4 + x1*x2*x4*x5 + x1*x2*x4 + x1*x3*x4 + x1*x3 + x1*x4 + x1";
std::string const n_anf = "x1*x2*x3 + x2*x3*x4 + x1*x3 + x3*x4 + 1";
} // namespace

TEST_CASE( "analyze Y", "[cli]" )
{
  auto const r = run( {"analyze", "--oracle", "--anf", y_anf} );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "structure: 0 ⊕ (x1)(x3') [ (x4) [ (x2)(x5') ] ]" ) != std::string::npos );
  CHECK( r.out.find( "weight: 5 (oracle 5)" ) != std::string::npos );
  CHECK( r.out.find( "average sensitivity: 15/16 = 0.9375 (oracle 15/16)" ) != std::string::npos );
  CHECK( r.out.find( "oracle check: pass" ) != std::string::npos );

  auto const j = json::parse( run( {"analyze", "--json", "--oracle", "--anf", y_anf} ).out );
  CHECK( j["verdict"] == "NCF" );
  CHECK( j["composition"] == json::array( {2, 1, 2} ) );
  CHECK( j["layer_number"] == 3 );
  CHECK( j["weight"]["formula"] == "5" );
  CHECK( j["average_sensitivity"]["formula"] == json( {{"num", "15"}, {"log2den", 4}, {"decimal", "0.9375"}} ) );
  CHECK( j["activities"].size() == 5 );
  CHECK( j["activities"][0]["var"] == 1 );
  CHECK( j["activities"][0]["formula"]["num"] == "5" );
  CHECK( j["bounds"]["holds"] == true );
  CHECK( j["canalyzing_triples"] == json::parse( "[[1,0,0],[3,1,0]]" ) );
}

TEST_CASE( "analyze non-NCF inputs", "[cli]" )
{
  auto const n = run( {"analyze", "--anf", n_anf} );
  CHECK( n.code == 2 );
  CHECK( n.out.find( "witness: at depth 2 the residual x1 + x4 over x1 x4 has no canalyzing variable" ) != std::string::npos );
  CHECK( n.out.find( "canalyzing triples: <2:1:1> <3:0:1>" ) != std::string::npos );

  auto const j = json::parse( run( {"analyze", "--json", "--anf", n_anf} ).out );
  CHECK( j["verdict"] == "NotNCF" );
  CHECK( j["witness"]["depth"] == 2 );
  CHECK( j["witness"]["residual_anf"] == "x1 + x4" );

  CHECK( run( {"analyze", "--bin", "0110"} ).code == 2 );
  auto const ine = run( {"analyze", "--hex", "c", "--n", "2"} );
  CHECK( ine.code == 2 );
  CHECK( ine.out.find( "x1 is inessential" ) != std::string::npos );
  CHECK( run( {"analyze", "--bin", "1111"} ).code == 2 );
}

TEST_CASE( "analyze input errors", "[cli]" )
{
  auto const bad = run( {"analyze", "--anf", "x1 * * x2"} );
  CHECK( bad.code == 1 );
  CHECK( bad.err.find( "at position 5" ) != std::string::npos );
  CHECK( run( {"analyze", "--anf", "x25"} ).code == 1 );
  CHECK( run( {"analyze"} ).code == 1 );
  CHECK( run( {"analyze", "--bin", "01", "--hex", "1"} ).code == 1 );
  CHECK( run( {"analyze", "--bin", "012"} ).code == 1 );
  CHECK( run( {"analyze", "--bin", "0110", "--n", "3"} ).code == 1 );
}

TEST_CASE( "analyze single-variable function", "[cli]" )
{
  auto const r = run( {"analyze", "--bin", "01"} );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "structure: 0 ⊕ (x1)" ) != std::string::npos );
}

TEST_CASE( "count", "[cli]" )
{
  CHECK( run( {"count", "5"} ).out == "10624\nrecursion-check: pass\n" );
  CHECK( run( {"count", "--n", "2"} ).out == "8\nrecursion-check: pass\n" );
  CHECK( run( {"count", "4", "--per-layer"} ).out == "32,320,384\n736\nrecursion-check: pass\n" );
  CHECK( run( {"count", "4", "--r", "2"} ).out == "320\nrecursion-check: pass\n" );
  CHECK( run( {"count", "4", "--per-layer", "--csv"} ).out == "r,count\n1,32\n2,320\n3,384\ntotal,736\n" );
  auto const j = json::parse( run( {"count", "30", "--json"} ).out );
  CHECK( j["total"] == "7514511795369967055872595630267172787725533184" );
  CHECK( j["recursion_check"] == "pass" );
  CHECK( run( {"count", "1"} ).code == 1 );
  CHECK( run( {"count", "4", "--r", "4"} ).code == 1 );
  CHECK( run( {"count"} ).code == 1 );
  CHECK( run( {"count", "1001"} ).code == 1 );
  CHECK( run( {"count", "301", "--per-layer"} ).code == 1 );
}

TEST_CASE( "enumerate and sample", "[cli]" )
{
  auto const e = run( {"enumerate", "2", "--tables"} );
  CHECK( e.code == 0 );
  CHECK( e.out.rfind( "0 ⊕ (x1)(x2)\t1\n1 ⊕ (x1)(x2)\te\n", 0 ) == 0 );
  CHECK( std::count( e.out.begin(), e.out.end(), '\n' ) == 8 );
  CHECK( run( {"enumerate", "5", "--count"} ).out == "10624\n" );
  CHECK( run( {"enumerate", "4", "--r", "3", "--count"} ).out == "384\n" );
  auto const line = run( {"enumerate", "3", "--json"} ).out;
  CHECK( json::parse( line.substr( 0, line.find( '\n' ) ) ) == json::parse( R"({"n":3,"b":0,"layers":[[[1,0],[2,0],[3,0]]]})" ) );
  CHECK( run( {"enumerate", "4", "--r", "7"} ).code == 1 );

  /* draw k uses seed + k */
  auto const a = run( {"sample", "6", "--seed", "42", "--count", "3"} );
  CHECK( a.code == 0 );
  CHECK( run( {"sample", "6", "--seed", "42", "--count", "3"} ).out == a.out );
  std::istringstream lines( a.out );
  std::string first, second;
  std::getline( lines, first );
  std::getline( lines, second );
  CHECK( run( {"sample", "6", "--seed", "43"} ).out == second + "\n" );
  CHECK( run( {"sample", "25", "--tables"} ).code == 1 );
  CHECK( run( {"sample", "25"} ).code == 0 );
}

TEST_CASE( "scan-conjecture", "[cli]" )
{
  auto const r3 = run( {"scan-conjecture", "3"} );
  CHECK( r3.out.find( "max s: 5/4 = 1.25" ) != std::string::npos );
  CHECK( r3.out.find( "argmax (1): (1,2)" ) != std::string::npos );
  CHECK( r3.out.find( "conjecture: consistent" ) != std::string::npos );

  auto const j = json::parse( run( {"scan-conjecture", "6", "--json"} ).out );
  CHECK( j["max"]["num"] == "21" );
  CHECK( j["max"]["log2den"] == 4 );
  CHECK( j["argmax"].size() == 4 );
  CHECK( j["closed_forms"].size() == 3 );
  CHECK( j["conjecture"] == "consistent" );

  auto const r7 = run( {"scan-conjecture", "7", "--pruned"} );
  CHECK( r7.out.find( "max s: 85/64" ) != std::string::npos );
  CHECK( run( {"scan-conjecture", "31"} ).code == 1 );
  CHECK( run( {"scan-conjecture", "31", "--cap", "41"} ).code == 1 );
  CHECK( run( {"scan-conjecture", "2"} ).code == 1 );
}

TEST_CASE( "classify and selftest", "[cli]" )
{
  CHECK( run( {"classify", "3", "--csv"} ).out == "layer_number,count\n1,16\n2,48\nnot_ncf,192\n" );
  auto const j = json::parse( run( {"classify", "4", "--json", "--oracle"} ).out );
  CHECK( j["ncf"] == 736 );
  CHECK( j["disagreements"] == 0 );
  CHECK( run( {"classify", "5"} ).code == 1 );

  auto const q = run( {"selftest", "quick"} );
  CHECK( q.code == 0 );
  CHECK( q.out.find( "10/10 checks passed (quick)" ) != std::string::npos );
  CHECK( run( {"selftest", "slow"} ).code == 1 );
}

TEST_CASE( "help and unknown commands", "[cli]" )
{
  CHECK( run( {"--help"} ).code == 0 );
  CHECK( run( {"frobnicate"} ).code == 1 );
  CHECK( run( {} ).code == 1 );
}
