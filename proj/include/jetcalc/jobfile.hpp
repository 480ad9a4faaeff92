#pragma once

#include <map>
#include <string>
#include <vector>

#include <jetcalc/analysis.hpp>

namespace jetcalc {

// A parsed job: named objects, integer options, and exactly one command with
// its argument names. Polynomials, maps, varieties and divisors capture the
// variable ring active at their declaration; points and jets are ring-free
// tuples whose lengths are checked at use.
struct JobFile {
    std::map<std::string, Polynomial> polys;
    std::map<std::string, std::vector<Rational>> points;
    std::map<std::string, PolyMap> maps;
    std::map<std::string, Jet> jets;
    std::map<std::string, AffineVariety> varieties;
    std::map<std::string, DivisorCandidate> divisors;
    std::map<std::string, int> options; // s_max, jet_order
    std::string command;
    std::vector<std::string> args;
};

// Line-oriented job format, versioned by a leading "jetcalc/1" line. One
// statement per line; "#" starts a comment. Statements: vars, poly, point,
// map, jet, variety, divisor, option, command. Every referenced name must be
// declared earlier, names are unique across kinds, and a job holds exactly
// one command. Malformed input raises ParseError with a 1-based position.
JobFile parse_job(const std::string& text);

} // namespace jetcalc
