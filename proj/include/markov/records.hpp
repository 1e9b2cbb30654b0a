// Text and JSON serialization of the library's values: fraction strings,
// decimal previews, and the per-command output records.  Previews are for
// display only; every comparison elsewhere stays exact.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "markov/approximation.hpp"
#include "markov/companions.hpp"
#include "markov/eisenstein.hpp"
#include "markov/forest.hpp"
#include "markov/identities.hpp"
#include "markov/surd.hpp"

namespace markov {

using Json = nlohmann::ordered_json;

// "p/q", plain "n" for integers, "inf" for the point at infinity.
std::string fraction_str(const Rational& x);

// Inverse of fraction_str, with an optional leading sign; throws
// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Decimal expansion truncated toward zero to `digits` fractional digits,
// keeping trailing zeros; values whose exact expansion is shorter are printed
// exactly, with at least one fractional digit.
std::string decimal_preview(const Rational& x, int digits = 10);

// The same, reading the digits off a dyadic enclosure of the surd.
std::string decimal_preview(const QuadraticSurd& s, int digits = 10);

Json triple_record(const RationalMarkovTriple& t);
Json forest_node_record(const ForestNode& node, int digits);
std::string forest_csv_header();
std::string forest_csv_row(const ForestNode& node, int digits);

// Classification plus the data backing it: the centered triple, the companion
// reference, or the oracle witness.
Json classification_record(const Rational& x, const Classification& c, int digits);

Json strip_record(const TrianglePath& path, const LabeledStrip& strip);
Json mcshane_record(const McShaneSummary& s, long bits, int digits);
Json audit_record(const mpz_class& bound, const std::map<mpz_class, std::vector<Rational>>& table);

}  // namespace markov
