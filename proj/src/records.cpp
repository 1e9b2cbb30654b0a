#include "markov/records.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <variant>

namespace markov {

namespace {

mpz_class pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

std::string zero_padded(const mpz_class& v, long width) {
    std::string s = v.get_str();
    return std::string(static_cast<size_t>(width) - s.size(), '0') + s;
}

// |x| truncated toward zero to exactly `digits` fractional digits
std::string truncated(const Rational& x, int digits) {
    mpz_class a = abs(x.num());
    mpz_class ip = a / x.den();
    mpz_class scaled = (a - ip * x.den()) * pow10(digits) / x.den();
    std::string sign = x.num() < 0 ? "-" : "";
    return sign + ip.get_str() + "." + zero_padded(scaled, digits);
}

}  // namespace

std::string fraction_str(const Rational& x) {
    if (x.is_infinity()) return "inf";
    if (x.den() == 1) return x.num().get_str();
    return x.num().get_str() + "/" + x.den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("not a fraction: \"" + text + "\""); };
    if (text == "inf") return Rational(1, mpz_class(0));
    auto parse_int = [&](const std::string& part, bool allow_sign) {
        size_t i = 0;
        bool neg = false;
        if (allow_sign && i < part.size() && (part[i] == '+' || part[i] == '-')) {
            neg = part[i] == '-';
            ++i;
        }
        if (i == part.size()) fail();
        for (size_t j = i; j < part.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(part[j]))) fail();
        mpz_class v(part.substr(i));
        return neg ? mpz_class(-v) : v;
    };
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    return Rational(parse_int(text.substr(0, slash), true),
                    parse_int(text.substr(slash + 1), false));
}

std::string decimal_preview(const Rational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("preview needs digits >= 1");
    if (x.is_infinity()) throw std::invalid_argument("no decimal preview at infinity");
    // short exact expansions print in full, everything else truncates
    mpz_class odd = x.den();
    long twos = 0, fives = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    while (odd % 5 == 0) {
        odd /= 5;
        ++fives;
    }
    long exponent = std::max(twos, fives);
    if (odd != 1 || exponent > digits) return truncated(x, digits);
    long width = std::max(exponent, 1L);
    mpz_class a = abs(x.num());
    mpz_class ip = a / x.den();
    mpz_class frac = (a - ip * x.den()) * pow10(width) / x.den();
    std::string sign = x.num() < 0 ? "-" : "";
    return sign + ip.get_str() + "." + zero_padded(frac, width);
}

std::string decimal_preview(const QuadraticSurd& s, int digits) {
    if (digits < 1) throw std::invalid_argument("preview needs digits >= 1");
    if (s.is_rational()) return decimal_preview(s.rational_value(), digits);
    // widen the enclosure until both ends show the same digits
    for (unsigned bits : {64u, 128u, 256u}) {
        auto [lo, hi] = surd_bracket(s, bits);
        std::string tlo = truncated(lo, digits);
        if (tlo == truncated(hi, digits)) return tlo;
    }
    return truncated(surd_bracket(s, 320).first, digits);
}

Json triple_record(const RationalMarkovTriple& t) {
    Json r;
    r["x1"] = fraction_str(t.x1);
    r["x2"] = fraction_str(t.x2);
    r["x3"] = fraction_str(t.x3);
    return r;
}

Json forest_node_record(const ForestNode& node, int digits) {
    Json r;
    r["interval"] = node.address.base.get_str();
    r["turns"] = node.address.turns;
    r["x1"] = fraction_str(node.triple.x1);
    r["x2"] = fraction_str(node.triple.x2);
    r["x3"] = fraction_str(node.triple.x3);
    r["x2_decimal"] = decimal_preview(node.triple.x2, digits);
    return r;
}

std::string forest_csv_header() { return "interval,turns,x1,x2,x3,x2_decimal"; }

std::string forest_csv_row(const ForestNode& node, int digits) {
    return node.address.base.get_str() + "," + node.address.turns + "," +
           fraction_str(node.triple.x1) + "," + fraction_str(node.triple.x2) + "," +
           fraction_str(node.triple.x3) + "," + decimal_preview(node.triple.x2, digits);
}

Json classification_record(const Rational& x, const Classification& c, int digits) {
    Json r;
    r["input"] = fraction_str(x);
    r["classification"] = classification_name(c);
    Rational constant = classified_constant(c);
    r["constant"] = fraction_str(constant);
    r["constant_decimal"] = decimal_preview(constant, digits);
    if (const auto* mf = std::get_if<MarkovFractionCase>(&c)) {
        r["triple"] = triple_record(mf->triple);
        r["argmins"] = Json::array({fraction_str(mf->triple.x1), fraction_str(mf->triple.x3)});
    } else if (const auto* comp = std::get_if<CompanionCase>(&c)) {
        const CompanionRef& ref = comp->ref;
        r["base"] = fraction_str(ref.base);
        r["side"] = std::string(1, side_char(ref.side));
        r["k"] = ref.k;
        std::vector<Rational> argmins{ref.base};
        if (ref.k > 2) argmins.push_back(gamma(ref.base, ref.side, ref.k - 1));
        std::sort(argmins.begin(), argmins.end());
        Json arr = Json::array();
        for (const Rational& m : argmins) arr.push_back(fraction_str(m));
        r["argmins"] = arr;
    } else {
        r["witness"] = fraction_str(std::get<NeitherCase>(c).witness);
    }
    return r;
}

Json strip_record(const TrianglePath& path, const LabeledStrip& strip) {
    Json r;
    Json tris = Json::array();
    for (const LatticeTriangle& t : path.triangles) {
        Json one;
        one["anchor"] = Json::array({t.anchor.m, t.anchor.n});
        one["orientation"] = t.orientation == Orientation::Up ? "up" : "down";
        tris.push_back(one);
    }
    r["triangles"] = tris;
    Json labels = Json::array();
    for (const auto& [point, label] : strip.entries()) {
        Json one;
        one["vertex"] = Json::array({point.m, point.n});
        one["label"] = fraction_str(label);
        labels.push_back(one);
    }
    r["labels"] = labels;
    return r;
}

Json mcshane_record(const McShaneSummary& s, long bits, int digits) {
    Json r;
    r["depth"] = s.depth;
    r["bits"] = bits;
    r["lower"] = fraction_str(s.partial_lo);
    r["upper"] = fraction_str(s.partial_hi);
    r["lower_decimal"] = decimal_preview(s.partial_lo, digits);
    r["upper_decimal"] = decimal_preview(s.partial_hi, digits);
    return r;
}

Json audit_record(const mpz_class& bound, const std::map<mpz_class, std::vector<Rational>>& table) {
    Json r;
    r["max_den"] = bound.get_str();
    bool unique = true;
    Json dens = Json::array();
    for (const auto& [q, fractions] : table) {
        Json one;
        one["q"] = q.get_str();
        Json fs = Json::array();
        for (const Rational& f : fractions) fs.push_back(fraction_str(f));
        one["fractions"] = fs;
        dens.push_back(one);
        if (fractions.size() != 1) unique = false;
    }
    r["all_unique"] = unique;
    r["denominators"] = dens;
    return r;
}

}  // namespace markov
