#include "markov/cli.hpp"

#include <CLI11.hpp>

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "markov/parallel.hpp"
#include "markov/records.hpp"

namespace markov {

namespace {

// fraction arguments that fail to parse are usage errors, not domain errors
Rational fraction_arg(const std::string& text, bool allow_infinity = false) {
    Rational x;
    try {
        x = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
    if (!allow_infinity && x.is_infinity())
        throw CLI::ValidationError("expected a finite fraction, got \"" + text + "\"");
    return x;
}

void emit(std::ostream& out, const Json& record) { out << record.dump(2) << "\n"; }

void print_tree(std::ostream& out, const RationalMarkovTriple& t, long level,
                const std::optional<long>& max_depth, const std::optional<mpz_class>& max_den,
                int digits) {
    if (max_depth && level > *max_depth) return;
    if (max_den && t.x2.den() > *max_den) return;
    out << std::string(static_cast<size_t>(2 * level), ' ') << fraction_str(t.x2) << "  "
        << decimal_preview(t.x2, digits) << "\n";
    print_tree(out, left_child(t), level + 1, max_depth, max_den, digits);
    print_tree(out, right_child(t), level + 1, max_depth, max_den, digits);
}

Json companion_side_record(const Rational& base, Side side, long count, int digits) {
    Json r;
    r["side"] = std::string(1, side_char(side));
    Json list = Json::array();
    for (long k = 2; k <= count + 1; ++k) {
        Rational value = gamma(base, side, k);
        Json one;
        one["k"] = k;
        one["value"] = fraction_str(value);
        one["decimal"] = decimal_preview(value, digits);
        list.push_back(one);
    }
    r["companions"] = list;
    SurdInterval box = interval(base);
    const QuadraticSurd& limit = side == Side::Left ? box.lo : box.hi;
    r["limit"] = limit.str();
    r["limit_decimal"] = decimal_preview(limit, digits);
    return r;
}

struct ForestArgs {
    long interval = 0;
    long max_den = 0;
    long max_depth = -1;
    bool has_den = false, has_depth = false;
    std::string format = "tree";
    int digits = 10;
};

void run_forest(const ForestArgs& args, std::ostream& out) {
    if (args.has_den == args.has_depth)
        throw CLI::ValidationError("give exactly one of --max-den and --max-depth");
    std::optional<long> depth;
    std::optional<mpz_class> den;
    ForestLimit limit = args.has_den ? ForestLimit::denominator(args.max_den)
                                     : ForestLimit::depth(args.max_depth);
    if (args.has_den)
        den = args.max_den;
    else
        depth = args.max_depth;
    if (args.format == "tree") {
        print_tree(out, interval_root(args.interval), 0, depth, den, args.digits);
    } else if (args.format == "csv") {
        out << forest_csv_header() << "\n";
        enumerate_forest(args.interval, limit,
                         [&](const ForestNode& n) { out << forest_csv_row(n, args.digits) << "\n"; });
    } else {
        Json r;
        r["interval"] = std::to_string(args.interval);
        Json nodes = Json::array();
        enumerate_forest(args.interval, limit,
                         [&](const ForestNode& n) { nodes.push_back(forest_node_record(n, args.digits)); });
        r["nodes"] = nodes;
        emit(out, r);
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Markov fractions, their companions, and approximation constants"};
    app.require_subcommand(1);

    ForestArgs forest_args;
    CLI::App* forest = app.add_subcommand("forest", "centered-triple forest of an interval");
    forest->add_option("--interval", forest_args.interval, "unit interval [n, n+1]");
    CLI::Option* den_opt =
        forest->add_option("--max-den", forest_args.max_den, "keep middles with denominator <= Q")
            ->check(CLI::PositiveNumber);
    CLI::Option* depth_opt = forest->add_option("--max-depth", forest_args.max_depth, "descend D levels")
                                 ->check(CLI::NonNegativeNumber);
    forest->add_option("--format", forest_args.format, "tree, json, or csv")
        ->check(CLI::IsMember({"tree", "json", "csv"}));
    forest->add_option("--digits", forest_args.digits, "decimal preview digits")
        ->check(CLI::PositiveNumber);
    forest->callback([&] {
        forest_args.has_den = den_opt->count() > 0;
        forest_args.has_depth = depth_opt->count() > 0;
        run_forest(forest_args, out);
    });

    std::string classify_input;
    bool with_oracle = false;
    int classify_digits = 10;
    CLI::App* cls = app.add_subcommand("classify", "classify a fraction by approximability");
    cls->add_option("x", classify_input, "fraction p/q")->required();
    cls->add_flag("--oracle", with_oracle, "cross-check against the brute-force search");
    cls->add_option("--digits", classify_digits, "decimal preview digits")->check(CLI::PositiveNumber);
    cls->callback([&] {
        Rational x = fraction_arg(classify_input);
        Classification c = classify(x);
        Json r = classification_record(x, c, classify_digits);
        if (with_oracle) {
            BestApproximation oracle = c_constant_bruteforce(x);
            Json o;
            o["constant"] = fraction_str(oracle.constant);
            Json arr = Json::array();
            for (const Rational& m : oracle.argmins) arr.push_back(fraction_str(m));
            o["argmins"] = arr;
            o["agrees"] = oracle.constant == classified_constant(c);
            r["oracle"] = o;
        }
        emit(out, r);
    });

    std::string companions_base;
    long companions_count = 5;
    std::string companions_side = "both";
    int companions_digits = 10;
    CLI::App* comp = app.add_subcommand("companions", "companions and their limit for a base");
    comp->add_option("base", companions_base, "Markov fraction p/q")->required();
    comp->add_option("--count", companions_count, "how many companions")->check(CLI::PositiveNumber);
    comp->add_option("--side", companions_side, "L, R, or both")
        ->check(CLI::IsMember({"L", "R", "both"}));
    comp->add_option("--digits", companions_digits, "decimal preview digits")
        ->check(CLI::PositiveNumber);
    comp->callback([&] {
        Rational base = fraction_arg(companions_base);
        Json r;
        r["base"] = fraction_str(base);
        Json sides = Json::array();
        if (companions_side != "R")
            sides.push_back(
                companion_side_record(base, Side::Left, companions_count, companions_digits));
        if (companions_side != "L")
            sides.push_back(
                companion_side_record(base, Side::Right, companions_count, companions_digits));
        r["sides"] = sides;
        emit(out, r);
    });

    std::string mu_input;
    bool mu_inverted = false;
    CLI::App* mu_cmd = app.add_subcommand("mu", "Stern-Brocot label to Markov fraction");
    mu_cmd->add_option("label", mu_input, "label n/m, or a fraction with --inverse")->required();
    mu_cmd->add_flag("--inverse", mu_inverted, "look up the label of a Markov fraction");
    mu_cmd->callback([&] {
        Rational given = fraction_arg(mu_input, !mu_inverted);
        Json r;
        if (mu_inverted) {
            r["label"] = fraction_str(mu_inverse(given));
            r["value"] = fraction_str(given);
        } else {
            r["label"] = fraction_str(given);
            r["value"] = fraction_str(mu(given));
        }
        emit(out, r);
    });

    long snake_m = 0, snake_n = 0, snake_k = 0;
    std::string snake_side = "R";
    CLI::App* snake = app.add_subcommand("snake", "labeled triangle strip along a segment");
    snake->add_option("m", snake_m, "target m")->required();
    snake->add_option("n", snake_n, "target n")->required();
    CLI::Option* k_opt = snake->add_option("--k", snake_k, "bend after k copies")
                             ->check(CLI::Range(2l, std::numeric_limits<long>::max()));
    snake->add_option("--side", snake_side, "bend direction L or R")
        ->check(CLI::IsMember({"L", "R"}))
        ->needs(k_opt);
    snake->callback([&] {
        bool bent = k_opt->count() > 0;
        TrianglePath path =
            bent ? bent_path(snake_m, snake_n, snake_k, side_from_char(snake_side[0]))
                 : segment_path(snake_m, snake_n);
        LabeledStrip strip = label_path(path);
        Json r;
        r["m"] = snake_m;
        r["n"] = snake_n;
        r["path"] = bent ? "bent" : "straight";
        if (bent) {
            r["k"] = snake_k;
            r["side"] = snake_side;
        }
        EisensteinPoint terminal{bent ? snake_k * snake_m : snake_m,
                                 bent ? snake_k * snake_n : snake_n};
        r["terminal"] = fraction_str(strip.label_at(terminal));
        Json body = strip_record(path, strip);
        r["triangles"] = body["triangles"];
        r["labels"] = body["labels"];
        emit(out, r);
    });

    long mcshane_depth = 0, mcshane_bits = 64;
    int mcshane_jobs = 0, mcshane_digits = 10;
    CLI::App* mcs = app.add_subcommand("mcshane", "two-sided partial sums of the series at 3");
    mcs->add_option("--depth", mcshane_depth, "tree depth per unit interval")->required();
    mcs->add_option("--bits", mcshane_bits, "dyadic resolution of each term");
    mcs->add_option("--jobs", mcshane_jobs, "worker threads, 0 = serial");
    mcs->add_option("--digits", mcshane_digits, "decimal preview digits")->check(CLI::PositiveNumber);
    mcs->callback([&] {
        McShaneSummary s = mcshane_jobs > 0
                               ? mcshane_partial_sum_parallel(mcshane_depth, mcshane_bits, mcshane_jobs)
                               : mcshane_partial_sum(mcshane_depth, mcshane_bits);
        emit(out, mcshane_record(s, mcshane_bits, mcshane_digits));
    });

    long audit_bound = 0;
    CLI::App* audit = app.add_subcommand("audit", "Markov fractions sharing a denominator");
    audit->add_option("--max-den", audit_bound, "denominator bound")
        ->required()
        ->check(CLI::PositiveNumber);
    audit->callback([&] { emit(out, audit_record(audit_bound, audit_uniqueness(audit_bound))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace markov
