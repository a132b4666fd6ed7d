#include "singwords/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "singwords/binary_singular.hpp"
#include "singwords/classify.hpp"
#include "singwords/continuant.hpp"
#include "singwords/extremal.hpp"
#include "singwords/h_conditions.hpp"
#include "singwords/iet.hpp"
#include "singwords/json_io.hpp"
#include "singwords/language.hpp"
#include "singwords/streams.hpp"
#include "singwords/ternary_singular.hpp"
#include "singwords/tridiagonal.hpp"

namespace singwords {

namespace {

using nlohmann::json;

std::vector<long long> parse_digit_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in digit list");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty digit list");
    return out;
}

// "a=3,b=5,c=7" -> counts for the letters a, b and optionally c.
std::vector<std::pair<char, long long>> parse_parikh(const std::string& s) {
    std::vector<std::pair<char, long long>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("count vector entries look like letter=count");
        if (eq != 1) throw std::invalid_argument("letters are single characters");
        out.push_back({item[0], std::stoll(item.substr(eq + 1))});
    }
    return out;
}

std::vector<Rational> parse_lengths(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    return out;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& plain) {
    if (as_json)
        out << j.dump() << "\n";
    else
        out << plain;
}

std::string join_digits(const std::vector<long long>& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(d[i]);
    }
    return s;
}

struct CliState {
    std::ostream& out;
    bool json_mode = false;
};

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for extremal continuants, singular words and "
                 "symmetric interval exchanges"};
    app.require_subcommand(1);
    app.set_config("--config");

    // ---- continuant ----------------------------------------------------
    auto* cont = app.add_subcommand("continuant", "evaluate a continuant");
    std::string cont_kind = "regular";
    std::string cont_digits;
    bool cont_tridiagonal = false;
    bool cont_json = false;
    long long tridiagonal_cap = 10;
    cont->add_option("--kind", cont_kind, "regular or semi")
        ->check(CLI::IsMember({"regular", "semi"}));
    cont->add_option("--digits", cont_digits, "comma-separated digits")->required();
    cont->add_flag("--tridiagonal", cont_tridiagonal,
                   "also print the matrix permanent/determinant cross-check");
    cont->add_option("--tridiagonal-cap", tridiagonal_cap, "size cap for the matrix oracle");
    cont->add_flag("--json", cont_json);

    // ---- classify ------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "singular/reversible classification");
    std::string cls_alphabet, cls_word;
    bool cls_fast = false, cls_json = false;
    cls->add_option("--alphabet", cls_alphabet, "ordered alphabet, e.g. a<b<c")->required();
    cls->add_option("--word", cls_word, "the word to classify (may be empty)")->required();
    cls->add_flag("--fast", cls_fast, "inspect only v with distinct endpoints");
    cls->add_flag("--json", cls_json);

    // ---- construct -----------------------------------------------------
    auto* con = app.add_subcommand("construct",
                                   "singular word with given letter counts (binary or ternary)");
    std::string con_parikh;
    bool con_json = false;
    con->add_option("--parikh", con_parikh, "e.g. a=3,b=5,c=7")->required();
    con->add_flag("--json", con_json);

    // ---- christoffel ---------------------------------------------------
    auto* chr = app.add_subcommand("christoffel", "lower Christoffel word");
    long long chr_p = 0, chr_q = 0, chr_power = 1;
    bool chr_json = false;
    chr->add_option("--p", chr_p, "number of a's")->required();
    chr->add_option("--q", chr_q, "number of b's")->required();
    chr->add_option("--power", chr_power, "repeat the word this many times");
    chr->add_flag("--json", chr_json);

    // ---- search --------------------------------------------------------
    auto* sea = app.add_subcommand("search", "brute-force extremal arrangement search");
    std::string sea_multiset, sea_objective = "semi-max";
    long long sea_cap = 12;
    int sea_threads = 1;
    bool sea_json = false, sea_pattern = false;
    sea->add_option("--multiset", sea_multiset, "comma-separated digits")->required();
    sea->add_option("--objective", sea_objective,
                    "regular-max, regular-min, semi-max or semi-min");
    sea->add_option("--cap", sea_cap, "largest multiset size accepted");
    sea->add_option("--threads", sea_threads, "worker threads");
    sea->add_flag("--pattern", sea_pattern,
                  "also print the closed-form regular-max arrangement");
    sea->add_flag("--json", sea_json);

    // ---- verify ----------------------------------------------------------
    auto* ver = app.add_subcommand("verify",
                                   "sweep ternary count vectors against the brute-force maximum");
    long long ver_max_total = 8;
    std::string ver_assignment = "2,3,4";
    int ver_threads = 1;
    bool ver_json = false;
    ver->add_option("--max-total", ver_max_total, "largest component sum")->required();
    ver->add_option("--assignment", ver_assignment, "digits for a,b,c (increasing, >= 2)");
    ver->add_option("--threads", ver_threads, "worker threads");
    ver->add_flag("--json", ver_json);

    // ---- markoff ---------------------------------------------------------
    auto* mar = app.add_subcommand("markoff", "Markoff property of a bi-infinite binary word");
    std::string mar_left, mar_center, mar_right, mar_alphabet = "ab";
    bool mar_json = false;
    mar->add_option("--left", mar_left, "left tail period")->required();
    mar->add_option("--center", mar_center, "center block (may be empty)");
    mar->add_option("--right", mar_right, "right tail period")->required();
    mar->add_option("--alphabet", mar_alphabet, "ordered binary alphabet");
    mar->add_flag("--json", mar_json);

    // ---- window ----------------------------------------------------------
    auto* win = app.add_subcommand("window", "bounded reversible-factorization search");
    std::string win_left, win_center, win_right, win_pre, win_period, win_alphabet;
    long long win_radius = 30;
    bool win_json = false;
    win->add_option("--left", win_left, "left tail period (bi-infinite mode)");
    win->add_option("--center", win_center, "center block (bi-infinite mode)");
    win->add_option("--right", win_right, "right tail period (bi-infinite mode)");
    win->add_option("--pre", win_pre, "preperiod (one-sided mode)");
    win->add_option("--period", win_period, "period (one-sided mode)");
    win->add_option("--radius", win_radius, "window radius");
    win->add_option("--alphabet", win_alphabet, "ordered alphabet (default: letters present)");
    win->add_flag("--json", win_json);

    // ---- iet ---------------------------------------------------------------
    auto* iet = app.add_subcommand("iet", "symmetric interval exchange transformations");
    iet->require_subcommand(1);

    auto* iet_code = iet->add_subcommand("code", "natural coding of a point");
    std::string code_lengths, code_point = "0", code_window = "0:0";
    bool code_json = false;
    iet_code->add_option("--lengths", code_lengths, "interval lengths, e.g. 1/3,1/4,5/12")
        ->required();
    iet_code->add_option("--point", code_point, "rational point in [0,1)");
    iet_code->add_option("--window", code_window, "index window lo:hi");
    iet_code->add_flag("--json", code_json);

    auto* iet_check = iet->add_subcommand("check", "language conditions of a coding");
    std::string check_lengths, check_point = "0";
    long long check_window = 4000;
    int check_maxlen = 8;
    long long check_span = 256;
    bool check_json = false;
    iet_check->add_option("--lengths", check_lengths, "interval lengths")->required();
    iet_check->add_option("--point", check_point, "rational point in [0,1)");
    iet_check->add_option("--window", check_window, "total coding window length");
    iet_check->add_option("--max-factor-len", check_maxlen, "collected factor length");
    iet_check->add_option("--span", check_span, "span for the recurrence surrogate");
    iet_check->add_flag("--json", check_json);

    auto* iet_mor = iet->add_subcommand("morphic", "prefix of a morphic image");
    std::vector<std::string> mor_rules;
    std::string mor_prefix;
    long long mor_fib = 0, mor_length = 0;
    std::string mor_seed;
    bool mor_json = false;
    iet_mor->add_option("--rule", mor_rules, "letter=image (repeatable)")->required();
    iet_mor->add_option("--seed", mor_seed, "explicit seed word");
    iet_mor->add_option("--seed-fibonacci", mor_fib, "use this many Fibonacci-word letters as seed");
    iet_mor->add_option("--prefix", mor_prefix, "prepended to the seed");
    iet_mor->add_option("--length", mor_length, "output length")->required();
    iet_mor->add_flag("--json", mor_json);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cont->parsed()) {
            DigitSequence d = parse_digit_list(cont_digits);
            BigInt value = cont_kind == "semi" ? continuant_semiregular(d) : continuant_regular(d);
            json j = json_envelope("continuant");
            j["kind"] = cont_kind;
            j["digits"] = d;
            j["value"] = value.to_string();
            std::string plain = value.to_string() + "\n";
            if (cont_tridiagonal) {
                TridiagonalResult t = tridiagonal_check(d, static_cast<size_t>(tridiagonal_cap));
                j["tridiagonal"] = {{"permanent", t.permanent.to_string()},
                                    {"determinant", t.determinant.to_string()}};
                plain += "permanent " + t.permanent.to_string() + "\n";
                plain += "determinant " + t.determinant.to_string() + "\n";
            }
            emit(out, cont_json, j, plain);
        } else if (cls->parsed()) {
            AlphabetPtr alpha = OrderedAlphabet::shared(cls_alphabet);
            Word word(alpha, cls_word);
            Classification c = cls_fast ? classify_singular_fast(word) : classify_singular(word);
            json j = json_envelope("classify");
            j["alphabet"] = alpha->to_string();
            j["word"] = word.text();
            j.update(to_json(c));
            std::string plain;
            if (c.verdict == Verdict::singular) {
                plain = "singular\n";
            } else {
                plain = "reversible u=" + c.witness->u.text() + " v=" + c.witness->v.text() +
                        " w=" + c.witness->w.text() + "\n";
            }
            emit(out, cls_json, j, plain);
        } else if (con->parsed()) {
            auto entries = parse_parikh(con_parikh);
            json j = json_envelope("construct");
            SingularPair pair = [&] {
                if (entries.size() == 2 && entries[0].first == 'a' && entries[1].first == 'b')
                    return binary_singular_from_parikh(entries[0].second, entries[1].second);
                if (entries.size() == 3 && entries[0].first == 'a' && entries[1].first == 'b' &&
                    entries[2].first == 'c')
                    return construct_ternary(
                        {entries[0].second, entries[1].second, entries[2].second});
                throw std::invalid_argument("counts must name a,b or a,b,c in order");
            }();
            json counts;
            for (auto& [letter, count] : entries) counts[std::string(1, letter)] = count;
            j["parikh"] = counts;
            j["word"] = pair.word.text();
            j["reverse"] = pair.reversed.text();
            emit(out, con_json, j, pair.word.text() + "\n");
        } else if (chr->parsed()) {
            if (chr_power < 1) throw std::domain_error("power must be positive");
            Word base = christoffel(chr_p, chr_q);
            std::string text;
            for (long long i = 0; i < chr_power; ++i) text += base.text();
            json j = json_envelope("christoffel");
            j["p"] = chr_p;
            j["q"] = chr_q;
            j["power"] = chr_power;
            j["word"] = text;
            emit(out, chr_json, j, text + "\n");
        } else if (sea->parsed()) {
            Multiset m(parse_digit_list(sea_multiset));
            SearchOptions opt;
            opt.cap = sea_cap;
            opt.threads = sea_threads;
            ExtremalResult r = brute_extremal(m, parse_objective(sea_objective), opt);
            json j = json_envelope("search");
            j.update(to_json(r));
            std::string plain = "value " + r.value.to_string() + "\n";
            for (const auto& arr : r.argext) plain += "arrangement " + join_digits(arr) + "\n";
            plain += std::string("unique ") + (r.unique_up_to_reversal ? "yes" : "no") + "\n";
            if (sea_pattern) {
                std::vector<long long> pat = regular_max_pattern(m);
                j["regular_max_pattern"] = pat;
                plain += "regular-max-pattern " + join_digits(pat) + "\n";
            }
            emit(out, sea_json, j, plain);
        } else if (ver->parsed()) {
            std::vector<long long> digits = parse_digit_list(ver_assignment);
            if (digits.size() != 3)
                throw std::invalid_argument("assignment needs exactly three digits");
            ConjectureReport r = verify_ternary_conjecture(
                ver_max_total, {digits[0], digits[1], digits[2]}, ver_threads);
            json j = json_envelope("verify");
            j["max_total"] = ver_max_total;
            j["assignment"] = digits;
            j.update(to_json(r));
            std::string plain = "checked " + std::to_string(r.vectors_checked) +
                                " vectors, violations " + std::to_string(r.violations.size()) +
                                "\n";
            for (const auto& v : r.violations)
                plain += "violation a=" + std::to_string(v.vector[0]) +
                         ",b=" + std::to_string(v.vector[1]) +
                         ",c=" + std::to_string(v.vector[2]) + ": " + v.reason + "\n";
            emit(out, ver_json, j, plain);
        } else if (mar->parsed()) {
            AlphabetPtr alpha = OrderedAlphabet::shared(mar_alphabet);
            BiWord x(alpha, mar_left, mar_center, mar_right);
            MarkoffResult r = markoff_check(x);
            json j = json_envelope("markoff");
            j["biword"] = {{"left", mar_left}, {"center", mar_center}, {"right", mar_right}};
            j.update(to_json(r));
            std::string plain =
                r.holds ? "holds\n"
                        : "violation at occurrence " + std::to_string(r.violation->occurrence) +
                              "\n";
            emit(out, mar_json, j, plain);
        } else if (win->parsed()) {
            bool biword_mode = !win_left.empty() || !win_right.empty();
            bool stream_mode = !win_period.empty();
            if (biword_mode == stream_mode)
                throw std::invalid_argument(
                    "give either --left/--right (and optionally --center) or --pre/--period");
            std::string letters_used = win_alphabet;
            if (letters_used.empty()) {
                std::string pool = win_left + win_center + win_right + win_pre + win_period;
                std::string distinct;
                for (char c : pool)
                    if (distinct.find(c) == std::string::npos) distinct.push_back(c);
                std::sort(distinct.begin(), distinct.end());
                letters_used = distinct;
            }
            AlphabetPtr alpha = OrderedAlphabet::shared(letters_used);
            WindowVerdict v = biword_mode
                                  ? window_singular_check(
                                        BiWord(alpha, win_left, win_center, win_right), win_radius)
                                  : window_singular_check(Stream(alpha, win_pre, win_period),
                                                          win_radius);
            json j = json_envelope("window");
            j.update(to_json(v));
            std::string plain =
                v.violation_found
                    ? "definite-violation v=[" + std::to_string(v.witness->v_begin) + "," +
                          std::to_string(v.witness->v_end) + ")\n"
                    : "no-violation-within " + std::to_string(v.radius) + "\n";
            emit(out, win_json, j, plain);
        } else if (iet_code->parsed()) {
            IETSpec spec(parse_lengths(code_lengths));
            size_t colon = code_window.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("window looks like lo:hi");
            long long lo = std::stoll(code_window.substr(0, colon));
            long long hi = std::stoll(code_window.substr(colon + 1));
            CodingWindow cw = natural_coding(spec, Rational::parse(code_point), lo, hi);
            json j = json_envelope("iet-code");
            j["lengths"] = code_lengths;
            j["point"] = code_point;
            j["lo"] = cw.lo;
            j["coding"] = cw.letters.text();
            emit(out, code_json, j, cw.letters.text() + "\n");
        } else if (iet_check->parsed()) {
            IETSpec spec(parse_lengths(check_lengths));
            long long half = check_window / 2;
            CodingWindow cw =
                natural_coding(spec, Rational::parse(check_point), -half, check_window - half - 1);
            FactorLanguage lang = FactorLanguage::collect(cw.letters, check_maxlen);
            SocResult soc = soc_check(lang);
            SymmetryResult sym = symmetry_check(lang);
            HOptions hopt;
            hopt.h1_span = check_span;
            HReport rep = h_conditions_check(lang, spec.k(), hopt);
            json j = json_envelope("iet-check");
            j["lengths"] = check_lengths;
            j["point"] = check_point;
            j["window"] = check_window;
            j["max_factor_len"] = check_maxlen;
            j["soc"] = soc.holds;
            j["symmetric"] = sym.symmetric;
            j["extendable"] = lang.extendable();
            j["report"] = to_json(rep);
            std::ostringstream plain;
            plain << "soc " << (soc.holds ? "pass" : "FAIL") << "\n";
            plain << "symmetric " << (sym.symmetric ? "pass" : "FAIL") << "\n";
            auto line = [&](const char* name, const ConditionVerdict& c) {
                plain << name << " " << (c.holds ? "pass" : "FAIL");
                if (!c.witness.empty()) plain << " (" << c.witness << ")";
                if (c.surrogate) plain << " [surrogate]";
                plain << "\n";
            };
            line("h0", rep.h0);
            line("h1", rep.h1);
            line("h2", rep.h2);
            line("h3", rep.h3);
            line("h4", rep.h4);
            line("h5", rep.h5);
            line("intervals", rep.interval_property);
            line("idoc-hypothesis", rep.idoc_hypothesis);
            emit(out, check_json, j, plain.str());
        } else if (iet_mor->parsed()) {
            std::map<char, std::string> rules;
            for (const std::string& r : mor_rules) {
                size_t eq = r.find('=');
                if (eq != 1) throw std::invalid_argument("rules look like letter=image");
                rules[r[0]] = r.substr(eq + 1);
            }
            std::string seed_text = mor_prefix;
            if (mor_fib > 0) seed_text += fibonacci_word(static_cast<size_t>(mor_fib)).text();
            seed_text += mor_seed;
            std::string seed_letters;
            for (auto& [c, image] : rules) {
                (void)image;
                seed_letters.push_back(c);
            }
            Word seed(std::make_shared<const OrderedAlphabet>(seed_letters), seed_text);
            Word result = morphic_word(rules, seed, static_cast<size_t>(mor_length));
            json j = json_envelope("iet-morphic");
            j["length"] = mor_length;
            j["word"] = result.text();
            emit(out, mor_json, j, result.text() + "\n");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace singwords
