#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idemca/ca.hpp"
#include "idemca/coding.hpp"
#include "idemca/eraser.hpp"
#include "idemca/errors.hpp"
#include "idemca/finite.hpp"
#include "idemca/language.hpp"
#include "idemca/marker.hpp"
#include "idemca/membership.hpp"
#include "idemca/periodic.hpp"
#include "idemca/rule_io.hpp"

namespace idemca::cli {

namespace {

using nlohmann::json;

CellularAutomaton load_rule(const std::string& spec) {
    if (spec.rfind("eca:", 0) == 0) return parse_rule_spec(spec);
    std::ifstream in(spec);
    if (!in) throw ParseError(1, 1, "cannot open rule file '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_rule_text(buffer.str());
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void cmd_analyze(std::ostream& out, const std::string& rule_spec, bool as_json,
                 std::uint64_t budget) {
    const CellularAutomaton ca = load_rule(rule_spec);
    const MooreMyhillReport report = moore_myhill_crosscheck(ca, budget);
    if (as_json) {
        json j;
        j["surjective"] = report.surjective;
        j["preinjective"] = report.preinjective;
        j["orphan"] = report.orphan ? json(format_digits(*report.orphan)) : json(nullptr);
        if (report.diamond) {
            j["diamond"] = {{"prefix", format_digits(report.diamond->prefix)},
                            {"mid_a", format_digits(report.diamond->mid_a)},
                            {"mid_b", format_digits(report.diamond->mid_b)},
                            {"suffix", format_digits(report.diamond->suffix)}};
        } else {
            j["diamond"] = nullptr;
        }
        out << j.dump() << "\n";
        return;
    }
    out << "rule: " << rule_spec << "\n";
    out << "surjective: " << yesno(report.surjective) << "\n";
    out << "preinjective: " << yesno(report.preinjective) << "\n";
    out << "orphan: " << (report.orphan ? format_digits(*report.orphan) : "-") << "\n";
    if (report.diamond) {
        out << "diamond: prefix=" << format_digits(report.diamond->prefix)
            << " mid_a=" << format_digits(report.diamond->mid_a)
            << " mid_b=" << format_digits(report.diamond->mid_b)
            << " suffix=" << format_digits(report.diamond->suffix) << "\n";
    } else {
        out << "diamond: -\n";
    }
}

void cmd_eq1(std::ostream& out, const std::string& rule_spec, int bound, std::uint64_t budget) {
    const CellularAutomaton ca = load_rule(rule_spec);
    out << "n\t|Q_n|\tmaps_onto\tidentity\twitness\n";
    for (int n = 1; n <= bound; ++n) {
        const PeriodicOrbitSet q = enumerate_periodic(ca.alphabet_size(), n, budget);
        const Eq1Report report = eq1_check(ca, n, budget);
        out << n << "\t" << q.points.size() << "\t" << yesno(report.maps_onto) << "\t";
        out << (report.maps_onto ? yesno(report.is_identity_on) : "-") << "\t";
        out << (report.violation_witness ? report.violation_witness->str() : "-") << "\n";
    }
}

void cmd_membership(std::ostream& out, const std::string& rule_spec, int bound, bool as_json,
                    std::uint64_t budget) {
    const CellularAutomaton ca = load_rule(rule_spec);
    const MembershipVerdict verdict = decide_membership(ca, bound, budget);
    if (as_json) {
        json j;
        switch (verdict.kind) {
            case MembershipVerdict::Kind::In: j["verdict"] = "In"; break;
            case MembershipVerdict::Kind::Out: j["verdict"] = "Out"; break;
            case MembershipVerdict::Kind::ConsistentUpTo: j["verdict"] = "ConsistentUpTo"; break;
        }
        if (verdict.certificate) {
            json c{{"kind", certificate_name(*verdict.certificate)}};
            if (verdict.stabilization_power) c["m"] = *verdict.stabilization_power;
            if (verdict.spreading_symbol) c["spreading_state"] = static_cast<int>(*verdict.spreading_symbol);
            j["certificate"] = c;
        } else {
            j["certificate"] = nullptr;
        }
        if (verdict.witness) {
            json w{{"kind", witness_name(*verdict.witness)}};
            if (verdict.eq1_violation) {
                w["n"] = verdict.eq1_violation->n;
                w["point"] = verdict.eq1_violation->violation_witness->str();
            }
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["bound"] = verdict.bound;
        out << j.dump() << "\n";
        return;
    }
    out << explain(verdict);
}

void cmd_eraser(std::ostream& out, const std::string& rule_spec, int verify_bound, int trials,
                std::uint64_t seed, std::uint64_t budget) {
    const CellularAutomaton ca = load_rule(rule_spec);
    const Eraser eraser = build_eraser(ca, budget);
    out << "u: " << format_digits(eraser.u()) << "\n";
    out << "u_prime: " << format_digits(eraser.u_prime()) << "\n";
    out << "radius: " << eraser.radius() << "\n";
    const EraserReport report = verify_eraser(eraser, ca, verify_bound, trials, seed);
    out << "idempotent: " << (report.idempotent_ok ? "pass" : "FAIL") << "\n";
    out << "image_preserved: " << (report.image_preserved_ok ? "pass" : "FAIL") << "\n";
    out << "collision_witness: " << (report.witness_ok ? "pass" : "FAIL") << "\n";
    out << "configurations_checked: " << report.configurations_checked << "\n";
}

void cmd_marker(std::ostream& out, int k, int N, const std::string& input,
                std::uint64_t budget) {
    const Marker marker(k, N, budget);
    if (input.rfind("cyclic:", 0) == 0) {
        const Word period = parse_digits(input.substr(7), k);
        const CyclicWord x{period};
        const CyclicWord marks = marker.mark_cyclic(x);
        const std::size_t n = static_cast<std::size_t>(x.least_period());
        out << "input:  " << format_digits(x.period_word()) << " (cyclic)\n";
        out << "output: " << format_digits(marks.expand(n)).substr(0, n) << "\n";
        return;
    }
    const Word x = parse_digits(input, k);
    const Word marks = marker.mark_word(x);
    out << "input:  " << format_digits(x) << "\n";
    out << "output: " << std::string(static_cast<std::size_t>(N), ' ') << format_digits(marks)
        << "\n";
}

void cmd_decompose_finite(std::ostream& out, const std::string& map_text) {
    FiniteFunction f;
    std::stringstream in(map_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            f.images.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("--map expects comma-separated images, got '" + item + "'");
        }
    }
    for (int v : f.images)
        if (v < 0 || v >= f.domain_size())
            throw std::invalid_argument("image " + std::to_string(v) + " out of range");

    const FiniteFactorization fact = decompose_finite(f);
    out << "factors: " << fact.factors.size() << "\n";
    for (const FiniteFunction& g : fact.factors) {
        for (int i = 0; i < g.domain_size(); ++i) out << (i ? "," : "") << g.apply(i);
        out << "\n";
    }
    out << "verified: " << yesno(verify_factorization(fact)) << "\n";
}

void cmd_oracle(std::ostream& out, int k, int m, std::uint64_t budget) {
    const OracleReport report = monoid_closure_oracle(k, m, budget);
    out << "k: " << report.k << "\n";
    out << "m: " << report.m << "\n";
    out << "equivariant_maps: " << report.map_count << "\n";
    out << "idempotents: " << report.idempotent_count << "\n";
    out << "closure_size: " << report.closure_size << "\n";
    out << "condition_size: " << report.condition_size << "\n";
    out << "equal: " << yesno(report.equal) << "\n";
    for (const auto& images : report.counterexamples) {
        out << "counterexample:";
        for (int v : images) out << " " << v;
        out << "\n";
    }
}

void cmd_coding_kit(std::ostream& out, const std::string& v_digits, int k, std::uint64_t budget) {
    const Word v = parse_digits(v_digits, k);
    const CodingKit kit = build_coding_kit(v, k, 8, budget);
    out << "v: " << format_digits(kit.triple().v) << "\n";
    out << "w: " << format_digits(kit.triple().w) << "\n";
    out << "w0: " << format_digits(kit.triple().w0) << "\n";
    out << "w1: " << format_digits(kit.triple().w1) << "\n";
    out << "m: " << kit.threshold() << "\n";
    out << "k_sep: " << kit.separation() << "\n";
    const CapacityCertificate& cert = kit.certificate();
    out << "verified_range: [" << cert.verified_lo << ", " << cert.verified_hi << "]\n";
    out << "growth_avoid_v: " << cert.growth_avoid_v << "\n";
    out << "growth_avoid_w: " << cert.growth_avoid_w << "\n";
    out << "asymptotic_indicated: " << yesno(cert.asymptotic_indicated) << "\n";
}

void cmd_encode(std::ostream& out, const std::string& v_digits, int k,
                const std::string& word_digits, std::uint64_t budget) {
    const CodingKit kit = build_coding_kit(parse_digits(v_digits, k), k, 8, budget);
    const Word u = parse_digits(word_digits, k);
    out << format_digits(kit.encode(u)) << "\n";
}

void cmd_decode(std::ostream& out, const std::string& v_digits, int k,
                const std::string& block_digits, std::uint64_t budget) {
    const CodingKit kit = build_coding_kit(parse_digits(v_digits, k), k, 8, budget);
    const Word block = parse_digits(block_digits, k);
    out << format_digits(kit.decode(block)) << "\n";
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    std::ostringstream out;

    CLI::App app{"decision procedures for one-dimensional cellular automata"
                 " generated by idempotents"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    app.add_option("--seed", seed, "seed for randomized corpora");
    app.add_option("--budget", budget, "window cap for exhaustive checks");

    std::string rule_spec, input, map_text, v_digits, word_digits, block_digits;
    int bound = 6, verify_bound = 12, trials = 1000, k = 2, n_gap = 2, m_param = 2;
    bool as_json = false;

    CLI::App* analyze = app.add_subcommand("analyze", "surjectivity, preinjectivity, witnesses");
    analyze->add_option("--rule", rule_spec, "rule file or eca:N")->required();
    analyze->add_flag("--json", as_json, "JSON output");

    CLI::App* eq1 = app.add_subcommand("eq1", "bounded period-class identity check");
    eq1->add_option("--rule", rule_spec)->required();
    eq1->add_option("--bound", bound, "largest period scanned")->required();

    CLI::App* membership = app.add_subcommand("membership", "bounded membership verdict");
    membership->add_option("--rule", rule_spec)->required();
    membership->add_option("--bound", bound)->required();
    membership->add_flag("--json", as_json, "JSON output");

    CLI::App* eraser = app.add_subcommand("eraser", "build and verify the rewriting eraser");
    eraser->add_option("--rule", rule_spec)->required();
    eraser->add_option("--verify-bound", verify_bound, "cyclic period bound for checks");
    eraser->add_option("--trials", trials, "random window trials");

    CLI::App* marker = app.add_subcommand("marker", "marker automaton output");
    marker->add_option("--k", k, "alphabet size")->required();
    marker->add_option("--N", n_gap, "gap parameter")->required();
    marker->add_option("--input", input, "word digits or cyclic:<digits>")->required();

    CLI::App* decompose_cmd = app.add_subcommand("decompose-finite", "idempotent factorization");
    decompose_cmd->add_option("--map", map_text, "comma-separated image list")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "closure vs condition on the finite carrier");
    oracle->add_option("--k", k)->required();
    oracle->add_option("--m", m_param)->required();

    CLI::App* coding = app.add_subcommand("coding-kit", "triple, threshold, separation length");
    coding->add_option("--v", v_digits)->required();
    coding->add_option("--k", k)->required();

    CLI::App* encode = app.add_subcommand("encode", "inject a word into its w.s.w block");
    encode->add_option("--v", v_digits)->required();
    encode->add_option("--k", k)->required();
    encode->add_option("--word", word_digits)->required();

    CLI::App* decode = app.add_subcommand("decode", "invert an encoded block");
    decode->add_option("--v", v_digits)->required();
    decode->add_option("--k", k)->required();
    decode->add_option("--block", block_digits)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 order
        app.parse(std::move(reversed));
        if (analyze->parsed()) cmd_analyze(out, rule_spec, as_json, budget);
        if (eq1->parsed()) cmd_eq1(out, rule_spec, bound, budget);
        if (membership->parsed()) cmd_membership(out, rule_spec, bound, as_json, budget);
        if (eraser->parsed()) cmd_eraser(out, rule_spec, verify_bound, trials, seed, budget);
        if (marker->parsed()) cmd_marker(out, k, n_gap, input, budget);
        if (decompose_cmd->parsed()) cmd_decompose_finite(out, map_text);
        if (oracle->parsed()) cmd_oracle(out, k, m_param, budget);
        if (coding->parsed()) cmd_coding_kit(out, v_digits, k, budget);
        if (encode->parsed()) cmd_encode(out, v_digits, k, word_digits, budget);
        if (decode->parsed()) cmd_decode(out, v_digits, k, block_digits, budget);
        result.exit_code = 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const ExhaustiveCheckInfeasible& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    } catch (const SearchBudgetExceeded& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    } catch (const NoThresholdFound& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    } catch (const ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const MalformedBlock& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const WordTooShort& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const LengthBelowThreshold& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const std::invalid_argument& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const Error& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    }

    result.out = out.str();
    return result;
}

}  // namespace idemca::cli
