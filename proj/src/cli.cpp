#include "ks/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

#include "ks/bundled.hpp"
#include "ks/coloring.hpp"
#include "ks/ksset.hpp"
#include "ks/quantum.hpp"
#include "ks/question.hpp"
#include "ks/report.hpp"

namespace ks::cli {

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

bool structured(const std::string& format) { return format == "structured"; }

template <typename Doc>
void print(const Doc& doc, bool as_json, std::ostream& out) {
    if (as_json) {
        out << report::emit_structured(doc);
    } else {
        report::render_text(out, doc);
    }
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("bad number '" + text + "' in state spec");
    }
    return value;
}

StateVector parse_state(const std::string& spec) {
    if (spec == "singlet") return StateVector::singlet();
    if (spec == "z00") return StateVector::z00();
    if (spec == "phi+") return StateVector::phi_plus();
    std::istringstream in(spec);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() != 4) {
        throw std::invalid_argument(
            "state spec must be singlet, z00, phi+ or four re,im pairs, got '" + spec + "'");
    }
    Amplitudes amps;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t comma = tokens[i].find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("state amplitude '" + tokens[i] +
                                        "' is not of the form re,im");
        }
        amps[i] = Complex(parse_double(tokens[i].substr(0, comma)),
                          parse_double(tokens[i].substr(comma + 1)));
    }
    return StateVector(amps);
}

// Commands that assume a well-formed set refuse to run on one that fails
// verification; that is an input problem, not a claim failure.
KSSet load_verified(const std::string& path) {
    KSSet set = load_ksset(path);
    if (!verify(set).ok) {
        throw std::invalid_argument(path + ": set fails verification; run `verify` for details");
    }
    return set;
}

const Context& context_or_throw(const KSSet& set, const std::string& name,
                                const std::string& path) {
    const Context* ctx = set.find_context(name);
    if (ctx == nullptr) {
        throw std::invalid_argument(path + ": no context named '" + name + "'");
    }
    return *ctx;
}

int cmd_verify(const std::string& file, bool as_json, std::ostream& out) {
    const KSSet set = load_ksset(file);
    const VerifyReport rep = verify(set);
    print(report::make_verify_doc(file, set, rep), as_json, out);
    return rep.ok ? kOk : kClaimFailed;
}

int cmd_color(const std::string& file, bool strong, bool count_requested, bool as_json,
              std::ostream& out) {
    const KSSet set = load_verified(file);
    const ColoringOptions opts{strong};
    const std::optional<Assignment> coloring = find_coloring(set, opts);
    std::optional<std::uint64_t> count;
    if (count_requested) count = count_colorings(set, opts);
    const bool parity_found = parity_certificate(set).has_value();
    print(report::make_color_doc(file, set, opts, coloring, count, parity_found), as_json, out);
    return coloring ? kClaimFailed : kOk;  // the claim is that no coloring exists
}

int cmd_parity(const std::string& file, bool as_json, std::ostream& out) {
    const KSSet set = load_verified(file);
    const std::optional<ParityCertificate> cert = parity_certificate(set);
    print(report::make_parity_doc(file, set, cert), as_json, out);
    return cert ? kOk : kClaimFailed;
}

int cmd_translate(const std::string& file, const std::string& labels_file, bool as_json,
                  std::ostream& out) {
    const KSSet set = load_verified(file);
    const LabelMap labels = load_labels(labels_file);
    const TranslationReport rep = translate_set(set, labels);
    print(report::make_translate_doc(file, labels_file, rep), as_json, out);
    return rep.ok ? kOk : kClaimFailed;
}

int cmd_classify(const std::string& file, const std::string& labels_file, bool as_json,
                 std::ostream& out) {
    const KSSet set = load_verified(file);
    const LabelMap labels = load_labels(labels_file);
    print(report::make_classify_doc(file, labels_file, set, labels), as_json, out);
    return kOk;
}

int cmd_nchv_table(bool as_json, std::ostream& out) {
    print(report::make_nchv_table_doc(), as_json, out);
    return kOk;
}

int cmd_predict(const std::string& file, const std::string& context, const std::string& state_spec,
                bool as_json, std::ostream& out) {
    const KSSet set = load_verified(file);
    const Context& ctx = context_or_throw(set, context, file);
    const TestDistribution dist = test_distribution(parse_state(state_spec), ctx, set);
    print(report::make_predict_doc(file, state_spec, ctx, dist), as_json, out);
    return kOk;
}

int cmd_sample(const std::string& file, const std::string& context, const std::string& state_spec,
               std::uint64_t trials, std::uint64_t seed, bool as_json, std::ostream& out) {
    const KSSet set = load_verified(file);
    const Context& ctx = context_or_throw(set, context, file);
    const StateVector state = parse_state(state_spec);
    std::array<std::uint64_t, 4> counts{};
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        counts[sample_test(state, ctx, set, rng)]++;
    }
    print(report::make_sample_doc(file, state_spec, ctx, trials, seed, counts), as_json, out);
    return kOk;
}

int cmd_discriminate(const std::string& state_spec, std::uint64_t trials, std::uint64_t seed,
                     const std::optional<HiddenWeights>& weights, bool as_json,
                     std::ostream& out) {
    const KSSet set = bundled_set();
    const LabelMap labels = bundled_labels();
    const DiscriminationReport rep =
        discriminate(parse_state(state_spec), set, labels, trials, seed, weights);
    print(report::make_discriminate_doc(state_spec, weights, rep), as_json, out);
    return rep.single_run_separation ? kOk : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Kochen-Specker set toolkit: exact set verification, coloring search, "
        "two-qubit question translation, hidden-variable and quantum predictions"};
    app.name("kscheck");
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string file;
    std::string labels_file;
    std::string context;
    std::string state_spec;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    bool strong = false;
    bool count_requested = false;
    std::vector<double> weight_values;
    int code = kOk;

    CLI::App* verify_cmd = app.add_subcommand("verify", "check contexts and ray occurrences");
    verify_cmd->add_option("file", file, "set file")->required();
    verify_cmd->callback([&] { code = cmd_verify(file, structured(format), out); });

    CLI::App* color_cmd =
        app.add_subcommand("color", "search for an assignment with one yes per context");
    color_cmd->add_option("file", file, "set file")->required();
    color_cmd->add_flag("--strong-orthogonality", strong,
                        "also forbid yes on any orthogonal pair");
    color_cmd->add_flag("--count", count_requested, "count all valid assignments");
    color_cmd->callback(
        [&] { code = cmd_color(file, strong, count_requested, structured(format), out); });

    CLI::App* parity_cmd =
        app.add_subcommand("parity", "non-colorability certificate by counting");
    parity_cmd->add_option("file", file, "set file")->required();
    parity_cmd->callback([&] { code = cmd_parity(file, structured(format), out); });

    CLI::App* translate_cmd =
        app.add_subcommand("translate", "check stored rays against label-derived eigenrays");
    translate_cmd->add_option("file", file, "set file")->required();
    translate_cmd->add_option("labels", labels_file, "label file")->required();
    translate_cmd->callback(
        [&] { code = cmd_translate(file, labels_file, structured(format), out); });

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify contexts by question type");
    classify_cmd->add_option("file", file, "set file")->required();
    classify_cmd->add_option("labels", labels_file, "label file")->required();
    classify_cmd->callback(
        [&] { code = cmd_classify(file, labels_file, structured(format), out); });

    CLI::App* nchv_cmd =
        app.add_subcommand("nchv-table", "hidden-state value table for the all-entangled test");
    nchv_cmd->callback([&] { code = cmd_nchv_table(structured(format), out); });

    CLI::App* predict_cmd =
        app.add_subcommand("predict", "Born-rule outcome probabilities for one context");
    predict_cmd->add_option("file", file, "set file")->required();
    predict_cmd->add_option("--context", context, "context name")->required();
    predict_cmd->add_option("--state", state_spec, "singlet | z00 | phi+ | 're,im' x4")
        ->required();
    predict_cmd->callback(
        [&] { code = cmd_predict(file, context, state_spec, structured(format), out); });

    CLI::App* sample_cmd = app.add_subcommand("sample", "draw seeded outcomes for one context");
    sample_cmd->add_option("file", file, "set file")->required();
    sample_cmd->add_option("--context", context, "context name")->required();
    sample_cmd->add_option("--state", state_spec, "singlet | z00 | phi+ | 're,im' x4")
        ->required();
    sample_cmd->add_option("--trials", trials, "number of runs");
    sample_cmd->add_option("--seed", seed, "RNG seed");
    sample_cmd->callback([&] {
        code = cmd_sample(file, context, state_spec, trials, seed, structured(format), out);
    });

    CLI::App* discriminate_cmd = app.add_subcommand(
        "discriminate", "run the all-entangled test under the quantum and hidden-variable models");
    discriminate_cmd->add_option("--state", state_spec, "singlet | z00 | phi+ | 're,im' x4")
        ->required();
    discriminate_cmd->add_option("--trials", trials, "number of runs");
    discriminate_cmd->add_option("--seed", seed, "RNG seed");
    discriminate_cmd
        ->add_option("--weights", weight_values, "16 hidden-state weights (default uniform)")
        ->expected(16);
    discriminate_cmd->callback([&] {
        std::optional<HiddenWeights> weights;
        if (!weight_values.empty()) {
            HiddenWeights w{};
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = weight_values[i];
            weights = w;
        }
        code = cmd_discriminate(state_spec, trials, seed, weights, structured(format), out);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? kOk : kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}

}  // namespace ks::cli
