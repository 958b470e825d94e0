#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ks/coloring.hpp"
#include "ks/ksset.hpp"
#include "ks/nchv.hpp"
#include "ks/quantum.hpp"
#include "ks/question.hpp"

/**
 * Report documents: the self-contained results each CLI command prints.
 *
 * Every document kind serializes to JSON (`emit_structured`) and back
 * (`parse_structured`) such that parse(emit(doc)) == doc, and renders as
 * human-readable text (`render_text`).  Rays travel as space-joined entry
 * tokens in the set-file grammar, e.g. "1 0 0 -1" or "1:0 0:1 1:0 0:-1".
 */
namespace ks::report {

using json = nlohmann::ordered_json;

struct OccurrenceLine {
    std::string ray;
    std::uint64_t count = 0;

    bool operator==(const OccurrenceLine&) const = default;
};

struct ContextLine {
    std::string name;
    std::string status;  // "ok" | "not-orthogonal" | "wrong-arity"
    std::optional<std::array<std::string, 2>> offending;  // non-orthogonal pair

    bool operator==(const ContextLine&) const = default;
};

struct VerifyDoc {
    static constexpr const char* kind = "verify";

    std::string file;
    std::uint64_t dim = 0;
    std::uint64_t rays = 0;
    bool ok = false;
    std::vector<ContextLine> contexts;
    std::vector<OccurrenceLine> occurrences;  // ray declaration order

    bool operator==(const VerifyDoc&) const = default;
};

struct AssignmentLine {
    std::string ray;
    bool yes = false;

    bool operator==(const AssignmentLine&) const = default;
};

struct ColorDoc {
    static constexpr const char* kind = "color";

    std::string file;
    bool strong_orthogonality = false;
    bool colorable = false;
    std::vector<AssignmentLine> coloring;   // empty unless colorable
    std::optional<std::uint64_t> count;     // present when counting was requested
    bool parity_certificate = false;

    bool operator==(const ColorDoc&) const = default;
};

struct ParityDoc {
    static constexpr const char* kind = "parity";

    std::string file;
    bool found = false;
    std::uint64_t contexts = 0;
    std::vector<OccurrenceLine> occurrences;

    bool operator==(const ParityDoc&) const = default;
};

struct MismatchLine {
    std::string ray;
    std::string stored;                 // ray entry tokens
    std::optional<std::string> derived;  // absent: no rank-1 joint eigenspace

    bool operator==(const MismatchLine&) const = default;
};

struct TranslateDoc {
    static constexpr const char* kind = "translate";

    std::string file;
    std::string labels;
    bool ok = false;
    std::uint64_t checked = 0;
    std::vector<MismatchLine> mismatches;

    bool operator==(const TranslateDoc&) const = default;
};

struct ContextClassLine {
    std::string name;
    std::string cls;  // context_class_str value

    bool operator==(const ContextClassLine&) const = default;
};

struct ClassifyDoc {
    static constexpr const char* kind = "classify";

    std::string file;
    std::string labels;
    std::vector<ContextClassLine> contexts;
    std::uint64_t factorizable_only = 0;
    std::uint64_t mixed = 0;
    std::uint64_t entangled_only = 0;

    bool operator==(const ClassifyDoc&) const = default;
};

struct NchvRow {
    std::array<int, 4> state{};     // z1, x1, z2, x2 (representative, z1 = +1)
    std::array<int, 4> products{};  // zz, xx, zx, xz
    std::array<bool, 4> answers{};  // one per question, in header order
    int yes_count = 0;

    bool operator==(const NchvRow&) const = default;
};

struct NchvTableDoc {
    static constexpr const char* kind = "nchv-table";

    std::array<std::string, 4> questions;  // e.g. "zz+ xx-"
    std::vector<NchvRow> rows;

    bool operator==(const NchvTableDoc&) const = default;
};

struct PredictDoc {
    static constexpr const char* kind = "predict";

    std::string file;
    std::string context;
    std::string state;  // the --state spec as given
    std::array<std::string, 4> members;
    std::array<double, 4> probabilities{};

    bool operator==(const PredictDoc&) const = default;
};

struct SampleDoc {
    static constexpr const char* kind = "sample";

    std::string file;
    std::string context;
    std::string state;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::array<std::string, 4> members;
    std::array<std::uint64_t, 4> counts{};

    bool operator==(const SampleDoc&) const = default;
};

struct DiscriminateDoc {
    static constexpr const char* kind = "discriminate";

    std::string state;
    std::string context;  // the all-entangled test
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::array<double, 16>> weights;  // absent = uniform
    std::array<std::uint64_t, 5> qm_yes_counts{};
    std::array<std::uint64_t, 5> nchv_yes_counts{};
    bool single_run_separation = false;

    bool operator==(const DiscriminateDoc&) const = default;
};

void to_json(json& j, const VerifyDoc& d);
void from_json(const json& j, VerifyDoc& d);
void to_json(json& j, const ColorDoc& d);
void from_json(const json& j, ColorDoc& d);
void to_json(json& j, const ParityDoc& d);
void from_json(const json& j, ParityDoc& d);
void to_json(json& j, const TranslateDoc& d);
void from_json(const json& j, TranslateDoc& d);
void to_json(json& j, const ClassifyDoc& d);
void from_json(const json& j, ClassifyDoc& d);
void to_json(json& j, const NchvTableDoc& d);
void from_json(const json& j, NchvTableDoc& d);
void to_json(json& j, const PredictDoc& d);
void from_json(const json& j, PredictDoc& d);
void to_json(json& j, const SampleDoc& d);
void from_json(const json& j, SampleDoc& d);
void to_json(json& j, const DiscriminateDoc& d);
void from_json(const json& j, DiscriminateDoc& d);

void render_text(std::ostream& os, const VerifyDoc& d);
void render_text(std::ostream& os, const ColorDoc& d);
void render_text(std::ostream& os, const ParityDoc& d);
void render_text(std::ostream& os, const TranslateDoc& d);
void render_text(std::ostream& os, const ClassifyDoc& d);
void render_text(std::ostream& os, const NchvTableDoc& d);
void render_text(std::ostream& os, const PredictDoc& d);
void render_text(std::ostream& os, const SampleDoc& d);
void render_text(std::ostream& os, const DiscriminateDoc& d);

/// JSON text with a leading "command" tag, 2-space indent, trailing newline.
template <typename Doc>
std::string emit_structured(const Doc& doc) {
    json j = doc;
    return j.dump(2) + "\n";
}

/// Inverse of emit_structured; throws std::invalid_argument on a document
/// of the wrong kind and nlohmann exceptions on malformed JSON.
template <typename Doc>
Doc parse_structured(const std::string& text) {
    const json j = json::parse(text);
    if (!j.contains("command") || j.at("command") != Doc::kind) {
        throw std::invalid_argument(std::string("expected a '") + Doc::kind + "' document");
    }
    return j.get<Doc>();
}

// Builders from domain results.
VerifyDoc make_verify_doc(const std::string& file, const KSSet& set, const VerifyReport& report);
ColorDoc make_color_doc(const std::string& file, const KSSet& set, const ColoringOptions& opts,
                        const std::optional<Assignment>& coloring,
                        const std::optional<std::uint64_t>& count, bool parity_found);
ParityDoc make_parity_doc(const std::string& file, const KSSet& set,
                          const std::optional<ParityCertificate>& cert);
TranslateDoc make_translate_doc(const std::string& file, const std::string& labels_file,
                                const TranslationReport& report);
ClassifyDoc make_classify_doc(const std::string& file, const std::string& labels_file,
                              const KSSet& set, const LabelMap& labels);
NchvTableDoc make_nchv_table_doc();
PredictDoc make_predict_doc(const std::string& file, const std::string& state_spec,
                            const Context& ctx, const TestDistribution& dist);
SampleDoc make_sample_doc(const std::string& file, const std::string& state_spec,
                          const Context& ctx, std::uint64_t trials, std::uint64_t seed,
                          const std::array<std::uint64_t, 4>& counts);
DiscriminateDoc make_discriminate_doc(const std::string& state_spec,
                                      const std::optional<HiddenWeights>& weights,
                                      const DiscriminationReport& report);

}  // namespace ks::report
