#include "ks/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ks::report {

namespace {

/// Shortest round-trip decimal form, matching JSON number output.
std::string fmt(double x) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) throw std::logic_error("double formatting failed");
    return std::string(buf.data(), ptr);
}

}  // namespace

// ---------------------------------------------------------------- verify

void to_json(json& j, const OccurrenceLine& o) {
    j = json{{"ray", o.ray}, {"count", o.count}};
}

void from_json(const json& j, OccurrenceLine& o) {
    j.at("ray").get_to(o.ray);
    j.at("count").get_to(o.count);
}

void to_json(json& j, const ContextLine& c) {
    j = json{{"name", c.name}, {"status", c.status}};
    if (c.offending) {
        j["offending"] = *c.offending;
    } else {
        j["offending"] = nullptr;
    }
}

void from_json(const json& j, ContextLine& c) {
    j.at("name").get_to(c.name);
    j.at("status").get_to(c.status);
    const json& off = j.at("offending");
    if (off.is_null()) {
        c.offending.reset();
    } else {
        c.offending = off.get<std::array<std::string, 2>>();
    }
}

void to_json(json& j, const VerifyDoc& d) {
    j = json{{"command", VerifyDoc::kind}, {"file", d.file},         {"dim", d.dim},
             {"rays", d.rays},             {"ok", d.ok},             {"contexts", d.contexts},
             {"occurrences", d.occurrences}};
}

void from_json(const json& j, VerifyDoc& d) {
    j.at("file").get_to(d.file);
    j.at("dim").get_to(d.dim);
    j.at("rays").get_to(d.rays);
    j.at("ok").get_to(d.ok);
    j.at("contexts").get_to(d.contexts);
    j.at("occurrences").get_to(d.occurrences);
}

void render_text(std::ostream& os, const VerifyDoc& d) {
    os << "file: " << d.file << "\n";
    const std::size_t ok_count = static_cast<std::size_t>(
        std::count_if(d.contexts.begin(), d.contexts.end(),
                      [](const ContextLine& c) { return c.status == "ok"; }));
    os << ok_count << "/" << d.contexts.size() << " contexts ok, " << d.rays << " rays";
    if (!d.occurrences.empty()) {
        const auto [lo, hi] = std::minmax_element(
            d.occurrences.begin(), d.occurrences.end(),
            [](const OccurrenceLine& a, const OccurrenceLine& b) { return a.count < b.count; });
        if (lo->count == hi->count) {
            os << ", occurrences all " << lo->count;
        } else {
            os << ", occurrences " << lo->count << ".." << hi->count;
        }
    }
    os << "\n";
    for (const ContextLine& c : d.contexts) {
        if (c.status == "ok") continue;
        os << "context " << c.name << ": ";
        if (c.status == "not-orthogonal" && c.offending) {
            os << "not orthogonal (" << (*c.offending)[0] << ", " << (*c.offending)[1] << ")";
        } else if (c.status == "wrong-arity") {
            os << "wrong arity";
        } else {
            os << c.status;
        }
        os << "\n";
    }
}

VerifyDoc make_verify_doc(const std::string& file, const KSSet& set, const VerifyReport& report) {
    VerifyDoc d;
    d.file = file;
    d.dim = set.dim;
    d.rays = set.rays.size();
    d.ok = report.ok;
    for (const ContextResult& r : report.contexts) {
        ContextLine line;
        line.name = r.context;
        switch (r.status) {
            case ContextStatus::Ok: line.status = "ok"; break;
            case ContextStatus::OffendingPair: line.status = "not-orthogonal"; break;
            case ContextStatus::WrongArity: line.status = "wrong-arity"; break;
        }
        if (r.offending) line.offending = {r.offending->first, r.offending->second};
        d.contexts.push_back(std::move(line));
    }
    for (const auto& [name, count] : report.occurrences) {
        d.occurrences.push_back(OccurrenceLine{name, count});
    }
    return d;
}

// ----------------------------------------------------------------- color

void to_json(json& j, const AssignmentLine& a) {
    j = json{{"ray", a.ray}, {"yes", a.yes}};
}

void from_json(const json& j, AssignmentLine& a) {
    j.at("ray").get_to(a.ray);
    j.at("yes").get_to(a.yes);
}

void to_json(json& j, const ColorDoc& d) {
    j = json{{"command", ColorDoc::kind},
             {"file", d.file},
             {"strong_orthogonality", d.strong_orthogonality},
             {"colorable", d.colorable},
             {"coloring", d.coloring}};
    if (d.count) {
        j["count"] = *d.count;
    } else {
        j["count"] = nullptr;
    }
    j["parity_certificate"] = d.parity_certificate;
}

void from_json(const json& j, ColorDoc& d) {
    j.at("file").get_to(d.file);
    j.at("strong_orthogonality").get_to(d.strong_orthogonality);
    j.at("colorable").get_to(d.colorable);
    j.at("coloring").get_to(d.coloring);
    const json& count = j.at("count");
    if (count.is_null()) {
        d.count.reset();
    } else {
        d.count = count.get<std::uint64_t>();
    }
    j.at("parity_certificate").get_to(d.parity_certificate);
}

void render_text(std::ostream& os, const ColorDoc& d) {
    os << "file: " << d.file << "\n";
    if (d.strong_orthogonality) os << "strong orthogonality rule: on\n";
    if (d.colorable) {
        os << "coloring found:\n";
        for (const AssignmentLine& a : d.coloring) {
            os << "  " << a.ray << " " << (a.yes ? "yes" : "no") << "\n";
        }
    } else {
        os << "no coloring exists (search); "
           << (d.parity_certificate ? "parity certificate found" : "no parity certificate")
           << "\n";
    }
    if (d.count) os << "colorings: " << *d.count << "\n";
}

ColorDoc make_color_doc(const std::string& file, const KSSet& set, const ColoringOptions& opts,
                        const std::optional<Assignment>& coloring,
                        const std::optional<std::uint64_t>& count, bool parity_found) {
    ColorDoc d;
    d.file = file;
    d.strong_orthogonality = opts.strong_orthogonality;
    d.colorable = coloring.has_value();
    if (coloring) {
        for (const NamedRay& nr : set.rays) {
            d.coloring.push_back(AssignmentLine{nr.name, coloring->at(nr.name)});
        }
    }
    d.count = count;
    d.parity_certificate = parity_found;
    return d;
}

// ---------------------------------------------------------------- parity

void to_json(json& j, const ParityDoc& d) {
    j = json{{"command", ParityDoc::kind},
             {"file", d.file},
             {"found", d.found},
             {"contexts", d.contexts},
             {"occurrences", d.occurrences}};
}

void from_json(const json& j, ParityDoc& d) {
    j.at("file").get_to(d.file);
    j.at("found").get_to(d.found);
    j.at("contexts").get_to(d.contexts);
    j.at("occurrences").get_to(d.occurrences);
}

void render_text(std::ostream& os, const ParityDoc& d) {
    os << "file: " << d.file << "\n";
    if (d.found) {
        os << "parity certificate: " << d.contexts
           << " contexts (odd), all ray occurrences even\n";
        for (const OccurrenceLine& o : d.occurrences) {
            os << "  " << o.ray << " " << o.count << "\n";
        }
        return;
    }
    os << "no parity certificate\n";
    if (d.contexts % 2 == 0) {
        os << "  context count " << d.contexts << " (even)\n";
    }
    for (const OccurrenceLine& o : d.occurrences) {
        if (o.count % 2 != 0) {
            os << "  ray " << o.ray << " occurs " << o.count << " times (odd)\n";
            break;
        }
    }
}

ParityDoc make_parity_doc(const std::string& file, const KSSet& set,
                          const std::optional<ParityCertificate>& cert) {
    ParityDoc d;
    d.file = file;
    d.found = cert.has_value();
    d.contexts = set.contexts.size();
    for (const auto& [name, count] : verify(set).occurrences) {
        d.occurrences.push_back(OccurrenceLine{name, count});
    }
    return d;
}

// ------------------------------------------------------------- translate

void to_json(json& j, const MismatchLine& m) {
    j = json{{"ray", m.ray}, {"stored", m.stored}};
    if (m.derived) {
        j["derived"] = *m.derived;
    } else {
        j["derived"] = nullptr;
    }
}

void from_json(const json& j, MismatchLine& m) {
    j.at("ray").get_to(m.ray);
    j.at("stored").get_to(m.stored);
    const json& derived = j.at("derived");
    if (derived.is_null()) {
        m.derived.reset();
    } else {
        m.derived = derived.get<std::string>();
    }
}

void to_json(json& j, const TranslateDoc& d) {
    j = json{{"command", TranslateDoc::kind}, {"file", d.file},
             {"labels", d.labels},            {"ok", d.ok},
             {"checked", d.checked},          {"mismatches", d.mismatches}};
}

void from_json(const json& j, TranslateDoc& d) {
    j.at("file").get_to(d.file);
    j.at("labels").get_to(d.labels);
    j.at("ok").get_to(d.ok);
    j.at("checked").get_to(d.checked);
    j.at("mismatches").get_to(d.mismatches);
}

void render_text(std::ostream& os, const TranslateDoc& d) {
    os << "files: " << d.file << ", " << d.labels << "\n";
    if (d.ok) {
        os << d.checked << "/" << d.checked << " label-derived rays match stored rays\n";
        return;
    }
    os << d.mismatches.size() << " mismatches out of " << d.checked << " rays:\n";
    for (const MismatchLine& m : d.mismatches) {
        os << "  " << m.ray << ": stored " << m.stored << ", derived "
           << (m.derived ? *m.derived : std::string("none (no rank-1 joint eigenspace)")) << "\n";
    }
}

namespace {

std::string ray_tokens(const Ray& r) {
    std::string out;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        if (i != 0) out += ' ';
        out += r[i].str();
    }
    return out;
}

}  // namespace

TranslateDoc make_translate_doc(const std::string& file, const std::string& labels_file,
                                const TranslationReport& report) {
    TranslateDoc d;
    d.file = file;
    d.labels = labels_file;
    d.ok = report.ok;
    d.checked = report.checked;
    for (const TranslationMismatch& m : report.mismatches) {
        MismatchLine line;
        line.ray = m.ray;
        line.stored = ray_tokens(m.stored);
        if (m.derived) line.derived = ray_tokens(*m.derived);
        d.mismatches.push_back(std::move(line));
    }
    return d;
}

// -------------------------------------------------------------- classify

void to_json(json& j, const ContextClassLine& c) {
    j = json{{"name", c.name}, {"class", c.cls}};
}

void from_json(const json& j, ContextClassLine& c) {
    j.at("name").get_to(c.name);
    j.at("class").get_to(c.cls);
}

void to_json(json& j, const ClassifyDoc& d) {
    j = json{{"command", ClassifyDoc::kind},
             {"file", d.file},
             {"labels", d.labels},
             {"contexts", d.contexts},
             {"factorizable_only", d.factorizable_only},
             {"mixed", d.mixed},
             {"entangled_only", d.entangled_only}};
}

void from_json(const json& j, ClassifyDoc& d) {
    j.at("file").get_to(d.file);
    j.at("labels").get_to(d.labels);
    j.at("contexts").get_to(d.contexts);
    j.at("factorizable_only").get_to(d.factorizable_only);
    j.at("mixed").get_to(d.mixed);
    j.at("entangled_only").get_to(d.entangled_only);
}

void render_text(std::ostream& os, const ClassifyDoc& d) {
    os << "files: " << d.file << ", " << d.labels << "\n";
    for (const ContextClassLine& c : d.contexts) {
        os << "  " << c.name << " " << c.cls << "\n";
    }
    os << "tally: " << d.factorizable_only << " factorizable-only, " << d.mixed << " mixed, "
       << d.entangled_only << " entangled-only\n";
}

ClassifyDoc make_classify_doc(const std::string& file, const std::string& labels_file,
                              const KSSet& set, const LabelMap& labels) {
    ClassifyDoc d;
    d.file = file;
    d.labels = labels_file;
    for (const Context& ctx : set.contexts) {
        const ContextClass cls = classify_context(ctx, labels);
        d.contexts.push_back(ContextClassLine{ctx.name, context_class_str(cls)});
        switch (cls) {
            case ContextClass::FactorizableOnly: ++d.factorizable_only; break;
            case ContextClass::Mixed: ++d.mixed; break;
            case ContextClass::EntangledOnly: ++d.entangled_only; break;
        }
    }
    return d;
}

// ------------------------------------------------------------ nchv-table

void to_json(json& j, const NchvRow& r) {
    j = json{{"state", r.state},
             {"products", r.products},
             {"answers", r.answers},
             {"yes_count", r.yes_count}};
}

void from_json(const json& j, NchvRow& r) {
    j.at("state").get_to(r.state);
    j.at("products").get_to(r.products);
    j.at("answers").get_to(r.answers);
    j.at("yes_count").get_to(r.yes_count);
}

void to_json(json& j, const NchvTableDoc& d) {
    j = json{{"command", NchvTableDoc::kind}, {"questions", d.questions}, {"rows", d.rows}};
}

void from_json(const json& j, NchvTableDoc& d) {
    j.at("questions").get_to(d.questions);
    j.at("rows").get_to(d.rows);
}

namespace {

char sign_char(int v) { return v > 0 ? '+' : '-'; }

}  // namespace

void render_text(std::ostream& os, const NchvTableDoc& d) {
    os << "questions: ";
    for (std::size_t i = 0; i < d.questions.size(); ++i) {
        os << (i == 0 ? "" : ", ") << d.questions[i];
    }
    os << "\n";
    os << "z1 x1 z2 x2 | zz xx zx xz | answers | yes-count\n";
    for (const NchvRow& r : d.rows) {
        for (int v : r.state) os << " " << sign_char(v) << " ";
        os << "|";
        for (int v : r.products) os << "  " << sign_char(v);
        os << "  | ";
        for (bool a : r.answers) os << (a ? "y " : "n ");
        os << "| " << r.yes_count << "\n";
    }
}

NchvTableDoc make_nchv_table_doc() {
    NchvTableDoc d;
    const auto questions = ninth_test_questions();
    for (std::size_t i = 0; i < questions.size(); ++i) {
        d.questions[i] = questions[i].a().str() + " " + questions[i].b().str();
    }
    for (const ValueRow& row : nchv_value_table()) {
        NchvRow r;
        r.state = {row.representative.z1, row.representative.x1, row.representative.z2,
                   row.representative.x2};
        r.products = row.products;
        r.answers = row.answers;
        r.yes_count = row.yes_count;
        d.rows.push_back(r);
    }
    return d;
}

// --------------------------------------------------------------- predict

void to_json(json& j, const PredictDoc& d) {
    j = json{{"command", PredictDoc::kind},
             {"file", d.file},
             {"context", d.context},
             {"state", d.state},
             {"members", d.members},
             {"probabilities", d.probabilities}};
}

void from_json(const json& j, PredictDoc& d) {
    j.at("file").get_to(d.file);
    j.at("context").get_to(d.context);
    j.at("state").get_to(d.state);
    j.at("members").get_to(d.members);
    j.at("probabilities").get_to(d.probabilities);
}

void render_text(std::ostream& os, const PredictDoc& d) {
    os << "file: " << d.file << ", context " << d.context << ", state " << d.state << "\n";
    for (std::size_t i = 0; i < d.members.size(); ++i) {
        os << "  " << d.members[i] << ": " << fmt(d.probabilities[i]) << "\n";
    }
}

PredictDoc make_predict_doc(const std::string& file, const std::string& state_spec,
                            const Context& ctx, const TestDistribution& dist) {
    if (ctx.members.size() != 4) {
        throw std::invalid_argument("context '" + ctx.name + "' does not have 4 members");
    }
    PredictDoc d;
    d.file = file;
    d.context = ctx.name;
    d.state = state_spec;
    for (std::size_t i = 0; i < 4; ++i) d.members[i] = ctx.members[i];
    d.probabilities = dist.probabilities;
    return d;
}

// ---------------------------------------------------------------- sample

void to_json(json& j, const SampleDoc& d) {
    j = json{{"command", SampleDoc::kind},
             {"file", d.file},
             {"context", d.context},
             {"state", d.state},
             {"trials", d.trials},
             {"seed", d.seed},
             {"members", d.members},
             {"counts", d.counts}};
}

void from_json(const json& j, SampleDoc& d) {
    j.at("file").get_to(d.file);
    j.at("context").get_to(d.context);
    j.at("state").get_to(d.state);
    j.at("trials").get_to(d.trials);
    j.at("seed").get_to(d.seed);
    j.at("members").get_to(d.members);
    j.at("counts").get_to(d.counts);
}

void render_text(std::ostream& os, const SampleDoc& d) {
    os << "file: " << d.file << ", context " << d.context << ", state " << d.state << ", trials "
       << d.trials << ", seed " << d.seed << "\n";
    for (std::size_t i = 0; i < d.members.size(); ++i) {
        os << "  " << d.members[i] << ": " << d.counts[i] << "\n";
    }
}

SampleDoc make_sample_doc(const std::string& file, const std::string& state_spec,
                          const Context& ctx, std::uint64_t trials, std::uint64_t seed,
                          const std::array<std::uint64_t, 4>& counts) {
    if (ctx.members.size() != 4) {
        throw std::invalid_argument("context '" + ctx.name + "' does not have 4 members");
    }
    SampleDoc d;
    d.file = file;
    d.context = ctx.name;
    d.state = state_spec;
    d.trials = trials;
    d.seed = seed;
    for (std::size_t i = 0; i < 4; ++i) d.members[i] = ctx.members[i];
    d.counts = counts;
    return d;
}

// ----------------------------------------------------------- discriminate

void to_json(json& j, const DiscriminateDoc& d) {
    j = json{{"command", DiscriminateDoc::kind},
             {"state", d.state},
             {"context", d.context},
             {"trials", d.trials},
             {"seed", d.seed}};
    if (d.weights) {
        j["weights"] = *d.weights;
    } else {
        j["weights"] = nullptr;
    }
    j["qm_yes_counts"] = d.qm_yes_counts;
    j["nchv_yes_counts"] = d.nchv_yes_counts;
    j["single_run_separation"] = d.single_run_separation;
}

void from_json(const json& j, DiscriminateDoc& d) {
    j.at("state").get_to(d.state);
    j.at("context").get_to(d.context);
    j.at("trials").get_to(d.trials);
    j.at("seed").get_to(d.seed);
    const json& weights = j.at("weights");
    if (weights.is_null()) {
        d.weights.reset();
    } else {
        d.weights = weights.get<std::array<double, 16>>();
    }
    j.at("qm_yes_counts").get_to(d.qm_yes_counts);
    j.at("nchv_yes_counts").get_to(d.nchv_yes_counts);
    j.at("single_run_separation").get_to(d.single_run_separation);
}

void render_text(std::ostream& os, const DiscriminateDoc& d) {
    os << "all-entangled test: " << d.context << ", state " << d.state << ", trials " << d.trials
       << ", seed " << d.seed << "\n";
    os << "hidden-state weights: ";
    if (d.weights) {
        for (std::size_t i = 0; i < d.weights->size(); ++i) {
            os << (i == 0 ? "" : " ") << fmt((*d.weights)[i]);
        }
        os << "\n";
    } else {
        os << "uniform\n";
    }
    os << "QM   yes-count histogram:";
    for (std::size_t i = 0; i < d.qm_yes_counts.size(); ++i) {
        os << " " << i << ":" << d.qm_yes_counts[i];
    }
    os << "\n";
    os << "NCHV yes-count histogram:";
    for (std::size_t i = 0; i < d.nchv_yes_counts.size(); ++i) {
        os << " " << i << ":" << d.nchv_yes_counts[i];
    }
    os << "\n";
    os << "single-run separation: " << (d.single_run_separation ? "yes" : "no") << "\n";
}

DiscriminateDoc make_discriminate_doc(const std::string& state_spec,
                                      const std::optional<HiddenWeights>& weights,
                                      const DiscriminationReport& report) {
    DiscriminateDoc d;
    d.state = state_spec;
    d.context = report.context;
    d.trials = report.trials;
    d.seed = report.seed;
    d.weights = weights;
    d.qm_yes_counts = report.qm_yes_counts;
    d.nchv_yes_counts = report.nchv_yes_counts;
    d.single_run_separation = report.single_run_separation;
    return d;
}

}  // namespace ks::report
