#include "ks/question.hpp"

#include <fstream>

#include "parse_util.hpp"
#include <stdexcept>

namespace ks {

namespace {

PauliLetter axis_letter(Axis a) {
    return a == Axis::Z ? PauliLetter::Z : PauliLetter::X;
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("condition sign must be +1 or -1");
    }
}

}  // namespace

FactorizableQuestion::FactorizableQuestion(LocalCondition first, LocalCondition second)
    : first_(first), second_(second) {
    check_sign(first.sign);
    check_sign(second.sign);
}

EntangledQuestion::EntangledQuestion(SignedObservable a, SignedObservable b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.word().is_two_letter() || !b_.word().is_two_letter()) {
        throw std::invalid_argument("entangled question needs two-letter product observables");
    }
}

bool is_entangled(const YesNoQuestion& q) {
    return std::holds_alternative<EntangledQuestion>(q);
}

std::pair<SignedObservable, SignedObservable> question_observables(const YesNoQuestion& q) {
    if (const auto* f = std::get_if<FactorizableQuestion>(&q)) {
        SignedObservable o1(PauliWord{axis_letter(f->first().axis), PauliLetter::I},
                            f->first().sign);
        SignedObservable o2(PauliWord{PauliLetter::I, axis_letter(f->second().axis)},
                            f->second().sign);
        return {o1, o2};
    }
    const auto& e = std::get<EntangledQuestion>(q);
    return {e.a(), e.b()};
}

Ray question_to_ray(const YesNoQuestion& q) {
    auto [o1, o2] = question_observables(q);
    return joint_eigenray(o1, o2);
}

std::string question_str(const YesNoQuestion& q) {
    auto [o1, o2] = question_observables(q);
    return (is_entangled(q) ? "ent " : "fact ") + o1.str() + " " + o2.str();
}

namespace {

using detail::Token;
using detail::tokenize;

int parse_sign(const std::string& file, std::size_t lineno, const Token& tok, char c) {
    if (c == '+') return +1;
    if (c == '-') return -1;
    throw ParseError(file, lineno, tok.column, "expected sign +/- in '" + tok.text + "'");
}

Axis parse_axis(const std::string& file, std::size_t lineno, const Token& tok, char c) {
    if (c == 'z') return Axis::Z;
    if (c == 'x') return Axis::X;
    throw ParseError(file, lineno, tok.column, "expected axis z/x in '" + tok.text + "'");
}

LocalCondition parse_local(const std::string& file, std::size_t lineno, const Token& tok) {
    if (tok.text.size() != 2) {
        throw ParseError(file, lineno, tok.column,
                         "expected <axis><sign>, got '" + tok.text + "'");
    }
    return {parse_axis(file, lineno, tok, tok.text[0]),
            parse_sign(file, lineno, tok, tok.text[1])};
}

SignedObservable parse_word(const std::string& file, std::size_t lineno, const Token& tok) {
    if (tok.text.size() != 3) {
        throw ParseError(file, lineno, tok.column,
                         "expected <word><sign>, got '" + tok.text + "'");
    }
    std::string w = tok.text.substr(0, 2);
    PauliWord word;
    if (w == "zz") {
        word = {PauliLetter::Z, PauliLetter::Z};
    } else if (w == "xx") {
        word = {PauliLetter::X, PauliLetter::X};
    } else if (w == "zx") {
        word = {PauliLetter::Z, PauliLetter::X};
    } else if (w == "xz") {
        word = {PauliLetter::X, PauliLetter::Z};
    } else {
        throw ParseError(file, lineno, tok.column,
                         "expected word zz/xx/zx/xz in '" + tok.text + "'");
    }
    return SignedObservable(word, parse_sign(file, lineno, tok, tok.text[2]));
}

}  // namespace

LabelMap parse_labels(std::istream& in, const std::string& filename) {
    LabelMap labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text != "label") {
            throw ParseError(filename, lineno, toks[0].column,
                             "unknown keyword '" + toks[0].text + "'");
        }
        if (toks.size() != 5) {
            throw ParseError(filename, lineno, toks[0].column,
                             "expected: label <ray> fact|ent <cond> <cond>");
        }
        const std::string& ray = toks[1].text;
        if (labels.count(ray)) {
            throw ParseError(filename, lineno, toks[1].column,
                             "duplicate label for ray '" + ray + "'");
        }
        const std::string& kind = toks[2].text;
        if (kind == "fact") {
            labels.emplace(ray, FactorizableQuestion(parse_local(filename, lineno, toks[3]),
                                                     parse_local(filename, lineno, toks[4])));
        } else if (kind == "ent") {
            labels.emplace(ray, EntangledQuestion(parse_word(filename, lineno, toks[3]),
                                                  parse_word(filename, lineno, toks[4])));
        } else {
            throw ParseError(filename, lineno, toks[2].column,
                             "expected 'fact' or 'ent', got '" + kind + "'");
        }
    }
    return labels;
}

LabelMap load_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open label file: " + path);
    }
    return parse_labels(in, path);
}

TranslationReport translate_set(const KSSet& set, const LabelMap& labels) {
    for (const auto& nr : set.rays) {
        if (!labels.count(nr.name)) {
            throw std::invalid_argument("labels do not cover ray '" + nr.name + "'");
        }
    }
    TranslationReport report;
    report.ok = true;
    for (const auto& nr : set.rays) {
        ++report.checked;
        const YesNoQuestion& q = labels.at(nr.name);
        std::optional<Ray> derived;
        try {
            derived = question_to_ray(q);
        } catch (const std::domain_error&) {
            // No joint rank-1 eigenspace; recorded as a mismatch.
        }
        if (!derived || !(*derived == nr.ray.canonical())) {
            report.ok = false;
            report.mismatches.push_back({nr.name, nr.ray, std::move(derived)});
        }
    }
    return report;
}

std::string context_class_str(ContextClass c) {
    switch (c) {
        case ContextClass::FactorizableOnly:
            return "factorizable-only";
        case ContextClass::Mixed:
            return "mixed";
        case ContextClass::EntangledOnly:
            return "entangled-only";
    }
    throw std::logic_error("unreachable");
}

ContextClass classify_context(const Context& ctx, const LabelMap& labels) {
    std::size_t entangled = 0;
    for (const auto& m : ctx.members) {
        auto it = labels.find(m);
        if (it == labels.end()) {
            throw std::invalid_argument("no label for context member '" + m + "'");
        }
        if (is_entangled(it->second)) ++entangled;
    }
    if (entangled == 0) return ContextClass::FactorizableOnly;
    if (entangled == ctx.members.size()) return ContextClass::EntangledOnly;
    return ContextClass::Mixed;
}

}  // namespace ks
