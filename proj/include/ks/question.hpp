#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ks/ksset.hpp"
#include "ks/pauli.hpp"

namespace ks {

enum class Axis { Z, X };

/// One single-particle condition: "spin along `axis` has sign `sign`".
struct LocalCondition {
    Axis axis = Axis::Z;
    int sign = +1;

    bool operator==(const LocalCondition&) const = default;
};

/// Question answerable by separate tests on the two particles: a condition
/// on particle 1 and a condition on particle 2.
class FactorizableQuestion {
  public:
    FactorizableQuestion(LocalCondition first, LocalCondition second);

    const LocalCondition& first() const noexcept { return first_; }
    const LocalCondition& second() const noexcept { return second_; }

    bool operator==(const FactorizableQuestion&) const = default;

  private:
    LocalCondition first_, second_;
};

/// Question about the signs of two commuting two-letter product observables;
/// not answerable by separate local tests.
class EntangledQuestion {
  public:
    EntangledQuestion(SignedObservable a, SignedObservable b);

    const SignedObservable& a() const noexcept { return a_; }
    const SignedObservable& b() const noexcept { return b_; }

    bool operator==(const EntangledQuestion&) const = default;

  private:
    SignedObservable a_, b_;
};

using YesNoQuestion = std::variant<FactorizableQuestion, EntangledQuestion>;

bool is_entangled(const YesNoQuestion& q);

/// The two signed observables asserted by the question.  For a factorizable
/// question these are the one-sided words (A, I) and (I, B).
std::pair<SignedObservable, SignedObservable> question_observables(const YesNoQuestion& q);

/// The rank-1 projector of the question, as the canonical joint eigenray.
Ray question_to_ray(const YesNoQuestion& q);

std::string question_str(const YesNoQuestion& q);

/// Ray name -> question.
using LabelMap = std::map<std::string, YesNoQuestion>;

// Label file: one line per ray,
//   label <rayname> fact <axis><sign> <axis><sign>
//   label <rayname> ent <word><sign> <word><sign>
// axis in {z,x}, word in {zz,xx,zx,xz}, sign in {+,-}.  '#' comments and
// blank lines as in the set format.
LabelMap parse_labels(std::istream& in, const std::string& filename = "<input>");
LabelMap load_labels(const std::string& path);

struct TranslationMismatch {
    std::string ray;
    Ray stored;
    // Empty when the labelled question has no one-dimensional joint
    // eigenspace at all.
    std::optional<Ray> derived;

    bool operator==(const TranslationMismatch&) const = default;
};

struct TranslationReport {
    bool ok = false;
    std::size_t checked = 0;
    std::vector<TranslationMismatch> mismatches;

    bool operator==(const TranslationReport&) const = default;
};

// Check that every labelled question reproduces the stored ray it names.
// Labels must cover all rays of the set; throws std::invalid_argument if not.
TranslationReport translate_set(const KSSet& set, const LabelMap& labels);

enum class ContextClass { FactorizableOnly, Mixed, EntangledOnly };

std::string context_class_str(ContextClass c);

// Throws std::invalid_argument when a member has no label.
ContextClass classify_context(const Context& ctx, const LabelMap& labels);

}  // namespace ks
