#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ks/ray.hpp"

namespace ks {

/// A maximal test: `dim` mutually orthogonal rays referenced by name.
/// Orthogonality is checked by verify(), not assumed at construction.
struct Context {
    std::string name;
    std::vector<std::string> members;

    bool operator==(const Context&) const = default;
};

struct NamedRay {
    std::string name;
    Ray ray;

    bool operator==(const NamedRay&) const = default;
};

/**
 * A Kochen-Specker set: named canonical rays plus contexts.  Sets built by
 * parse_ksset satisfy the full invariants (unique names, pairwise
 * non-equivalent rays, contexts of exactly dim distinct known members);
 * hand-built sets may violate them and verify() will report it.
 */
struct KSSet {
    std::size_t dim = 0;
    std::vector<NamedRay> rays;       // declaration order
    std::vector<Context> contexts;    // declaration order

    const Ray* find_ray(const std::string& name) const;
    const Context* find_context(const std::string& name) const;
    std::unordered_map<std::string, std::size_t> ray_index() const;

    bool operator==(const KSSet&) const = default;
};

/// Parse failure with 1-based line/column position.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::string file_;
    std::size_t line_, column_;
};

// Line-oriented set file:
//   dim <d>
//   field Z | field Zsqrt2
//   ray <name> <e1> ... <ed>        entry: <int>, or <int>:<int> for a+b*sqrt2
//   context <name> <ray> ... <ray>  exactly d distinct, previously declared
// '#' starts a comment; blank lines are ignored.  Rays are canonicalized on
// load; a ray equivalent to an already-declared one is an error.
KSSet parse_ksset(std::istream& in, const std::string& filename = "<input>");
KSSet load_ksset(const std::string& path);

enum class ContextStatus { Ok, OffendingPair, WrongArity };

struct ContextResult {
    std::string context;
    ContextStatus status = ContextStatus::Ok;
    // First non-orthogonal pair, by ray name.
    std::optional<std::pair<std::string, std::string>> offending;

    bool operator==(const ContextResult&) const = default;
};

struct VerifyReport {
    bool ok = false;
    std::vector<ContextResult> contexts;
    // Per ray (declaration order): number of contexts it appears in.
    std::vector<std::pair<std::string, std::size_t>> occurrences;

    bool operator==(const VerifyReport&) const = default;
};

/// Check every context for orthogonal completeness and count how often each
/// ray is used.  Violations are report content, never exceptions.
VerifyReport verify(const KSSet& set);

/**
 * Standalone non-colorability proof by parity: if every ray occurs an even
 * number of times and the number of contexts is odd, the total number of
 * "yes" answers would have to be simultaneously even (sum of even per-ray
 * contributions) and odd (one per context), so no assignment exists.
 */
struct ParityCertificate {
    std::size_t context_count = 0;  // odd
    std::vector<std::pair<std::string, std::size_t>> occurrences;  // all even

    bool operator==(const ParityCertificate&) const = default;
};

// Requires verify(set).ok; throws std::invalid_argument otherwise.
std::optional<ParityCertificate> parity_certificate(const KSSet& set);

}  // namespace ks
