#include "ks/ksset.hpp"

#include <charconv>

#include "parse_util.hpp"
#include <fstream>
#include <set>
#include <sstream>

namespace ks {

const Ray* KSSet::find_ray(const std::string& name) const {
    for (const auto& nr : rays) {
        if (nr.name == name) return &nr.ray;
    }
    return nullptr;
}

const Context* KSSet::find_context(const std::string& name) const {
    for (const auto& ctx : contexts) {
        if (ctx.name == name) return &ctx;
    }
    return nullptr;
}

std::unordered_map<std::string, std::size_t> KSSet::ray_index() const {
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) idx.emplace(rays[i].name, i);
    return idx;
}

namespace {

using detail::Token;
using detail::tokenize;

std::int64_t parse_int(const std::string& file, std::size_t lineno, const Token& tok,
                       const std::string& text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(file, lineno, tok.column, "expected integer, got '" + text + "'");
    }
    return value;
}

enum class Field { Z, Zsqrt2 };

QuadInt parse_entry(const std::string& file, std::size_t lineno, const Token& tok, Field field) {
    auto colon = tok.text.find(':');
    if (colon == std::string::npos) {
        return QuadInt(parse_int(file, lineno, tok, tok.text));
    }
    if (field == Field::Z) {
        throw ParseError(file, lineno, tok.column,
                         "sqrt2 entry '" + tok.text + "' not allowed in field Z");
    }
    std::int64_t a = parse_int(file, lineno, tok, tok.text.substr(0, colon));
    std::int64_t b = parse_int(file, lineno, tok, tok.text.substr(colon + 1));
    return QuadInt(a, b);
}

}  // namespace

KSSet parse_ksset(std::istream& in, const std::string& filename) {
    KSSet set;
    bool have_dim = false;
    bool have_field = false;
    Field field = Field::Z;
    std::set<std::string> context_names;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (kw == "dim") {
            if (have_dim) throw ParseError(filename, lineno, toks[0].column, "duplicate dim line");
            if (toks.size() != 2) {
                throw ParseError(filename, lineno, toks[0].column, "expected: dim <d>");
            }
            std::int64_t d = parse_int(filename, lineno, toks[1], toks[1].text);
            if (d < 1) {
                throw ParseError(filename, lineno, toks[1].column, "dimension must be positive");
            }
            set.dim = static_cast<std::size_t>(d);
            have_dim = true;
        } else if (kw == "field") {
            if (have_field) {
                throw ParseError(filename, lineno, toks[0].column, "duplicate field line");
            }
            if (toks.size() != 2 || (toks[1].text != "Z" && toks[1].text != "Zsqrt2")) {
                throw ParseError(filename, lineno, toks[0].column,
                                 "expected: field Z | field Zsqrt2");
            }
            field = toks[1].text == "Z" ? Field::Z : Field::Zsqrt2;
            have_field = true;
        } else if (kw == "ray") {
            if (!have_dim || !have_field) {
                throw ParseError(filename, lineno, toks[0].column,
                                 "ray line before dim/field header");
            }
            if (toks.size() < 2) {
                throw ParseError(filename, lineno, toks[0].column, "ray line missing name");
            }
            const std::string& name = toks[1].text;
            if (set.find_ray(name) != nullptr || context_names.count(name)) {
                throw ParseError(filename, lineno, toks[1].column, "duplicate name '" + name + "'");
            }
            if (toks.size() != 2 + set.dim) {
                throw ParseError(filename, lineno, toks[0].column,
                                 "ray '" + name + "' has " + std::to_string(toks.size() - 2) +
                                     " entries, expected " + std::to_string(set.dim));
            }
            std::vector<QuadInt> entries;
            entries.reserve(set.dim);
            for (std::size_t i = 0; i < set.dim; ++i) {
                entries.push_back(parse_entry(filename, lineno, toks[2 + i], field));
            }
            bool all_zero = true;
            for (const auto& e : entries) {
                if (!e.is_zero()) all_zero = false;
            }
            if (all_zero) {
                throw ParseError(filename, lineno, toks[2].column,
                                 "ray '" + name + "' is the zero vector");
            }
            Ray ray = Ray(std::move(entries)).canonical();
            for (const auto& nr : set.rays) {
                if (nr.ray == ray) {
                    throw ParseError(filename, lineno, toks[1].column,
                                     "ray '" + name + "' is equivalent to already-declared '" +
                                         nr.name + "'");
                }
            }
            set.rays.push_back({name, std::move(ray)});
        } else if (kw == "context") {
            if (!have_dim || !have_field) {
                throw ParseError(filename, lineno, toks[0].column,
                                 "context line before dim/field header");
            }
            if (toks.size() < 2) {
                throw ParseError(filename, lineno, toks[0].column, "context line missing name");
            }
            const std::string& name = toks[1].text;
            if (context_names.count(name) || set.find_ray(name) != nullptr) {
                throw ParseError(filename, lineno, toks[1].column, "duplicate name '" + name + "'");
            }
            if (toks.size() != 2 + set.dim) {
                throw ParseError(filename, lineno, toks[0].column,
                                 "context '" + name + "' has " + std::to_string(toks.size() - 2) +
                                     " members, expected " + std::to_string(set.dim));
            }
            Context ctx;
            ctx.name = name;
            for (std::size_t i = 0; i < set.dim; ++i) {
                const Token& t = toks[2 + i];
                if (set.find_ray(t.text) == nullptr) {
                    throw ParseError(filename, lineno, t.column,
                                     "unknown ray name '" + t.text + "'");
                }
                for (const auto& m : ctx.members) {
                    if (m == t.text) {
                        throw ParseError(filename, lineno, t.column,
                                         "ray '" + t.text + "' repeated in context '" + name + "'");
                    }
                }
                ctx.members.push_back(t.text);
            }
            context_names.insert(name);
            set.contexts.push_back(std::move(ctx));
        } else {
            throw ParseError(filename, lineno, toks[0].column, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_dim) throw ParseError(filename, lineno + 1, 1, "missing dim line");
    if (!have_field) throw ParseError(filename, lineno + 1, 1, "missing field line");
    return set;
}

KSSet load_ksset(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open set file: " + path);
    }
    return parse_ksset(in, path);
}

VerifyReport verify(const KSSet& set) {
    VerifyReport report;
    report.ok = true;

    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& nr : set.rays) counts.emplace(nr.name, 0);

    for (const auto& ctx : set.contexts) {
        ContextResult cr;
        cr.context = ctx.name;

        std::vector<Ray> members;
        members.reserve(ctx.members.size());
        bool known = true;
        std::set<std::string> seen;
        for (const auto& m : ctx.members) {
            if (auto it = counts.find(m); it != counts.end()) {
                ++it->second;
            }
            const Ray* r = set.find_ray(m);
            if (r == nullptr) {
                known = false;
            } else {
                members.push_back(*r);
            }
            seen.insert(m);
        }

        if (!known || seen.size() != set.dim || ctx.members.size() != set.dim) {
            cr.status = ContextStatus::WrongArity;
        } else {
            BasisCheck check = check_orthogonal_basis(members, set.dim);
            if (check.ok) {
                cr.status = ContextStatus::Ok;
            } else if (check.why == BasisCheck::Why::NotOrthogonal) {
                cr.status = ContextStatus::OffendingPair;
                cr.offending = {ctx.members[check.offending->first],
                                ctx.members[check.offending->second]};
            } else {
                cr.status = ContextStatus::WrongArity;
            }
        }
        if (cr.status != ContextStatus::Ok) report.ok = false;
        report.contexts.push_back(std::move(cr));
    }

    for (const auto& nr : set.rays) {
        report.occurrences.emplace_back(nr.name, counts.at(nr.name));
    }
    return report;
}

std::optional<ParityCertificate> parity_certificate(const KSSet& set) {
    VerifyReport report = verify(set);
    if (!report.ok) {
        throw std::invalid_argument("parity_certificate: set does not verify");
    }
    if (set.contexts.size() % 2 == 0) return std::nullopt;
    for (const auto& [name, count] : report.occurrences) {
        if (count % 2 != 0) return std::nullopt;
    }
    ParityCertificate cert;
    cert.context_count = set.contexts.size();
    cert.occurrences = report.occurrences;
    return cert;
}

}  // namespace ks
