#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblcat {

// ---------------------------------------------------------------- errors

struct DblError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A table or map references an id that does not exist, or pairs cells
// that are not composable.
struct MalformedTable : DblError {
    using DblError::DblError;
};

struct MalformedMap : DblError {
    using DblError::DblError;
};

struct ParseError : DblError {
    ParseError(const std::string& msg, int line, int col)
        : DblError("parse error at " + std::to_string(line) + ":" +
                   std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

struct ValidationError : DblError {
    using DblError::DblError;
};

struct BudgetExceeded : DblError {
    using DblError::DblError;
};

struct PreconditionFailed : DblError {
    PreconditionFailed(const std::string& cond, const std::string& msg)
        : DblError("PreconditionFailed: " + cond + (msg.empty() ? "" : " (" + msg + ")")),
          condition(cond) {}
    std::string condition;
};

struct NotInvertible : DblError {
    using DblError::DblError;
};

struct NonUnique : DblError {
    using DblError::DblError;
};

// A constructed datum failed its own verifier; signals a bug in the
// tables or in this library, never a property of valid input.
struct InternalInconsistency : DblError {
    using DblError::DblError;
};

struct UnknownName : DblError {
    using DblError::DblError;
};

// ---------------------------------------------------------------- budget

// Node budget for backtracking searches. Exceeding it throws; a search
// never silently returns a wrong answer.
struct Budget {
    long long limit = 10'000'000;
    long long used = 0;

    void tick(long long n = 1) {
        used += n;
        if (used > limit)
            throw BudgetExceeded("enumeration budget exceeded (" +
                                 std::to_string(limit) + " nodes)");
    }
};

// ---------------------------------------------------------------- reports

struct Violation {
    std::string law;    // e.g. "assoc-hmor", "interchange"
    std::string cells;  // offending ids, human readable
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string law, std::string cells) {
        violations.push_back({std::move(law), std::move(cells)});
    }
    std::string summary() const {
        if (ok()) return "valid";
        std::string s;
        for (const auto& v : violations) {
            s += v.law;
            s += ": ";
            s += v.cells;
            s += '\n';
        }
        return s;
    }
};

// Per-condition verdict of a structural check (db1..db4, f1..f2, ...).
struct ConditionVerdict {
    std::string tag;
    bool pass = true;
    std::string counterexample;  // empty iff pass
};

struct CheckReport {
    std::vector<ConditionVerdict> verdicts;

    bool pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
    bool passes(const std::string& tag) const {
        for (const auto& v : verdicts)
            if (v.tag == tag) return v.pass;
        throw UnknownName("no condition tagged '" + tag + "' in report");
    }
    const ConditionVerdict* find(const std::string& tag) const {
        for (const auto& v : verdicts)
            if (v.tag == tag) return &v;
        return nullptr;
    }
    void set(const std::string& tag, bool pass, const std::string& cx = "") {
        verdicts.push_back({tag, pass, pass ? "" : cx});
    }
    std::string summary() const {
        std::string s;
        for (const auto& v : verdicts) {
            s += v.tag;
            s += v.pass ? ": pass" : ": FAIL";
            if (!v.pass && !v.counterexample.empty()) {
                s += " [";
                s += v.counterexample;
                s += ']';
            }
            s += '\n';
        }
        return s;
    }
};

}  // namespace dblcat
