#pragma once

#include <string>

namespace schur {

/// Outcome of a verification procedure. Reject carries a machine-readable
/// axiom tag plus a human-readable witness naming the offending classes or
/// exponents. AcceptFragment means every check that fits inside the declared
/// universe passed, but the universe is a truncation, so total verification
/// is not possible.
enum class VerdictStatus { Accept, AcceptFragment, Reject };

struct Verdict {
    VerdictStatus status = VerdictStatus::Accept;
    std::string axiom;
    std::string witness;

    bool ok() const { return status != VerdictStatus::Reject; }

    static Verdict accept() { return {VerdictStatus::Accept, "", ""}; }
    static Verdict accept_fragment() { return {VerdictStatus::AcceptFragment, "", ""}; }
    static Verdict reject(std::string axiom, std::string witness) {
        return {VerdictStatus::Reject, std::move(axiom), std::move(witness)};
    }
};

inline std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Accept: return "accept";
    case VerdictStatus::AcceptFragment: return "accept-fragment";
    case VerdictStatus::Reject: return "reject";
    }
    return "?";
}

} // namespace schur
