#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membrane/digest.hpp"
#include "membrane/policy.hpp"
#include "membrane/tags.hpp"

namespace membrane {

// One adjudication-bound, hash-chained evidence unit. self_hash covers
// (seq, act, decision, policy_version, ctx_abs, tag_set, prev_hash) in that
// order with fixed-width big-endian integers. The context abstraction bytes
// travel with the record so replay can execute; they are covered by ctx_abs.
struct WitnessRecord {
    std::uint64_t seq = 0;
    ActionId act;
    Decision decision = Decision::Reject;
    std::string policy_version;
    Digest ctx_abs = kZeroDigest;
    TagSet tag_set;
    Digest prev_hash = kZeroDigest;
    Digest self_hash = kZeroDigest;
    std::vector<std::uint8_t> ctx_blob;
};

Digest witness_self_hash(const WitnessRecord& rec);

struct VerificationReport {
    bool ok = true;
    std::optional<std::uint64_t> first_bad_seq;
    std::uint64_t checked = 0;
};

// Tamper-evident append-only witness store. Appends happen only inside the
// executor's commit point; the gate type below cannot be constructed anywhere
// else. Out-of-band append attempts are refused and counted as incidents.
class Ledger {
  public:
    class CommitGate {
        CommitGate() = default;
        friend class MembraneExecutor;
        friend class Ledger;  // test gate factory below
    };

    const WitnessRecord& anchor(const CommitGate&, const ActionId& act, Decision decision,
                                const std::string& policy_version, const Digest& ctx_abs,
                                std::vector<std::uint8_t> ctx_blob, const TagSet& tags);

    // The unmediated path: always refused, recorded as an incident.
    void anchor_out_of_band(const ActionId& act, Decision decision,
                            const std::string& policy_version, const Digest& ctx_abs,
                            const TagSet& tags);

    const std::vector<WitnessRecord>& records() const { return records_; }
    std::uint64_t size() const { return records_.size(); }
    Digest head_hash() const { return records_.empty() ? kZeroDigest : records_.back().self_hash; }
    std::uint64_t out_of_band_attempts() const { return out_of_band_attempts_; }

    // Recomputes every self-hash and chain link; reports the first bad seq.
    VerificationReport verify_chain() const;

    // Test hook: the next gated append throws, exercising the executor's
    // atomic abort path.
    void fail_next_append_for_testing() { fail_next_append_ = true; }

    // Test hook: mutates one byte of a stored record field so tamper
    // detection can be exercised end to end.
    void tamper_decision_for_testing(std::uint64_t seq);

    // Canonical binary persistence: length-prefixed records behind a magic
    // header. The serialized form of a ledger prefix is a byte prefix of any
    // later serialization.
    void save(const std::string& path) const;
    static Ledger load(const std::string& path);
    std::vector<std::uint8_t> serialize() const;
    static Ledger deserialize(const std::vector<std::uint8_t>& bytes);

    // Human-readable export, one JSON object per record.
    void export_jsonl(const std::string& path) const;

    static CommitGate gate_for_testing() { return CommitGate{}; }

  private:
    std::vector<WitnessRecord> records_;
    std::uint64_t out_of_band_attempts_ = 0;
    bool fail_next_append_ = false;
};

// Re-runs adjudication from the pinned policy version and stored context
// abstraction; returns the reconstructed decision class. Scope is
// decision-class determinism only.
Decision replay(const WitnessRecord& rec, const PolicyRegistry& registry);

struct ReplayOutcome {
    std::uint64_t seq = 0;
    Decision stored = Decision::Reject;
    std::optional<Decision> recomputed;
    bool match = false;
    std::string error;  // non-empty when replay could not run
};

std::vector<ReplayOutcome> replay_all(const Ledger& ledger, const PolicyRegistry& registry);

}  // namespace membrane
