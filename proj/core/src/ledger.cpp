#include "membrane/ledger.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "membrane/errors.hpp"

namespace membrane {

namespace {

constexpr char kMagic[8] = {'M', 'W', 'L', 'G', '0', '0', '0', '1'};

std::vector<std::uint8_t> record_payload(const WitnessRecord& rec) {
    ByteWriter w;
    w.u64be(rec.seq);
    w.str(rec.act);
    w.u8(static_cast<std::uint8_t>(rec.decision));
    w.str(rec.policy_version);
    w.digest(rec.ctx_abs);
    w.u8(rec.tag_set.mask());
    w.digest(rec.prev_hash);
    w.digest(rec.self_hash);
    w.bytes(rec.ctx_blob);
    return w.take();
}

WitnessRecord record_from_payload(const std::vector<std::uint8_t>& payload) {
    ByteReader r(payload);
    WitnessRecord rec;
    rec.seq = r.u64be();
    rec.act = r.str();
    const std::uint8_t d = r.u8();
    if (d > 2) throw Error("ledger: record has an unknown decision class");
    rec.decision = static_cast<Decision>(d);
    rec.policy_version = r.str();
    rec.ctx_abs = r.digest();
    rec.tag_set = TagSet::from_mask(r.u8());
    rec.prev_hash = r.digest();
    rec.self_hash = r.digest();
    rec.ctx_blob = r.bytes();
    if (!r.done()) throw Error("ledger: trailing bytes in record payload");
    return rec;
}

}  // namespace

Digest witness_self_hash(const WitnessRecord& rec) {
    ByteWriter w;
    w.u64be(rec.seq);
    w.str(rec.act);
    w.u8(static_cast<std::uint8_t>(rec.decision));
    w.str(rec.policy_version);
    w.digest(rec.ctx_abs);
    w.u8(rec.tag_set.mask());
    w.digest(rec.prev_hash);
    return sha256(w.data());
}

const WitnessRecord& Ledger::anchor(const CommitGate&, const ActionId& act, Decision decision,
                                    const std::string& policy_version, const Digest& ctx_abs,
                                    std::vector<std::uint8_t> ctx_blob, const TagSet& tags) {
    if (fail_next_append_) {
        fail_next_append_ = false;
        throw Error("ledger: append failed");
    }
    WitnessRecord rec;
    rec.seq = records_.size();
    rec.act = act;
    rec.decision = decision;
    rec.policy_version = policy_version;
    rec.ctx_abs = ctx_abs;
    rec.tag_set = tags;
    rec.prev_hash = head_hash();
    rec.self_hash = witness_self_hash(rec);
    rec.ctx_blob = std::move(ctx_blob);
    records_.push_back(std::move(rec));
    return records_.back();
}

void Ledger::anchor_out_of_band(const ActionId& act, Decision, const std::string&, const Digest&,
                                const TagSet&) {
    ++out_of_band_attempts_;
    throw OutOfBandAppendError("ledger: append for act '" + act +
                               "' attempted outside the executor commit point; refused");
}

VerificationReport Ledger::verify_chain() const {
    VerificationReport report;
    Digest expected_prev = kZeroDigest;
    for (std::uint64_t i = 0; i < records_.size(); ++i) {
        const auto& rec = records_[i];
        ++report.checked;
        if (rec.seq != i || rec.prev_hash != expected_prev ||
            rec.self_hash != witness_self_hash(rec)) {
            report.ok = false;
            report.first_bad_seq = i;
            return report;
        }
        expected_prev = rec.self_hash;
    }
    return report;
}

void Ledger::tamper_decision_for_testing(std::uint64_t seq) {
    if (seq >= records_.size()) throw Error("tamper: no such record");
    auto& rec = records_[seq];
    rec.decision = rec.decision == Decision::Allow ? Decision::Reject : Decision::Allow;
}

std::vector<std::uint8_t> Ledger::serialize() const {
    ByteWriter w;
    w.raw(reinterpret_cast<const std::uint8_t*>(kMagic), sizeof(kMagic));
    for (const auto& rec : records_) {
        const auto payload = record_payload(rec);
        w.u32be(static_cast<std::uint32_t>(payload.size()));
        w.raw(payload.data(), payload.size());
    }
    return std::vector<std::uint8_t>(w.data());
}

Ledger Ledger::deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < sizeof(kMagic) ||
        !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
        throw Error("ledger: bad magic header");
    }
    Ledger out;
    std::size_t pos = sizeof(kMagic);
    while (pos < bytes.size()) {
        if (pos + 4 > bytes.size()) throw Error("ledger: truncated record length");
        std::uint32_t len = 0;
        for (int i = 0; i < 4; ++i) len = (len << 8) | bytes[pos++];
        if (pos + len > bytes.size()) throw Error("ledger: truncated record payload");
        std::vector<std::uint8_t> payload(bytes.begin() + pos, bytes.begin() + pos + len);
        pos += len;
        out.records_.push_back(record_from_payload(payload));
    }
    return out;
}

void Ledger::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("ledger: cannot open '" + path + "' for writing");
    const auto bytes = serialize();
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error("ledger: write to '" + path + "' failed");
}

Ledger Ledger::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("ledger: cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

void Ledger::export_jsonl(const std::string& path) const {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw Error("ledger: cannot open '" + path + "' for writing");
    for (const auto& rec : records_) {
        nlohmann::ordered_json j;
        j["seq"] = rec.seq;
        j["act"] = rec.act;
        j["decision"] = to_string(rec.decision);
        j["policy_version"] = rec.policy_version;
        j["ctx_abs"] = to_hex(rec.ctx_abs);
        j["tags"] = rec.tag_set.names();
        j["prev_hash"] = to_hex(rec.prev_hash);
        j["self_hash"] = to_hex(rec.self_hash);
        f << j.dump() << "\n";
    }
}

Decision replay(const WitnessRecord& rec, const PolicyRegistry& registry) {
    const Policy* policy = registry.find(rec.policy_version);
    if (!policy) {
        throw ReplayUnavailableError("replay: policy version '" + rec.policy_version +
                                     "' is not registered");
    }
    const MediationRequest req = request_from_context(rec.act, rec.ctx_blob, rec.ctx_abs,
                                                      registry.risk, registry.channels);
    return adjudicate(req, *policy, registry.risk);
}

std::vector<ReplayOutcome> replay_all(const Ledger& ledger, const PolicyRegistry& registry) {
    std::vector<ReplayOutcome> out;
    for (const auto& rec : ledger.records()) {
        ReplayOutcome o;
        o.seq = rec.seq;
        o.stored = rec.decision;
        try {
            o.recomputed = replay(rec, registry);
            o.match = *o.recomputed == rec.decision;
        } catch (const ReplayUnavailableError& e) {
            o.error = e.what();
        } catch (const Error& e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace membrane
