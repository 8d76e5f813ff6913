#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "apartness/axioms.hpp"
#include "apartness/properties.hpp"
#include "apartness/topology.hpp"

namespace apartness {

enum class Prop : int {
    kB1, kB2, kB3, kB4, kB5, kSym, kTight, kEf, kNn, kWss, kD11, kD12
};
constexpr int kPropCount = 12;

inline const char* prop_name(Prop p) {
    static constexpr const char* names[kPropCount] = {"B1", "B2", "B3", "B4", "B5", "SYM",
                                                      "TIGHT", "EF", "NN", "WSS", "D11", "D12"};
    return names[static_cast<int>(p)];
}

inline std::optional<Prop> parse_prop(const std::string& name) {
    for (int i = 0; i < kPropCount; ++i)
        if (name == prop_name(static_cast<Prop>(i))) return static_cast<Prop>(i);
    return std::nullopt;
}

struct Verdicts {
    std::array<bool, kPropCount> v{};
    bool get(Prop p) const { return v[static_cast<int>(p)]; }
    bool operator==(const Verdicts&) const = default;
};

/// Lazily evaluates the property lattice of one model, sharing the axiom
/// sweep between B4 and B5 and memoising everything else.
class ModelEvaluator {
public:
    ModelEvaluator(const Space& s, WssReading wss) : s_(s), wss_(wss) {}

    bool get(Prop p) {
        auto& slot = memo_[static_cast<int>(p)];
        if (!slot) slot = compute(p);
        return *slot;
    }

    Verdicts all() {
        Verdicts out;
        for (int i = 0; i < kPropCount; ++i) out.v[i] = get(static_cast<Prop>(i));
        return out;
    }

    /// Full report (with witness) for one property; used to attach
    /// witnesses for the forbidden properties of emitted models.
    PropertyReport report(Prop p) {
        switch (p) {
            case Prop::kB1:
            case Prop::kB2:
            case Prop::kB3:
            case Prop::kB4:
            case Prop::kB5:
            case Prop::kSym: {
                const CheckResult& r = axiom_result(p);
                return r.ok ? PropertyReport::pass(prop_name(p))
                            : PropertyReport::fail(prop_name(p), r.witness);
            }
            case Prop::kTight: {
                CheckResult r = check_tight(s_.ineq);
                return r.ok ? PropertyReport::pass("TIGHT")
                            : PropertyReport::fail("TIGHT", std::move(r.witness));
            }
            case Prop::kEf:
                return check_ef(s_);
            case Prop::kNn:
                return check_nn(s_);
            case Prop::kWss:
                return check_wss(s_, wss_);
            case Prop::kD11:
                return check_d11(s_);
            case Prop::kD12:
                return check_d12(s_);
        }
        throw std::logic_error("unreachable");
    }

private:
    const CheckResult& axiom_result(Prop p) {
        if (!axioms_) axioms_ = check_axioms(s_);
        switch (p) {
            case Prop::kB1: return axioms_->b1;
            case Prop::kB2: return axioms_->b2;
            case Prop::kB3: return axioms_->b3;
            case Prop::kB4: return axioms_->b4;
            case Prop::kB5: return axioms_->b5;
            default: return axioms_->symmetry;
        }
    }

    bool compute(Prop p) {
        switch (p) {
            case Prop::kTight: return check_tight(s_.ineq).ok;
            case Prop::kEf: return check_ef(s_).ok;
            case Prop::kNn: return check_nn(s_).ok;
            case Prop::kWss: return check_wss(s_, wss_).ok;
            case Prop::kD11: return check_d11(s_).ok;
            case Prop::kD12: return check_d12(s_).ok;
            default: return axiom_result(p).ok;
        }
    }

    const Space& s_;
    WssReading wss_;
    std::optional<AxiomReport> axioms_;
    std::array<std::optional<bool>, kPropCount> memo_;
};

/// Lexicographically minimal joint (neq, p) encoding over all carrier
/// permutations. Pair states per unordered pair, in pair order
/// (0,1),(0,2),...,(1,2),...: 0 = unrelated, 1 = unequal only,
/// 2 = unequal and apart. Isomorphic spaces share encodings.
inline std::string model_encoding(const Space& s) {
    std::string digits;
    digits.reserve(s.n * (s.n - 1) / 2);
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            digits.push_back(s.p(i, j) ? '2' : (s.neq(i, j) ? '1' : '0'));
    return std::to_string(s.n) + ":" + digits;
}

inline std::string canonical_form(const Space& s) {
    if (s.n > 6) throw std::length_error("canonical_form: carrier too large (max 6)");
    std::vector<int> perm(s.n);
    for (int i = 0; i < s.n; ++i) perm[i] = i;
    std::string best;
    do {
        std::string digits;
        digits.reserve(s.n * (s.n - 1) / 2);
        for (int i = 0; i < s.n; ++i)
            for (int j = i + 1; j < s.n; ++j)
                digits.push_back(s.p(perm[i], perm[j]) ? '2' : (s.neq(perm[i], perm[j]) ? '1' : '0'));
        if (best.empty() || digits < best) best = std::move(digits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(s.n) + ":" + best;
}

/// Search constraints for the model finder. The search space is the
/// per-pair state encoding justified by the B3 collapse: 3^(n(n-1)/2)
/// candidates, every one of which satisfies B1, B2, B3, SYM and D11 by
/// construction.
struct ModelQuery {
    int n = 3;
    std::vector<Prop> require;
    std::vector<Prop> forbid;
    long limit = 0; // 0 = unlimited
    bool canonicalize = false;
    WssReading wss_reading = WssReading::kNeighborhood;
    int threads = 1; // 0 = hardware concurrency

    void validate() const {
        if (n < 1) throw std::invalid_argument("ModelQuery: carrier must be inhabited");
        if (n > 7) throw std::length_error("ModelQuery: carrier too large (max 7)");
        for (Prop r : require)
            for (Prop f : forbid)
                if (r == f)
                    throw std::invalid_argument("ModelQuery: require and forbid must be disjoint");
    }
};

/// A certified model: its full verdict map, witnesses for every forbidden
/// property, and the canonical-form tag (carriers up to 6).
struct ModelReport {
    Space model;
    Verdicts verdicts;
    std::vector<PropertyReport> forbidden_witnesses;
    std::string canonical_tag;
};

namespace detail {

inline Space space_from_states(int n, const std::vector<int>& states) {
    BoolMatrix neq(n), p(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            if (states[k] >= 1) {
                neq.set(i, j, true);
                neq.set(j, i, true);
            }
            if (states[k] == 2) {
                p.set(i, j, true);
                p.set(j, i, true);
            }
        }
    return Space::create(n, neq, p);
}

inline bool states_match(const ModelQuery& q, ModelEvaluator& eval) {
    for (Prop r : q.require)
        if (!eval.get(r)) return false;
    for (Prop f : q.forbid)
        if (eval.get(f)) return false;
    return true;
}

} // namespace detail

/// Deterministic lexicographic enumeration of all models matching the
/// query, in pair-state order with the first pair most significant. The
/// work is partitioned by fixing a prefix of pair states; partial results
/// merge in prefix order, so output is identical for any worker count.
/// With canonicalize set, only canonical representatives are emitted (one
/// per isomorphism class).
inline std::vector<ModelReport> enumerate_models(const ModelQuery& q) {
    q.validate();
    const int pairs = q.n * (q.n - 1) / 2;
    const bool tight_required =
        std::find(q.require.begin(), q.require.end(), Prop::kTight) != q.require.end();

    int threads = q.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : q.threads;
    if (threads < 1) threads = 1;

    // prefix length: enough tasks to balance, never more than the pairs
    int prefix_len = 0;
    long tasks = 1;
    while (prefix_len < pairs && tasks < 4L * threads) {
        tasks *= 3;
        ++prefix_len;
    }

    std::vector<std::vector<ModelReport>> slots(tasks);
    std::vector<char> done(tasks, 0);
    std::atomic<long> next_task{0};
    std::atomic<bool> stop{false};
    std::mutex merge_mutex;

    auto emit_check = [&](const std::vector<int>& states, std::vector<ModelReport>& out) {
        Space s = detail::space_from_states(q.n, states);
        ModelEvaluator eval(s, q.wss_reading);
        if (!detail::states_match(q, eval)) return;
        std::string tag = (q.n <= 6) ? canonical_form(s) : std::string();
        if (q.canonicalize && model_encoding(s) != tag) return;
        ModelReport rep;
        rep.verdicts = eval.all();
        for (Prop f : q.forbid) rep.forbidden_witnesses.push_back(eval.report(f));
        rep.canonical_tag = std::move(tag);
        rep.model = std::move(s);
        out.push_back(std::move(rep));
    };

    auto run_task = [&](long task_id) {
        std::vector<int> states(pairs, 0);
        long rest = task_id;
        for (int k = prefix_len - 1; k >= 0; --k) {
            states[k] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        if (tight_required)
            for (int k = 0; k < prefix_len; ++k)
                if (states[k] == 0) return;
        std::vector<ModelReport>& out = slots[task_id];
        // depth-first over the remaining pairs, states ascending
        std::function<void(int)> walk = [&](int k) {
            if (stop.load(std::memory_order_relaxed)) return;
            if (k == pairs) {
                emit_check(states, out);
                return;
            }
            for (int st = tight_required ? 1 : 0; st <= 2; ++st) {
                states[k] = st;
                walk(k + 1);
            }
            states[k] = 0;
        };
        walk(prefix_len);
    };

    auto worker = [&] {
        while (true) {
            const long id = next_task.fetch_add(1);
            if (id >= tasks) return;
            if (!stop.load(std::memory_order_relaxed)) run_task(id);
            if (q.limit > 0) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                done[id] = 1;
                long ready = 0;
                for (long t = 0; t < tasks && done[t]; ++t)
                    ready += static_cast<long>(slots[t].size());
                if (ready >= q.limit) stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ModelReport> merged;
    for (auto& slot : slots) {
        for (auto& rep : slot) {
            if (q.limit > 0 && static_cast<long>(merged.size()) >= q.limit) return merged;
            merged.push_back(std::move(rep));
        }
    }
    return merged;
}

/// Observed relationships between properties over the exhaustive model
/// catalog at one carrier size.
struct CatalogLevel {
    int n = 0;
    long total_models = 0;
    long canonical_models = 0;
    std::array<long, kPropCount> property_counts{};
    /// implication_violations[p][q] = number of models with p and not q;
    /// zero means "p => q observed at this n".
    std::array<std::array<long, kPropCount>, kPropCount> implication_violations{};
    std::array<std::array<std::string, kPropCount>, kPropCount> implication_counterexample{};
    /// canonical tags of models whose two WSS readings disagree
    std::vector<std::string> wss_divergent;
};

struct CatalogDocument {
    int nmax = 0;
    std::vector<CatalogLevel> levels;
};

/// Full property lattice over every model with carrier up to nmax, plus
/// the observed implication matrix and the divergence list between the two
/// WSS readings.
inline CatalogDocument catalog(int nmax, int threads = 1) {
    if (nmax < 1 || nmax > 6) throw std::invalid_argument("catalog: nmax must be in [1,6]");
    CatalogDocument doc;
    doc.nmax = nmax;
    for (int n = 1; n <= nmax; ++n) {
        ModelQuery q;
        q.n = n;
        q.threads = threads;
        std::vector<ModelReport> models = enumerate_models(q);
        CatalogLevel level;
        level.n = n;
        level.total_models = static_cast<long>(models.size());
        for (const ModelReport& rep : models) {
            if (rep.canonical_tag == model_encoding(rep.model)) ++level.canonical_models;
            for (int p = 0; p < kPropCount; ++p)
                if (rep.verdicts.v[p]) ++level.property_counts[p];
            for (int p = 0; p < kPropCount; ++p)
                for (int r = 0; r < kPropCount; ++r)
                    if (rep.verdicts.v[p] && !rep.verdicts.v[r]) {
                        if (level.implication_violations[p][r] == 0)
                            level.implication_counterexample[p][r] = rep.canonical_tag;
                        ++level.implication_violations[p][r];
                    }
            const bool neighborhood = rep.verdicts.get(Prop::kWss);
            const bool difference = check_wss(rep.model, WssReading::kDifference).ok;
            if (neighborhood != difference) level.wss_divergent.push_back(rep.canonical_tag);
        }
        std::sort(level.wss_divergent.begin(), level.wss_divergent.end());
        level.wss_divergent.erase(
            std::unique(level.wss_divergent.begin(), level.wss_divergent.end()),
            level.wss_divergent.end());
        doc.levels.push_back(std::move(level));
    }
    return doc;
}

} // namespace apartness
