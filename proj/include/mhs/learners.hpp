#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mhs/consistency.hpp"
#include "mhs/convexity.hpp"
#include "mhs/enumeration.hpp"
#include "mhs/errors.hpp"
#include "mhs/graph.hpp"
#include "mhs/shadows.hpp"

namespace mhs {

// --- PAC -------------------------------------------------------------------

inline std::int64_t pac_sample_size(double epsilon, double delta, int d) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("epsilon and delta must lie in (0,1)");
    if (d < 1) throw std::invalid_argument("VC bound must be positive");
    double v = (4.0 / epsilon) * (d * std::log(13.0 / epsilon) + std::log(2.0 / delta));
    return static_cast<std::int64_t>(std::ceil(v));
}

inline std::int64_t pac_sample_size_agnostic(double epsilon, double delta, int d) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("epsilon and delta must lie in (0,1)");
    if (d < 1) throw std::invalid_argument("VC bound must be positive");
    double v = (2.0 / (epsilon * epsilon)) * (d * std::log(4.0) + std::log(2.0 / delta));
    return static_cast<std::int64_t>(std::ceil(v));
}

inline Halfspace pac_learn_realizable(const Graph& g, const LabeledSample& sample) {
    auto h = mh_check(g, sample);
    if (!h) throw NotRealizableError("sample not realizable");
    return *h;
}

struct ErmResult {
    Halfspace hypothesis;
    double risk = 0.0;
    std::size_t mistakes = 0;
};

// Empirical risk minimizer over the full class; ties go to the canonically
// smallest halfspace.
inline ErmResult erm(const Graph& g, const LabeledSample& sample) {
    std::vector<Halfspace> all = list_all_fpt(g);
    std::sort(all.begin(), all.end(), [](const Halfspace& a, const Halfspace& b) { return lex_less(a, b); });
    ErmResult best{all.front(), 0.0, sample.size() + 1};
    for (const Halfspace& h : all) {
        std::size_t wrong = 0;
        for (auto [v, y] : sample.entries)
            if (h.contains(v) != (y == 1)) ++wrong;
        if (wrong < best.mistakes) best = {h, 0.0, wrong};
    }
    if (!sample.entries.empty())
        best.risk = static_cast<double>(best.mistakes) / static_cast<double>(sample.size());
    return best;
}

// --- Transcripts and oracles -------------------------------------------------

struct TranscriptEvent {
    enum class Kind { prediction, query };
    Kind kind;
    int round = -1;
    Vertex vertex = -1;
    int predicted = -1;
    int truth = -1;
    bool mistake = false;
    int answer = -1;
};

struct LearnerTranscript {
    std::vector<TranscriptEvent> events;
    std::size_t mistakes = 0;
    std::size_t queries = 0;

    void record_prediction(int round, Vertex v, int predicted, int truth) {
        TranscriptEvent e;
        e.kind = TranscriptEvent::Kind::prediction;
        e.round = round;
        e.vertex = v;
        e.predicted = predicted;
        e.truth = truth;
        e.mistake = predicted != truth;
        events.push_back(e);
        if (e.mistake) ++mistakes;
    }

    void record_query(Vertex v, int answer) {
        TranscriptEvent e;
        e.kind = TranscriptEvent::Kind::query;
        e.vertex = v;
        e.answer = answer;
        events.push_back(e);
        ++queries;
    }

    bool totals_consistent() const {
        std::size_t m = 0, q = 0;
        for (const TranscriptEvent& e : events) {
            if (e.kind == TranscriptEvent::Kind::prediction && e.mistake) ++m;
            if (e.kind == TranscriptEvent::Kind::query) ++q;
        }
        return m == mistakes && q == queries;
    }
};

// Label oracle that counts every call.
class QueryOracle {
public:
    virtual ~QueryOracle() = default;

    int answer(Vertex v) {
        ++calls_;
        return label(v);
    }

    std::size_t calls() const { return calls_; }

protected:
    virtual int label(Vertex v) const = 0;

private:
    std::size_t calls_ = 0;
};

class HalfspaceOracle : public QueryOracle {
public:
    explicit HalfspaceOracle(Halfspace target) : target_(std::move(target)) {}
    const Halfspace& target() const { return target_; }

protected:
    int label(Vertex v) const override { return target_.contains(v) ? 1 : 0; }

private:
    Halfspace target_;
};

// --- Active learning ---------------------------------------------------------

// Exact learning by membership queries: label a hull set, binary-search one
// bichromatic shortest path down to the cut edge, label one representative
// per component of the complemented triangle set, propagate by bipartition,
// and assemble the halfspace from shadows.
inline Halfspace active_learn(const Graph& g, QueryOracle& oracle, LearnerTranscript* transcript = nullptr) {
    int n = g.vertex_count();
    std::vector<int> memo(static_cast<std::size_t>(n), -1);
    auto ask = [&](Vertex x) {
        int& m = memo[static_cast<std::size_t>(x)];
        if (m == -1) {
            m = oracle.answer(x);
            if (transcript) transcript->record_query(x, m);
        }
        return m;
    };

    VertexSet hull = hull_set_greedy(g);
    Vertex p = -1, q = -1;  // lowest positive / negative hull vertices
    for (Vertex z : hull) {
        Vertex& slot = ask(z) == 1 ? p : q;
        if (slot == -1) slot = z;
    }
    if (q == -1) return VertexSet::full(n);
    if (p == -1) return VertexSet(n);

    std::vector<Vertex> path = shortest_path(g, p, q);
    std::size_t lo = 0, hi = path.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        (ask(path[mid]) == 1 ? lo : hi) = mid;
    }
    Vertex u = path[lo], v = path[hi];

    VertexSet tri = triangle_set(g, u, v);
    InducedSubgraph sub = complement_induced(g, tri);
    const Graph& ct = sub.graph;
    std::vector<VertexSet> comps = components(ct, VertexSet::full(ct.vertex_count()));
    std::vector<int> inferred(static_cast<std::size_t>(n), -1);
    for (const VertexSet& comp : comps) {
        std::vector<int> color(static_cast<std::size_t>(ct.vertex_count()), -1);
        std::vector<Vertex> queue{comp.first()};
        color[static_cast<std::size_t>(comp.first())] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : ct.neighbors(queue[i])) {
                int cx = color[static_cast<std::size_t>(queue[i])];
                int& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = cx ^ 1;
                    queue.push_back(w);
                } else if (cw == cx) {
                    throw NotRealizableError("oracle not realizable", sub.to_parent[static_cast<std::size_t>(w)]);
                }
            }
        Vertex ref = -1;  // parent ids; reuse u or v before spending a query
        for (Vertex x : comp) {
            Vertex px = sub.to_parent[static_cast<std::size_t>(x)];
            if (px == u || px == v) {
                ref = x;
                break;
            }
        }
        if (ref == -1) ref = comp.first();
        int ref_label = ask(sub.to_parent[static_cast<std::size_t>(ref)]);
        for (Vertex x : comp) {
            bool same = color[static_cast<std::size_t>(x)] == color[static_cast<std::size_t>(ref)];
            inferred[static_cast<std::size_t>(sub.to_parent[static_cast<std::size_t>(x)])] = same ? ref_label : 1 - ref_label;
        }
    }

    Halfspace h(n);
    ShadowCache shadows(g);
    for (Vertex z : tri)
        if (inferred[static_cast<std::size_t>(z)] == 1 && z != v) h |= shadows.shadow(z, v);
    if (!is_halfspace(g, h)) throw NotRealizableError("oracle not realizable");
    for (Vertex x = 0; x < n; ++x)
        if (memo[static_cast<std::size_t>(x)] != -1 && h.contains(x) != (memo[static_cast<std::size_t>(x)] == 1))
            throw NotRealizableError("oracle not realizable", x);
    return h;
}

// --- Online learning ---------------------------------------------------------

// The 2m shadow features: for edges e_1 < … < e_m with e_i = (u_i, v_i),
// feature i is the shadow u_i/v_i and feature m+i is v_i/u_i.
class FeatureTable {
public:
    explicit FeatureTable(const Graph& g) {
        ShadowCache shadows(g);
        auto es = g.edges();
        features_.reserve(2 * es.size());
        for (auto [u, v] : es) features_.push_back(shadows.shadow(u, v));
        for (auto [u, v] : es) features_.push_back(shadows.shadow(v, u));
    }

    std::size_t feature_count() const { return features_.size(); }
    const VertexSet& feature(std::size_t i) const { return features_.at(i); }
    bool phi(Vertex x, std::size_t i) const { return features_[i].contains(x); }

private:
    std::vector<VertexSet> features_;
};

// Winnow1 over the shadow features (promotion doubles; demotion eliminates in
// the realizable variant and halves in the agnostic one).
class WinnowState {
public:
    enum class Demotion { eliminate, halve };

    WinnowState(const Graph& g, Demotion demotion = Demotion::eliminate)
        : table_(g), demotion_(demotion), weights_(table_.feature_count(), 1.0),
          theta_(static_cast<double>(table_.feature_count())) {}

    int predict(Vertex x) const {
        double s = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (table_.phi(x, i)) s += weights_[i];
        return s >= theta_ ? 1 : 0;
    }

    void observe(Vertex x, int truth) {
        int p = predict(x);
        if (p == truth) return;
        ++mistakes_;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (!table_.phi(x, i)) continue;
            if (truth == 1)
                weights_[i] *= alpha_;
            else
                weights_[i] = demotion_ == Demotion::eliminate ? 0.0 : weights_[i] / 2.0;
        }
    }

    int feed(Vertex x, int truth) {
        int p = predict(x);
        observe(x, truth);
        return p;
    }

    const std::vector<double>& weights() const { return weights_; }
    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    std::size_t mistakes() const { return mistakes_; }
    const FeatureTable& features() const { return table_; }

private:
    FeatureTable table_;
    Demotion demotion_;
    std::vector<double> weights_;
    double theta_;
    double alpha_ = 2.0;
    std::size_t mistakes_ = 0;
};

inline WinnowState winnow_online(const Graph& g) { return WinnowState(g, WinnowState::Demotion::eliminate); }
inline WinnowState agnostic_winnow_online(const Graph& g) { return WinnowState(g, WinnowState::Demotion::halve); }

// Mistake budget for realizable Winnow1: 2·ω·(log₂(2m) + 1) + 1.
inline double winnow1_mistake_bound(const Graph& g) {
    double m = static_cast<double>(g.edge_count());
    double w = static_cast<double>(clique_number(g));
    return 2.0 * w * (std::log2(2.0 * m) + 1.0) + 1.0;
}

// Halving over the enumerated class: majority vote, then discard hypotheses
// inconsistent with the revealed label.
class HalvingState {
public:
    explicit HalvingState(const Graph& g) : version_space_(list_all_fpt(g)) {}

    int predict(Vertex x) const {
        std::size_t pos = 0;
        for (const Halfspace& h : version_space_)
            if (h.contains(x)) ++pos;
        return 2 * pos >= version_space_.size() ? 1 : 0;
    }

    void observe(Vertex x, int truth) {
        if (predict(x) != truth) ++mistakes_;
        std::erase_if(version_space_, [&](const Halfspace& h) { return h.contains(x) != (truth == 1); });
        if (version_space_.empty()) throw NotRealizableError("stream not realizable", x);
    }

    int feed(Vertex x, int truth) {
        int p = predict(x);
        observe(x, truth);
        return p;
    }

    const std::vector<Halfspace>& version_space() const { return version_space_; }
    std::size_t mistakes() const { return mistakes_; }

private:
    std::vector<Halfspace> version_space_;
    std::size_t mistakes_ = 0;
};

inline HalvingState halving_online(const Graph& g) { return HalvingState(g); }

// Weighted majority (β = ½) over the enumerated class; ties predict 0.
class WeightedMajorityState {
public:
    explicit WeightedMajorityState(const Graph& g) : WeightedMajorityState(list_all_fpt(g)) {}
    explicit WeightedMajorityState(std::vector<Halfspace> experts)
        : experts_(std::move(experts)), weights_(experts_.size(), 1.0) {}

    int predict(Vertex x) const {
        double pos = 0.0, neg = 0.0;
        for (std::size_t i = 0; i < experts_.size(); ++i)
            (experts_[i].contains(x) ? pos : neg) += weights_[i];
        return pos > neg ? 1 : 0;
    }

    void observe(Vertex x, int truth) {
        if (predict(x) != truth) ++mistakes_;
        for (std::size_t i = 0; i < experts_.size(); ++i)
            if (experts_[i].contains(x) != (truth == 1)) weights_[i] *= beta_;
    }

    int feed(Vertex x, int truth) {
        int p = predict(x);
        observe(x, truth);
        return p;
    }

    const std::vector<Halfspace>& experts() const { return experts_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t mistakes() const { return mistakes_; }

private:
    std::vector<Halfspace> experts_;
    std::vector<double> weights_;
    double beta_ = 0.5;
    std::size_t mistakes_ = 0;
};

inline WeightedMajorityState weighted_majority_online(const Graph& g) { return WeightedMajorityState(g); }

// Feeds a labeled stream to any online predictor and records the transcript.
template <class Predictor>
LearnerTranscript run_stream(Predictor& predictor, const std::vector<std::pair<Vertex, int>>& stream) {
    LearnerTranscript t;
    int round = 0;
    for (auto [v, y] : stream) t.record_prediction(round++, v, predictor.feed(v, y), y);
    return t;
}

}  // namespace mhs
