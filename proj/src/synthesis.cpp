#include "qpr/synthesis.hpp"

#include <algorithm>
#include <random>

#include "qpr/attainability.hpp"
#include "qpr/linalg.hpp"
#include "qpr/sequences.hpp"

namespace qpr {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

SymMat<Rational> bordered(const SymMat<Rational>& B, const std::vector<Rational>& x,
                          const Rational& t) {
    std::vector<Rational> v = matvec(B, std::span<const Rational>(x));
    Rational corner = dot(std::span<const Rational>(x), std::span<const Rational>(v), kQ) + t;
    return border(B, v, corner);
}

std::string op_name(SynthesisStep::Op op) {
    switch (op) {
    case SynthesisStep::Op::Base:
        return "base";
    case SynthesisStep::Op::AppendN:
        return "append N";
    case SynthesisStep::Op::AppendA:
        return "append A";
    case SynthesisStep::Op::AppendSN:
        return "append SN";
    case SynthesisStep::Op::AppendSA:
        return "append SA";
    }
    return "?";
}

// Requires an N-free qpr ending in A (i.e. B nonsingular with no order
// fully degenerate); shared precondition of the A/SN/SA moves.
void require_headlike(const std::string& q, const char* what) {
    bool ok = !q.empty() && q.back() == 'A' && q.find('N') == std::string::npos;
    if (!ok)
        throw DomainError(std::string(what) +
                          " requires a matrix whose qpr is over {A,S} and ends in A, got \"" +
                          q + "\"");
}

struct Drawer {
    std::mt19937_64 rng;

    explicit Drawer(std::uint64_t seed) : rng(seed) {}

    long draw(int bound) {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(rng() % span) - bound;
    }
    long draw_nonzero(int bound) {
        long v;
        do
            v = draw(bound);
        while (v == 0);
        return v;
    }
};

// Candidate loop shared by all four moves: draw x (first coordinate pinned
// to zero for the SN/SA moves), run the corner schedule, verify the full
// qpr of the bordered matrix against `target`.
SymMat<Rational> drive(const SymMat<Rational>& B, const std::string& target,
                       SynthesisStep::Op op, bool pin_first, bool with_t,
                       const RetryPolicy& policy, SynthesisStep* step) {
    if (policy.initial_bound < 1 || policy.max_retries < 1)
        throw DomainError("retry policy needs initial_bound >= 1 and max_retries >= 1");
    Drawer rnd(policy.seed);
    DetWorkspace<Rational> ws;
    int growth = std::max(1, (policy.max_retries + 7) / 8);
    int retries = 0;
    int n = B.order();
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (;;) {
        int bound = policy.initial_bound << std::min(retries / growth, 16);
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] =
                (pin_first && i == 0) ? Rational(0) : Rational(rnd.draw(bound));
        // Corner schedule: small integers first so witnesses stay readable,
        // then a few random corners before giving up on this x.
        int tries_per_x = with_t ? 8 : 1;
        for (int ti = 0; ti < tries_per_x; ++ti) {
            Rational t = !with_t ? Rational(0)
                         : ti < 3 ? Rational(ti + 1)
                                  : Rational(rnd.draw_nonzero(bound));
            SymMat<Rational> cand = bordered(B, x, t);
            if (compute_qpr(cand, ws) == target) {
                if (step) {
                    step->op = op;
                    step->x = x;
                    step->t = t;
                    step->retries = retries;
                    step->qpr_after = target;
                }
                return cand;
            }
            if (++retries >= policy.max_retries)
                throw Error(op_name(op) + ": retry budget exhausted after " +
                            std::to_string(retries) + " candidates (target \"" + target +
                            "\")");
        }
    }
}

} // namespace

std::string base_kind_str(BaseKind kind) {
    switch (kind) {
    case BaseKind::Zero:
        return "zero";
    case BaseKind::A:
        return "A";
    case BaseKind::AA:
        return "AA";
    case BaseKind::SA:
        return "SA";
    case BaseKind::AllSThenA:
        return "S..SA";
    }
    return "?";
}

SymMat<Rational> base_witness(BaseKind kind, int n) {
    SymMat<Rational> m;
    std::string want;
    auto require = [&](bool ok, const char* need) {
        if (!ok)
            throw DomainError("base witness " + base_kind_str(kind) + " needs order " + need +
                              ", got " + std::to_string(n));
    };
    switch (kind) {
    case BaseKind::Zero:
        require(n >= 1, ">= 1");
        m = SymMat<Rational>::zero(n, kQ);
        want.assign(static_cast<std::size_t>(n), 'N');
        break;
    case BaseKind::A:
        require(n == 1, "1");
        m = SymMat<Rational>::from_rows({{Rational(1)}}, kQ);
        want = "A";
        break;
    case BaseKind::AA:
        require(n == 2, "2");
        m = SymMat<Rational>::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}},
                                        kQ);
        want = "AA";
        break;
    case BaseKind::SA:
        require(n == 2, "2");
        m = SymMat<Rational>::identity(2, kQ);
        want = "SA";
        break;
    case BaseKind::AllSThenA:
        require(n >= 2, ">= 2");
        m = direct_sum(SymMat<Rational>::identity(n - 2, kQ),
                       SymMat<Rational>::from_rows(
                           {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}, kQ));
        want = std::string(static_cast<std::size_t>(n - 1), 'S') + "A";
        break;
    }
    std::string got = compute_qpr(m);
    if (got != want)
        throw Error("base witness " + base_kind_str(kind) + " computed qpr \"" + got +
                    "\", expected \"" + want + "\"");
    return m;
}

SymMat<Rational> append_n(const SymMat<Rational>& B, const RetryPolicy& policy,
                          SynthesisStep* step) {
    std::string q = compute_qpr(B);
    return drive(B, q + "N", SynthesisStep::Op::AppendN, false, false, policy, step);
}

SymMat<Rational> append_a(const SymMat<Rational>& B, const RetryPolicy& policy,
                          SynthesisStep* step) {
    std::string q = compute_qpr(B);
    require_headlike(q, "append A");
    return drive(B, q + "A", SynthesisStep::Op::AppendA, false, true, policy, step);
}

SymMat<Rational> append_sn(const SymMat<Rational>& B, const RetryPolicy& policy,
                           SynthesisStep* step) {
    std::string q = compute_qpr(B);
    require_headlike(q, "append SN");
    q.back() = 'S';
    return drive(B, q + "N", SynthesisStep::Op::AppendSN, true, false, policy, step);
}

SymMat<Rational> append_sa(const SymMat<Rational>& B, const RetryPolicy& policy,
                           SynthesisStep* step) {
    std::string q = compute_qpr(B);
    require_headlike(q, "append SA");
    q.back() = 'S';
    return drive(B, q + "A", SynthesisStep::Op::AppendSA, true, true, policy, step);
}

std::string SynthesisStep::str() const {
    std::string s = op_name(op);
    if (op == Op::Base) {
        s += " " + base_kind_str(base) + "(" + std::to_string(base_order) + ")";
    } else {
        s += ": x=(";
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i)
                s += ", ";
            s += x[i].str();
        }
        s += ")";
        if (op == Op::AppendA || op == Op::AppendSA)
            s += ", t=" + t.str();
        s += ", retries=" + std::to_string(retries);
    }
    return s + " -> " + qpr_after;
}

std::string SynthesisTrace::str() const {
    std::string s = "target " + target + " seed " + std::to_string(seed) + "\n";
    for (std::size_t i = 0; i < steps.size(); ++i)
        s += "step " + std::to_string(i + 1) + ": " + steps[i].str() + "\n";
    return s;
}

SynthesisResult synthesize(std::string_view seq_text, const RetryPolicy& policy) {
    std::string seq = parse_sequence(seq_text);
    AttainabilityVerdict verdict = check_attainable(seq);
    if (!verdict.attainable)
        throw DomainError("cannot synthesize \"" + seq + "\": " + verdict.str());

    std::size_t head_len = std::min(seq.find('N'), seq.size());
    std::string head = seq.substr(0, head_len);
    int tail = static_cast<int>(seq.size() - head_len);

    // Plan the construction back to front: peel trailing S-runs of the head
    // down to a hand-checked base, then grow the all-N tail.
    struct PlanItem {
        SynthesisStep::Op op;
        BaseKind base = BaseKind::Zero;
        int base_order = 0;
    };
    std::vector<PlanItem> plan;
    if (head.empty()) {
        plan.push_back({SynthesisStep::Op::Base, BaseKind::Zero, static_cast<int>(seq.size())});
    } else {
        std::string h = head;
        if (tail > 0 && h.back() == 'S')
            h.back() = 'A'; // append_sn will turn this final A back into S
        std::vector<PlanItem> appends; // collected in reverse application order
        for (;;) {
            if (h == "A") {
                plan.push_back({SynthesisStep::Op::Base, BaseKind::A, 1});
                break;
            }
            if (h == "AA") {
                plan.push_back({SynthesisStep::Op::Base, BaseKind::AA, 2});
                break;
            }
            if (h == "SA") {
                plan.push_back({SynthesisStep::Op::Base, BaseKind::SA, 2});
                break;
            }
            if (h.find('A') == h.size() - 1) { // S..SA, at least two leading S
                plan.push_back({SynthesisStep::Op::Base, BaseKind::AllSThenA,
                                static_cast<int>(h.size())});
                break;
            }
            // Last A before the final position; everything between is S.
            std::size_t k = h.rfind('A', h.size() - 2);
            int srun = static_cast<int>(h.size() - 2 - k);
            for (int i = 0; i < srun; ++i)
                appends.push_back({SynthesisStep::Op::AppendSA});
            appends.push_back({SynthesisStep::Op::AppendA});
            h.resize(k + 1);
        }
        plan.insert(plan.end(), appends.rbegin(), appends.rend());
        if (tail > 0) {
            int plain_n = tail;
            if (head.back() == 'S') {
                plan.push_back({SynthesisStep::Op::AppendSN});
                --plain_n;
            }
            for (int i = 0; i < plain_n; ++i)
                plan.push_back({SynthesisStep::Op::AppendN});
        }
    }

    SynthesisResult res;
    res.trace.target = seq;
    res.trace.seed = policy.seed;
    SymMat<Rational> cur;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const PlanItem& item = plan[i];
        SynthesisStep step;
        RetryPolicy sub = policy;
        sub.seed = detail::mix_seed(policy.seed, i);
        try {
            switch (item.op) {
            case SynthesisStep::Op::Base:
                cur = base_witness(item.base, item.base_order);
                step.op = SynthesisStep::Op::Base;
                step.base = item.base;
                step.base_order = item.base_order;
                step.qpr_after = compute_qpr(cur);
                break;
            case SynthesisStep::Op::AppendN:
                cur = append_n(cur, sub, &step);
                break;
            case SynthesisStep::Op::AppendA:
                cur = append_a(cur, sub, &step);
                break;
            case SynthesisStep::Op::AppendSN:
                cur = append_sn(cur, sub, &step);
                break;
            case SynthesisStep::Op::AppendSA:
                cur = append_sa(cur, sub, &step);
                break;
            }
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + "\ntrace so far:\n" + res.trace.str());
        }
        res.trace.steps.push_back(std::move(step));
    }

    if (res.trace.steps.empty() || res.trace.steps.back().qpr_after != seq)
        throw Error("synthesis plan for \"" + seq + "\" ended at \"" +
                    (res.trace.steps.empty() ? "" : res.trace.steps.back().qpr_after) + "\"");
    res.matrix = std::move(cur);
    return res;
}

SynthesisResult synthesize(std::string_view seq, std::uint64_t seed) {
    RetryPolicy policy;
    policy.seed = seed;
    return synthesize(seq, policy);
}

SymMat<Rational> replay(const SynthesisTrace& trace) {
    SymMat<Rational> cur;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const SynthesisStep& step = trace.steps[i];
        if (step.op == SynthesisStep::Op::Base)
            cur = base_witness(step.base, step.base_order);
        else
            cur = bordered(cur, step.x, step.t);
        std::string got = compute_qpr(cur);
        if (got != step.qpr_after)
            throw DomainError("trace replay diverged at step " + std::to_string(i + 1) +
                              ": computed qpr \"" + got + "\", trace says \"" + step.qpr_after +
                              "\"");
    }
    return cur;
}

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t step) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (step + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

} // namespace qpr
