#include "k3/combinat.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>

#include "k3/arith.hpp"
#include "k3/errors.hpp"

namespace k3 {

namespace {

void compositions_into(long total, long parts, std::vector<long>& cur,
                       std::vector<std::vector<long>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long first = 1; first <= total - (parts - 1); ++first) {
        cur.push_back(first);
        compositions_into(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AdmissibleSequence> enumerate_admissible(long a) {
    if (a < 1) throw OutOfRange("enumerate_admissible: a must be >= 1");
    std::vector<AdmissibleSequence> result;
    for (long len = 1; len <= a; ++len) {
        std::vector<std::vector<long>> comps;
        std::vector<long> cur;
        compositions_into(a, len, cur, comps);
        // support window [-m, n] with m + n + 1 = len must contain index 0
        for (long m = 0; m < len; ++m) {
            long n = len - 1 - m;
            (void)n;
            for (const auto& comp : comps) {
                AdmissibleSequence s;
                s.a = a;
                s.k.assign(static_cast<size_t>(2 * a + 1), 0);
                for (long i = 0; i < len; ++i)
                    s.k[static_cast<size_t>(-m + i + a)] = comp[static_cast<size_t>(i)];
                result.push_back(std::move(s));
            }
        }
    }
    return result;
}

bool is_pyramidal(const AdmissibleSequence& s) {
    for (long t = 0; t < s.a; ++t) {
        long up = s.at(t), next_up = s.at(t + 1);
        if (next_up > up || next_up < up - 1) return false;
        long dn = s.at(-t), next_dn = s.at(-t - 1);
        if (next_dn > dn || next_dn < dn - 1) return false;
    }
    return true;
}

std::vector<std::vector<long>> partitions_of(long a) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // descending parts
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, a, a);
    return out;
}

std::map<std::vector<long>, AdmissibleSequence> young_bijection(long a) {
    if (a < 1) throw OutOfRange("young_bijection: a must be >= 1");
    std::map<std::vector<long>, AdmissibleSequence> out;
    for (const auto& lambda : partitions_of(a)) {
        AdmissibleSequence s;
        s.a = a;
        s.k.assign(static_cast<size_t>(2 * a + 1), 0);
        for (long y = 0; y < static_cast<long>(lambda.size()); ++y)
            for (long x = 0; x < lambda[static_cast<size_t>(y)]; ++x)
                ++s.k[static_cast<size_t>(y - x + a)];
        out.emplace(lambda, std::move(s));
    }
    return out;
}

BlowupClass class_of_sequence(const AdmissibleSequence& s) {
    BlowupClass c;
    long a = s.a;
    c.d = s.at(0);
    c.alphas.push_back(s.at(0) - 1);
    c.alphas.push_back(s.at(-a));
    for (long l = -a; l < 0; ++l) c.alphas.push_back(s.at(l + 1) - s.at(l));
    for (long l = 0; l < a; ++l) c.alphas.push_back(s.at(l) - s.at(l + 1));
    c.alphas.push_back(s.at(a));
    return c;
}

BlowupClass cremona_move(const BlowupClass& c, size_t i, size_t j, size_t k) {
    if (i >= c.alphas.size() || j >= c.alphas.size() || k >= c.alphas.size() ||
        i == j || j == k || i == k)
        throw OutOfRange("cremona_move: indices must be distinct and in range");
    BlowupClass r = c;
    long ai = c.alphas[i], aj = c.alphas[j], ak = c.alphas[k];
    r.d = 2 * c.d - ai - aj - ak;
    r.alphas[i] = c.d - aj - ak;
    r.alphas[j] = c.d - ai - ak;
    r.alphas[k] = c.d - ai - aj;
    return r;
}

namespace {

using Node = std::pair<long, std::vector<long>>;  // degree, canonical multiplicities

// Rules (i)-(iv) and the base chain.  Returns a value when the class is
// decided outright, otherwise the canonical node for the search.  Rule (iv)
// is applied before stripping: the exceptional-class test needs the zeros.
std::optional<BlowupValue> canonicalize(long d, std::vector<long> al, Node& node) {
    bool negative = false;
    for (long v : al)
        if (v < 0) negative = true;
    if (negative) {
        long minus_ones = 0;
        bool rest_zero = true;
        for (long v : al) {
            if (v == -1)
                ++minus_ones;
            else if (v != 0)
                rest_zero = false;
        }
        if (d == 0 && minus_ones == 1 && rest_zero) return BlowupValue::One;  // exceptional class
        return BlowupValue::Zero;
    }
    al.erase(std::remove_if(al.begin(), al.end(), [](long v) { return v == 0 || v == 1; }), al.end());
    std::sort(al.begin(), al.end(), std::greater<long>());
    if (al.empty() && (d == 1 || d == 2)) return BlowupValue::One;  // N(1); N(2;1) via the base chain
    if (d >= 3 && al.size() == 1 && al[0] == d - 1) return BlowupValue::One;
    node = {d, std::move(al)};
    return std::nullopt;
}

struct SearchState {
    std::map<Node, BlowupValue>& memo;
    std::set<Node> in_progress;
};

BlowupValue search(const Node& node, long depth, SearchState& st);

BlowupValue evaluate(long d, std::vector<long> al, long depth, SearchState& st) {
    Node node;
    if (auto decided = canonicalize(d, std::move(al), node)) return *decided;
    return search(node, depth, st);
}

BlowupValue search(const Node& node, long depth, SearchState& st) {
    if (auto it = st.memo.find(node); it != st.memo.end()) return it->second;
    if (st.in_progress.count(node)) return BlowupValue::Undecided;  // cycle on this path
    if (depth <= 0) return BlowupValue::Undecided;
    st.in_progress.insert(node);

    const auto& [d, al] = node;
    long n = static_cast<long>(al.size());
    // Candidate triples: j entries taken from the class, 3-j synthetic 0/1
    // multiplicities appended via rule (ii); deduplicated by value multiset
    // (entries are sorted, so index choices of equal values coincide).
    struct Move {
        long sum;
        std::vector<size_t> idx;  // chosen real positions
        std::vector<long> synth;  // appended synthetic values
    };
    std::vector<Move> moves;
    std::set<std::pair<std::vector<long>, long>> seen;
    static const std::vector<std::vector<long>> synth_by_count[4] = {
        {{}},
        {{1}, {0}},
        {{1, 1}, {1, 0}, {0, 0}},
        {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}},
    };
    for (long j = std::min<long>(3, n); j >= 0; --j) {
        std::vector<size_t> idx(static_cast<size_t>(j));
        auto emit = [&](auto&& self, long pos, long start) -> void {
            if (pos == j) {
                for (const auto& synth : synth_by_count[3 - j]) {
                    std::vector<long> values;
                    for (size_t q : idx) values.push_back(al[q]);
                    values.insert(values.end(), synth.begin(), synth.end());
                    std::sort(values.begin(), values.end());
                    if (!seen.insert({values, j}).second) continue;
                    Move m;
                    m.sum = 0;
                    for (long v : values) m.sum += v;
                    m.idx = idx;
                    m.synth = synth;
                    moves.push_back(std::move(m));
                }
                return;
            }
            for (long c = start; c < n; ++c) {
                idx[static_cast<size_t>(pos)] = static_cast<size_t>(c);
                self(self, pos + 1, c + 1);
            }
        };
        emit(emit, 0, static_cast<long>(j == 0 ? 0 : 0));
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) { return x.sum > y.sum; });

    BlowupValue result = BlowupValue::Undecided;
    for (const auto& m : moves) {
        long nd = 2 * d - m.sum;
        std::vector<long> nal;
        nal.reserve(al.size() + m.synth.size());
        std::vector<char> taken(al.size(), 0);
        for (size_t q : m.idx) taken[q] = 1;
        for (size_t q = 0; q < al.size(); ++q)
            if (!taken[q]) nal.push_back(al[q]);
        for (size_t q : m.idx) nal.push_back(d - (m.sum - al[q]));
        for (long sv : m.synth) nal.push_back(d - (m.sum - sv));
        BlowupValue v = evaluate(nd, std::move(nal), depth - 1, st);
        if (v != BlowupValue::Undecided) {
            result = v;
            break;
        }
    }
    st.in_progress.erase(node);
    if (result != BlowupValue::Undecided) st.memo[node] = result;
    return result;
}

}  // namespace

BlowupValue blowup_eval(const BlowupClass& c, long max_depth) {
    static std::map<Node, BlowupValue> memo;  // decided values only; shared across calls
    static std::mutex lock;
    std::scoped_lock guard(lock);
    SearchState st{memo, {}};
    return evaluate(c.d, c.alphas, max_depth, st);
}

Integer gbl_contribution(const std::array<long, 24>& a_vec, const std::vector<long>& b_vec) {
    Integer prod = 1;
    for (long ai : a_vec) prod *= partition_count(ai);
    for (long bj : b_vec) {
        if (bj < 1) throw OutOfRange("gbl_contribution: fiber degrees must be >= 1");
        prod *= Integer(bj) * sigma(1, bj);
    }
    return prod;
}

}  // namespace k3
