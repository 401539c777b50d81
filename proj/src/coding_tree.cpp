#include "henson/coding_tree.hpp"

#include <algorithm>

#include "henson/errors.hpp"

namespace henson {

// ---------------------------------------------------------------- Node

Node Node::extend(bool b) const {
    Node out = *this;
    out.len_ += 1;
    if (out.bits_.size() * 64 < out.len_) out.bits_.push_back(0);
    out.set(len_, b);
    return out;
}

Node Node::extend_zeros(std::size_t to_len) const {
    if (to_len < len_) throw PreconditionViolation("extend_zeros shrinks the node");
    Node out = *this;
    out.len_ = to_len;
    out.bits_.resize((to_len + 63) / 64, 0);
    return out;
}

Node Node::truncate(std::size_t len) const {
    if (len > len_) throw PreconditionViolation("truncate grows the node");
    Node out(len);
    std::size_t words = (len + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) out.bits_[w] = bits_[w];
    if (len & 63) out.bits_[words - 1] &= (1ull << (len & 63)) - 1;
    return out;
}

std::vector<std::size_t> Node::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
            word &= word - 1;
        }
    }
    return out;
}

bool Node::extends(const Node& s) const {
    if (s.len_ > len_) return false;
    return truncate(s.len_) == s;
}

bool Node::lex_less(const Node& o) const {
    std::size_t common = std::min(len_, o.len_);
    for (std::size_t w = 0; w * 64 < common; ++w) {
        std::uint64_t a = bits_[w], b = o.bits_[w];
        if (w * 64 + 64 > common) {
            std::uint64_t mask = (common & 63) ? (1ull << (common & 63)) - 1 : ~0ull;
            a &= mask;
            b &= mask;
        }
        if (a != b) {
            // lowest differing bit decides; 0 precedes 1
            std::size_t i = static_cast<std::size_t>(__builtin_ctzll(a ^ b));
            return !((a >> i) & 1u);
        }
    }
    return len_ < o.len_;
}

std::string Node::str() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

// ---------------------------------------------------------- CodingTree

Node CodingTree::vertex_node(std::size_t j) const {
    if (j >= g_->size()) throw PreconditionViolation("vertex node out of range");
    Node out(j);
    for (std::size_t i = 0; i < j; ++i)
        if (g_->edge(j, i)) out.set(i, true);
    return out;
}

Node CodingTree::vertex_prefix(std::size_t j, std::size_t len) const {
    if (j >= g_->size() || len > j) throw PreconditionViolation("vertex prefix out of range");
    Node out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (g_->edge(j, i)) out.set(i, true);
    return out;
}

bool CodingTree::in_tree(const Node& s) const {
    if (s.length() > depth())
        throw BudgetExhausted("tree membership needs a deeper prefix");
    return !contains_clique(*g_, s.ones(), static_cast<std::size_t>(n()));
}

bool CodingTree::splitting(const Node& s) const {
    if (s.length() >= depth())
        throw BudgetExhausted("splitting test needs a deeper prefix");
    std::vector<std::size_t> vs = s.ones();
    vs.push_back(s.length());
    return !contains_clique(*g_, vs, static_cast<std::size_t>(n()));
}

bool CodingTree::is_vertex(const Node& s) const {
    if (s.length() >= depth()) return false;
    return s == vertex_node(s.length());
}

bool CodingTree::provisional(const Node& s) const {
    for (std::size_t j = s.length() + 1; j < depth(); ++j)
        if (vertex_prefix(j, s.length()) == s) return false;
    return true;
}

std::vector<Node> CodingTree::level(std::size_t len) const {
    std::vector<Node> out;
    for (std::size_t j = len; j < depth(); ++j) {
        Node s = j == len ? vertex_node(j) : vertex_prefix(j, len);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void CodingTree::walk(
    std::size_t max_len,
    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& fn) const {
    if (max_len > depth()) throw BudgetExhausted("tree walk needs a deeper prefix");
    std::vector<std::size_t> ones;
    auto rec = [&](auto&& self, std::size_t len) -> void {
        fn(ones, len);
        if (len == max_len) return;
        self(self, len + 1);  // 0-extension first: lexicographic order
        std::vector<std::size_t> adj;
        for (std::size_t o : ones)
            if (g_->edge(o, len)) adj.push_back(o);
        if (!contains_clique(*g_, adj, static_cast<std::size_t>(n()) - 1)) {
            ones.push_back(len);
            self(self, len + 1);
            ones.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Node> CodingTree::tree_level_nodes(std::size_t len) const {
    std::vector<Node> out;
    walk(len, [&](const std::vector<std::size_t>& ones, std::size_t l) {
        if (l != len) return;
        Node s(len);
        for (std::size_t o : ones) s.set(o, true);
        out.push_back(std::move(s));
    });
    return out;
}

std::size_t CodingTree::tree_level_count(std::size_t len) const {
    std::size_t count = 0;
    walk(len, [&](const std::vector<std::size_t>&, std::size_t l) {
        if (l == len) ++count;
    });
    return count;
}

// ----------------------------------------------------------- type_node

Node type_node(const CodingTree& t, std::size_t k, const std::vector<std::size_t>& V0,
               const std::vector<std::size_t>& V1) {
    if (k > t.depth()) throw BudgetExhausted("type node needs a deeper prefix");
    std::vector<int> seen(k, 0);
    for (std::size_t v : V0) {
        if (v >= k || seen[v]++) throw PreconditionViolation("type node: V0 not a partition part");
    }
    for (std::size_t v : V1) {
        if (v >= k || seen[v]++) throw PreconditionViolation("type node: V1 not a partition part");
    }
    for (std::size_t i = 0; i < k; ++i)
        if (!seen[i]) throw PreconditionViolation("type node: vertex left unassigned");
    if (contains_clique(t.graph(), V1, static_cast<std::size_t>(t.n())))
        throw PreconditionViolation("type node: connect set holds a maximal clique");
    Node s(k);
    for (std::size_t v : V1) s.set(v, true);
    return s;
}

// ---------------------------------------------------------- Classifier

std::vector<Node> truncate_set(const std::vector<Node>& X, std::size_t len) {
    std::vector<Node> out;
    out.reserve(X.size());
    for (const Node& x : X) out.push_back(x.truncate(len));
    std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::size_t level_of(const std::vector<Node>& X) {
    if (X.empty()) throw PreconditionViolation("empty level set");
    std::size_t len = X.front().length();
    for (const Node& x : X)
        if (x.length() != len) throw PreconditionViolation("level set lengths differ");
    return len;
}

// Positions < len where every node of X has a 1.
std::vector<std::size_t> common_ones(const std::vector<Node>& X, std::size_t len) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < len; ++i) {
        bool all = true;
        for (const Node& x : X)
            if (!x.bit(i)) { all = false; break; }
        if (all) out.push_back(i);
    }
    return out;
}

// Lexicographically least ascending m-subset of `cands` (all < top,
// pairwise adjacent, each adjacent to top); appended below top.
bool least_clique(const Graph& g, const std::vector<std::size_t>& cands, std::size_t top,
                  std::size_t m, std::vector<std::size_t>& acc) {
    if (acc.size() == m) return true;
    std::size_t start = acc.empty() ? 0 : 0;  // cands scanned in order; dedupe via position
    (void)start;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        std::size_t c = cands[idx];
        if (!acc.empty() && c <= acc.back()) continue;
        if (c >= top) break;
        if (!g.edge(top, c)) continue;
        bool ok = true;
        for (std::size_t a : acc)
            if (!g.edge(a, c)) { ok = false; break; }
        if (!ok) continue;
        acc.push_back(c);
        if (least_clique(g, cands, top, m, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> Classifier::k_witness(const std::vector<Node>& X,
                                                              std::size_t m) {
    if (m == 0) return std::vector<std::size_t>{};
    std::size_t len = level_of(X);
    if (len == 0) return std::nullopt;
    std::size_t top = len - 1;
    for (const Node& x : X)
        if (!x.bit(top)) return std::nullopt;
    std::vector<std::size_t> cands = common_ones(X, top);
    std::vector<std::size_t> acc;
    if (!least_clique(t_->graph(), cands, top, m - 1, acc)) return std::nullopt;
    acc.push_back(top);
    return acc;
}

bool Classifier::in_AC(const std::vector<Node>& X, std::size_t m) {
    if (!in_K(X, m)) return false;
    std::size_t len = level_of(X);
    for (std::size_t q : common_ones(X, len - 1))
        if (in_K(truncate_set(X, q + 1), m)) return false;
    return true;
}

bool Classifier::in_Con(const std::vector<Node>& X, std::size_t m) {
    std::vector<Node> S = truncate_set(X, level_of(X));  // canonical: sorted, deduped
    std::string key = std::to_string(m) + "#";
    for (const Node& x : S) key += x.str() + "|";
    auto it = con_memo_.find(key);
    if (it != con_memo_.end()) return it->second;
    con_memo_[key] = false;  // guard against re-entry
    bool result = false;
    std::size_t p = S.size();
    if (p == 1) {
        result = in_AC(S, m);
    } else if (in_AC(S, m)) {
        std::size_t len = level_of(S);
        result = true;
        // every proper subset has a unique truncation level that is a
        // consecutive age-change for the same m
        for (std::size_t mask = 1; result && mask + 1 < (std::size_t(1) << p); ++mask) {
            std::vector<Node> Y;
            for (std::size_t i = 0; i < p; ++i)
                if ((mask >> i) & 1) Y.push_back(S[i]);
            std::size_t hits = 0;
            for (std::size_t q : common_ones(Y, len))
                if (q + 1 < len && in_Con(truncate_set(Y, q + 1), m)) ++hits;
            if (hits != 1) result = false;
        }
        // all smaller clique classes already changed below, for every subset
        for (std::size_t mp = 1; result && mp < m; ++mp) {
            for (std::size_t mask = 1; result && mask < (std::size_t(1) << p); ++mask) {
                std::vector<Node> Y;
                for (std::size_t i = 0; i < p; ++i)
                    if ((mask >> i) & 1) Y.push_back(S[i]);
                bool found = false;
                for (std::size_t q : common_ones(Y, len))
                    if (q + 1 < len && in_Con(truncate_set(Y, q + 1), mp)) { found = true; break; }
                result = found;
            }
        }
    }
    con_memo_[key] = result;
    return result;
}

bool Classifier::has_con(const std::vector<Node>& X, std::size_t m) {
    std::size_t len = level_of(X);
    for (std::size_t q : common_ones(X, len))
        if (in_Con(truncate_set(X, q + 1), m)) return true;
    return in_Con(X, m);
}

AgeChangeClass Classifier::classify(const std::vector<Node>& X) {
    std::size_t n = static_cast<std::size_t>(t_->n());
    std::vector<Node> S = truncate_set(X, level_of(X));
    std::size_t p = S.size();
    for (std::size_t m = n - 1; m >= 1; --m) {
        if (!in_AC(S, m)) continue;
        AgeChangeClass out;
        out.m = m;
        out.p = p;
        if (p > n + 1 - m) {
            out.reason = "set size exceeds the n+1-m bound";
            return out;
        }
        out.witness = *k_witness(S, m);
        out.kind = in_Con(S, m) ? AgeChangeClass::Kind::Con : AgeChangeClass::Kind::AC;
        return out;
    }
    AgeChangeClass out;
    out.reason = "no age-change at this level";
    return out;
}

bool Classifier::reduced(const Node& x, std::size_t j) {
    if (j >= t_->depth()) throw PreconditionViolation("reduced test: vertex out of range");
    if (x.length() != j + 1) throw PreconditionViolation("reduced test: length must be j+1");
    Node vj = t_->vertex_node(j);
    if (x.truncate(j) == vj) throw PreconditionViolation("reduced test: node extends the vertex");
    const Graph& g = t_->graph();
    std::vector<std::size_t> ones = x.ones();
    std::size_t m = 0;
    for (std::size_t cand = static_cast<std::size_t>(t_->n()) - 1; cand >= 1; --cand)
        if (contains_clique(g, ones, cand)) { m = cand; break; }
    if (m == 0) return false;
    std::size_t target = x.bit(j) ? m - 1 : m;
    if (target == 0) return true;
    std::vector<Node> pair{vj.extend_zeros(j), x.truncate(j)};
    for (std::size_t q : common_ones(pair, j))
        if (q + 1 < j && k_witness(truncate_set(pair, q + 1), target)) return true;
    return false;
}

}  // namespace henson
