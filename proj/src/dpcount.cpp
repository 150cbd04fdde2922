#include "seqgraph/dpcount.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "seqgraph/builder.hpp"

namespace seqgraph {

std::optional<long long> derive_length(const SeqGraph &g, int w) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument,
                    "derive_length needs a weighted graph");
    if (w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    long long total = g.total_weight();
    long long full = static_cast<long long>(w) * (w - 1) / 2;
    if (total >= full) {
        long long num = 2 * total + static_cast<long long>(w) * (w - 1);
        long long den = 2 * (w - 1);
        if (num % den != 0)
            return std::nullopt;
        return num / den;
    }
    long long guess = static_cast<long long>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(total))) / 2.0);
    for (long long p = std::max(1LL, guess - 1); p <= guess + 1; p++)
        if (p * (p - 1) / 2 == total)
            return p;
    return std::nullopt;
}

namespace {

// Edge indexing plus the feasibility bounds used to prune dead states.
struct DpTables {
    const SeqGraph &g;
    int w, n, k;  // k = w-1, the window reach
    std::vector<std::pair<VertexId, VertexId>> ends;
    std::vector<long long> cap;
    std::vector<std::vector<int>> edge_at;  // [u][v] -> edge index or -1
    std::vector<std::vector<int>> out_edges, in_edges;       // directed
    std::vector<std::vector<std::pair<int, int>>> incident;  // undirected

    DpTables(const SeqGraph &graph, int window)
        : g(graph), w(window), n(graph.n()), k(window - 1) {
        edge_at.assign(n, std::vector<int>(n, -1));
        for (const auto &[key, pi] : g.edges) {
            int idx = static_cast<int>(ends.size());
            ends.push_back(key);
            cap.push_back(pi);
            edge_at[key.first][key.second] = idx;
            if (!g.directed)
                edge_at[key.second][key.first] = idx;
        }
        if (g.directed) {
            out_edges.assign(n, {});
            in_edges.assign(n, {});
            for (int e = 0; e < m(); e++) {
                out_edges[ends[e].first].push_back(e);
                in_edges[ends[e].second].push_back(e);
            }
        } else {
            incident.assign(n, {});
            for (int e = 0; e < m(); e++) {
                auto [u, v] = ends[e];
                if (u == v)
                    incident[u].push_back({e, 2});
                else {
                    incident[u].push_back({e, 1});
                    incident[v].push_back({e, 1});
                }
            }
        }
    }

    int m() const { return static_cast<int>(ends.size()); }

    // Feasibility bounds for a state with `rem` positions left after the
    // suffix. Sound cuts only:
    //  - a vertex with residual out-weight beyond what suffix occurrences
    //    can still pair forward must occur ceil(excess/(w-1)) more times,
    //    likewise ceil(in/(w-1)); undirected incident weight (loops twice)
    //    allows 2(w-1) pair slots per occurrence; needs add up across
    //    vertices and must fit in rem;
    //  - every future occurrence sits next to its predecessor, so it
    //    consumes an in-unit (directed), and all but the final position
    //    consume an out-unit: occurrence counts are capped by the
    //    residuals themselves;
    //  - consecutive future symbols always step along positive-residual
    //    edges, so every vertex still owing occurrences must be reachable
    //    from the suffix tail in the residual graph.
    bool need_fits(const std::vector<long long> &res,
                   const std::vector<VertexId> &suffix, long long rem) const {
        long long total = 0;
        int len = static_cast<int>(suffix.size());
        unsigned long long required = 0;  // need >= 1 vertices (n <= 64)
        std::vector<VertexId> required_list;
        bool small = n <= 64;
        for (int v = 0; v < n; v++) {
            long long fw = 0;
            for (int i = 0; i < len; i++)
                if (suffix[i] == v)
                    fw += k - (len - 1 - i);
            long long need;
            if (g.directed) {
                long long out = 0, in = 0;
                for (int e : out_edges[v])
                    out += res[e];
                for (int e : in_edges[v])
                    in += res[e];
                long long no = out > fw ? (out - fw + k - 1) / k : 0;
                long long ni = (in + k - 1) / k;
                need = std::max(no, ni);
                if (need > in || need > out + 1)
                    return false;
            } else {
                long long inc = 0;
                for (auto [e, mult] : incident[v])
                    inc += mult * res[e];
                need = inc > fw ? (inc - fw + 2 * k - 1) / (2 * k) : 0;
            }
            total += need;
            if (total > rem)
                return false;
            if (need > 0) {
                if (small)
                    required |= 1ull << v;
                else
                    required_list.push_back(v);
            }
        }
        if (total == 0)
            return true;
        return reachable_covers(res, suffix.back(), required, required_list);
    }

    bool reachable_covers(const std::vector<long long> &res, VertexId start,
                          unsigned long long required,
                          const std::vector<VertexId> &required_list) const {
        if (n <= 64) {
            unsigned long long adj[64];
            for (int v = 0; v < n; v++)
                adj[v] = 0;
            for (int e = 0; e < m(); e++) {
                if (res[e] == 0)
                    continue;
                auto [u, v] = ends[e];
                adj[u] |= 1ull << v;
                if (!g.directed)
                    adj[v] |= 1ull << u;
            }
            unsigned long long seen = 1ull << start;
            unsigned long long frontier = adj[start] & ~seen;
            while (frontier) {
                seen |= frontier;
                unsigned long long next = 0, f = frontier;
                while (f) {
                    int v = __builtin_ctzll(f);
                    f &= f - 1;
                    next |= adj[v];
                }
                frontier = next & ~seen;
            }
            return (required & ~seen) == 0;
        }
        std::vector<std::vector<VertexId>> adj(n);
        for (int e = 0; e < m(); e++) {
            if (res[e] == 0)
                continue;
            auto [u, v] = ends[e];
            adj[u].push_back(v);
            if (!g.directed)
                adj[v].push_back(u);
        }
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        for (VertexId v : required_list)
            if (!seen[v])
                return false;
        return true;
    }
};

// Applies every legal extension of (res, suffix), calling emit(res', suffix')
// for each survivor. rem counts the positions left after the new symbol.
template <class Emit>
void expand(const DpTables &t, const std::vector<long long> &res,
            const std::vector<VertexId> &suffix, long long rem,
            std::vector<long long> &res2, std::vector<VertexId> &suffix2,
            Emit &&emit) {
    for (VertexId v = 0; v < t.n; v++) {
        res2 = res;
        bool ok = true;
        for (VertexId u : suffix) {
            int e = t.edge_at[u][v];
            if (e < 0 || res2[e] == 0) {
                ok = false;
                break;
            }
            res2[e]--;
        }
        if (!ok)
            continue;
        suffix2 = suffix;
        suffix2.push_back(v);
        if (static_cast<int>(suffix2.size()) > t.k)
            suffix2.erase(suffix2.begin());
        if (rem > 0 && !t.need_fits(res2, suffix2, rem))
            continue;
        emit(res2, suffix2);
    }
}

// Shared validation; returns the target length or nullopt for a trivial 0.
std::optional<long long> dp_length(const SeqGraph &g, int w,
                                   const std::optional<long long> &p) {
    if (!g.weighted)
        throw Error(ErrorCode::invalid_argument, "dp counting needs weights");
    if (w < 2)
        throw Error(ErrorCode::invalid_argument, "window must be >= 2");
    auto derived = derive_length(g, w);
    if (!derived || (p && *p != *derived))
        return std::nullopt;
    if (g.n() >= 2)
        for (VertexId v = 0; v < g.n(); v++)
            if (g.edge_free(v))
                return std::nullopt;  // v could never appear
    return derived;
}

// ---- generic level representation: byte-string keys, gmp counts ----

struct BytePack {
    int res_w = 1, suf_w = 1, m = 0;

    BytePack(const DpTables &t) : m(t.m()) {
        long long max_cap = 1;
        for (long long c : t.cap)
            max_cap = std::max(max_cap, c);
        res_w = width(max_cap);
        suf_w = width(t.n > 0 ? t.n - 1 : 0);
    }

    static int width(long long maxval) {
        if (maxval <= 0xFF)
            return 1;
        if (maxval <= 0xFFFF)
            return 2;
        return 4;
    }

    std::string encode(const std::vector<long long> &res,
                       const std::vector<VertexId> &suffix) const {
        std::string s;
        s.reserve(res.size() * res_w + suffix.size() * suf_w);
        for (long long r : res)
            put(s, r, res_w);
        for (VertexId v : suffix)
            put(s, v, suf_w);
        return s;
    }

    void decode(const std::string &s, int suffix_len,
                std::vector<long long> &res,
                std::vector<VertexId> &suffix) const {
        const char *p = s.data();
        res.resize(m);
        for (int e = 0; e < m; e++, p += res_w)
            res[e] = get(p, res_w);
        suffix.resize(suffix_len);
        for (int i = 0; i < suffix_len; i++, p += suf_w)
            suffix[i] = static_cast<VertexId>(get(p, suf_w));
    }

    static void put(std::string &s, long long v, int width) {
        for (int i = 0; i < width; i++)
            s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }

    static long long get(const char *s, int width) {
        long long v = 0;
        for (int i = 0; i < width; i++)
            v |= static_cast<long long>(static_cast<unsigned char>(s[i]))
                 << (8 * i);
        return v;
    }
};

BigCount run_generic(const DpTables &t, long long plen, std::size_t state_cap,
                     DpStats *stats) {
    BytePack bp(t);
    std::unordered_map<std::string, mpz_class> cur;
    cur.emplace(bp.encode(t.cap, {}), 1);
    std::size_t states = 1, peak = 1;

    std::vector<long long> res, res2;
    std::vector<VertexId> suffix, suffix2;
    for (long long d = 0; d < plen && !cur.empty(); d++) {
        int suffix_len = static_cast<int>(std::min<long long>(d, t.k));
        std::unordered_map<std::string, mpz_class> next;
        next.reserve(cur.size() * 2);
        long long rem = plen - d - 1;
        for (const auto &[key, cnt] : cur) {
            bp.decode(key, suffix_len, res, suffix);
            expand(t, res, suffix, rem, res2, suffix2,
                   [&](const std::vector<long long> &r,
                       const std::vector<VertexId> &s) {
                       next[bp.encode(r, s)] += cnt;
                   });
        }
        states += next.size();
        peak = std::max(peak, next.size());
        if (stats) {
            stats->states = states;
            stats->peak_level = peak;
        }
        if (states > state_cap)
            throw Error(ErrorCode::budget_exceeded, "dp state cap exceeded");
        cur = std::move(next);
    }

    mpz_class total = 0;
    for (const auto &[key, cnt] : cur)
        total += cnt;
    return BigCount(total);
}

// ---- packed representation: bit-packed keys, open addressing, u64 counts.
// Falls back to run_generic when keys exceed four words or a count
// overflows 64 bits (then the whole computation reruns exactly).

constexpr int kMaxWords = 4;

struct BitPack {
    std::vector<int> off, wid;  // per edge
    int suf_off = 0, suf_wid = 0;
    int words = 0;
    bool fits = false;

    static int width_of(long long maxval) {
        int b = 0;
        while ((1LL << b) <= maxval && b < 62)
            b++;
        return b;
    }

    explicit BitPack(const DpTables &t) {
        int at = 0;
        for (long long c : t.cap) {
            int b = width_of(c);
            off.push_back(at);
            wid.push_back(b);
            at += b;
        }
        suf_wid = width_of(t.n > 0 ? t.n - 1 : 0);
        suf_off = at;
        at += suf_wid * t.k;
        words = std::max(1, (at + 63) / 64);
        fits = at <= 64 * kMaxWords;
    }
};

template <int W>
using Key = std::array<std::uint64_t, W>;

template <int W>
void set_bits(Key<W> &key, int off, int wid, std::uint64_t val) {
    if (wid == 0)
        return;
    int w0 = off >> 6, b = off & 63;
    key[w0] |= val << b;
    if constexpr (W > 1) {
        if (b + wid > 64)
            key[w0 + 1] |= val >> (64 - b);
    }
}

template <int W>
std::uint64_t get_bits(const Key<W> &key, int off, int wid) {
    if (wid == 0)
        return 0;
    int w0 = off >> 6, b = off & 63;
    std::uint64_t v = key[w0] >> b;
    if constexpr (W > 1) {
        if (b + wid > 64)
            v |= key[w0 + 1] << (64 - b);
    }
    return v & ((1ull << wid) - 1);
}

template <int W>
struct FlatLevel {
    // slot = key words followed by the count; count 0 marks an empty slot
    std::vector<std::array<std::uint64_t, W + 1>> slots;
    std::size_t used = 0, mask = 0;

    void init(std::size_t hint) {
        std::size_t size = 16;
        while (size * 3 < hint * 5)  // keep load below 60%
            size *= 2;
        slots.assign(size, {});
        mask = size - 1;
        used = 0;
    }

    static std::uint64_t hash(const Key<W> &key) {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (int i = 0; i < W; i++) {
            h ^= key[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
            h ^= h >> 27;
        }
        return h;
    }

    // Adds c to the key's count; false on 64-bit overflow.
    bool add(const Key<W> &key, std::uint64_t c) {
        std::size_t at = hash(key) & mask;
        for (;;) {
            auto &slot = slots[at];
            if (slot[W] == 0) {
                for (int i = 0; i < W; i++)
                    slot[i] = key[i];
                slot[W] = c;
                if (++used * 5 > slots.size() * 3)
                    grow();
                return true;
            }
            bool same = true;
            for (int i = 0; i < W && same; i++)
                same = slot[i] == key[i];
            if (same)
                return !__builtin_add_overflow(slot[W], c, &slot[W]);
            at = (at + 1) & mask;
        }
    }

    void grow() {
        std::vector<std::array<std::uint64_t, W + 1>> old;
        old.swap(slots);
        slots.assign(old.size() * 2, {});
        mask = slots.size() - 1;
        for (const auto &slot : old) {
            if (slot[W] == 0)
                continue;
            Key<W> key;
            for (int i = 0; i < W; i++)
                key[i] = slot[i];
            std::size_t at = hash(key) & mask;
            while (slots[at][W] != 0)
                at = (at + 1) & mask;
            slots[at] = slot;
        }
    }
};

template <int W>
bool run_flat(const DpTables &t, const BitPack &bp, long long plen,
              std::size_t state_cap, DpStats *stats, BigCount &result) {
    auto pack = [&](const std::vector<long long> &res,
                    const std::vector<VertexId> &suffix) {
        Key<W> key{};
        for (int e = 0; e < t.m(); e++)
            set_bits<W>(key, bp.off[e], bp.wid[e],
                        static_cast<std::uint64_t>(res[e]));
        for (std::size_t i = 0; i < suffix.size(); i++)
            set_bits<W>(key, bp.suf_off + static_cast<int>(i) * bp.suf_wid,
                        bp.suf_wid, static_cast<std::uint64_t>(suffix[i]));
        return key;
    };
    auto unpack = [&](const Key<W> &key, int suffix_len,
                      std::vector<long long> &res,
                      std::vector<VertexId> &suffix) {
        res.resize(t.m());
        for (int e = 0; e < t.m(); e++)
            res[e] = static_cast<long long>(get_bits<W>(key, bp.off[e], bp.wid[e]));
        suffix.resize(suffix_len);
        for (int i = 0; i < suffix_len; i++)
            suffix[i] = static_cast<VertexId>(
                get_bits<W>(key, bp.suf_off + i * bp.suf_wid, bp.suf_wid));
    };

    FlatLevel<W> cur;
    cur.init(16);
    if (!cur.add(pack(t.cap, {}), 1))
        return false;
    std::size_t states = 1, peak = 1;

    std::vector<long long> res, res2;
    std::vector<VertexId> suffix, suffix2;
    for (long long d = 0; d < plen && cur.used > 0; d++) {
        int suffix_len = static_cast<int>(std::min<long long>(d, t.k));
        FlatLevel<W> next;
        next.init(cur.used * 2);
        long long rem = plen - d - 1;
        bool overflow = false;
        for (const auto &slot : cur.slots) {
            if (slot[W] == 0)
                continue;
            Key<W> key;
            for (int i = 0; i < W; i++)
                key[i] = slot[i];
            std::uint64_t cnt = slot[W];
            unpack(key, suffix_len, res, suffix);
            expand(t, res, suffix, rem, res2, suffix2,
                   [&](const std::vector<long long> &r,
                       const std::vector<VertexId> &s) {
                       if (!next.add(pack(r, s), cnt))
                           overflow = true;
                   });
            if (overflow)
                return false;
        }
        states += next.used;
        peak = std::max(peak, next.used);
        if (stats) {
            stats->states = states;
            stats->peak_level = peak;
        }
        if (states > state_cap)
            throw Error(ErrorCode::budget_exceeded, "dp state cap exceeded");
        cur = std::move(next);
    }

    mpz_class total = 0;
    for (const auto &slot : cur.slots)
        if (slot[W] != 0)
            total += mpz_class(static_cast<unsigned long>(slot[W] & 0xFFFFFFFFull)) +
                     (mpz_class(static_cast<unsigned long>(slot[W] >> 32)) << 32);
    result = BigCount(total);
    return true;
}

}  // namespace

BigCount dp_count(const SeqGraph &g, int w, std::optional<long long> p,
                  std::size_t state_cap, DpStats *stats) {
    if (stats)
        *stats = {};
    auto target = dp_length(g, w, p);
    if (!target)
        return BigCount(0ul);
    long long plen = *target;

    DpTables t(g, w);
    BitPack bp(t);
    if (bp.fits) {
        BigCount result;
        bool done = false;
        switch (bp.words) {
        case 1: done = run_flat<1>(t, bp, plen, state_cap, stats, result); break;
        case 2: done = run_flat<2>(t, bp, plen, state_cap, stats, result); break;
        case 3: done = run_flat<3>(t, bp, plen, state_cap, stats, result); break;
        default: done = run_flat<4>(t, bp, plen, state_cap, stats, result); break;
        }
        if (done)
            return result;
    }
    return run_generic(t, plen, state_cap, stats);
}

namespace {

struct DpEnumerator {
    const SeqGraph &g;
    const DpTables &t;
    long long plen;
    std::size_t limit, node_cap;

    std::vector<long long> res;
    std::vector<VertexId> seq;
    std::vector<Sequence> out;
    std::size_t nodes = 0;

    DpEnumerator(const SeqGraph &graph, const DpTables &tables, long long p,
                 std::size_t lim, std::size_t cap)
        : g(graph), t(tables), plen(p), limit(lim), node_cap(cap),
          res(tables.cap.begin(), tables.cap.end()) {}

    bool dfs() {  // returns false once the limit is reached
        if (static_cast<long long>(seq.size()) == plen) {
            Sequence x = to_tokens(seq, g);
            if (!realizes(x, g, t.w))
                throw std::logic_error("dp enumeration produced a non-realization");
            out.push_back(std::move(x));
            return out.size() < limit;
        }
        long long rem = plen - static_cast<long long>(seq.size()) - 1;
        int lo = std::max(0, static_cast<int>(seq.size()) - t.k);
        for (VertexId v = 0; v < t.n; v++) {
            if (++nodes > node_cap)
                throw Error(ErrorCode::budget_exceeded, "dp node cap exceeded");
            int taken = 0;
            bool ok = true;
            for (int i = lo; i < static_cast<int>(seq.size()); i++) {
                int e = t.edge_at[seq[i]][v];
                if (e < 0 || res[e] == 0) {
                    ok = false;
                    break;
                }
                res[e]--;
                taken++;
            }
            if (ok) {
                seq.push_back(v);
                std::vector<VertexId> suffix(
                    seq.end() - std::min<std::size_t>(seq.size(), t.k),
                    seq.end());
                bool go = rem == 0 || t.need_fits(res, suffix, rem);
                bool more = true;
                if (go)
                    more = dfs();
                seq.pop_back();
                if (!more) {
                    for (int i = lo + taken - 1; i >= lo; i--)
                        res[t.edge_at[seq[i]][v]]++;
                    return false;
                }
            }
            for (int i = lo + taken - 1; i >= lo; i--)
                res[t.edge_at[seq[i]][v]]++;
        }
        return true;
    }
};

}  // namespace

std::vector<Sequence> dp_enumerate(const SeqGraph &g, int w, std::size_t limit,
                                   std::optional<long long> p,
                                   std::size_t node_cap) {
    auto target = dp_length(g, w, p);
    if (!target || limit == 0)
        return {};
    DpTables t(g, w);
    DpEnumerator en(g, t, *target, limit, node_cap);
    en.dfs();
    return en.out;
}

}  // namespace seqgraph
