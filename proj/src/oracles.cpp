#include "divrank/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>

#include "divrank/distance.hpp"
#include "divrank/errors.hpp"
#include "divrank/reductions.hpp"

namespace divrank::oracles {

namespace {

using Wide = __int128;

std::int64_t bareiss_det(std::vector<Wide> a, std::size_t m) {
    if (m == 0) return 1;
    Wide sign = 1;
    Wide prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k * m + k] == 0) {
            std::size_t r = k + 1;
            while (r < m && a[r * m + k] == 0) ++r;
            if (r == m) return 0;
            for (std::size_t c = 0; c < m; ++c) std::swap(a[k * m + c], a[r * m + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i * m + j] = (a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j]) / prev;
            }
        }
        prev = a[k * m + k];
    }
    return static_cast<std::int64_t>(sign * a[(m - 1) * m + (m - 1)]);
}

std::int64_t floor_mod(Wide a, std::int64_t m) {
    Wide r = a % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

template <class Visit>
void for_each_effective(std::size_t n, std::int64_t degree, Visit&& visit) {
    std::vector<std::int64_t> chips(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> bool {
        if (i + 1 == n) {
            chips[i] = left;
            return visit(chips);
        }
        for (std::int64_t c = left; c >= 0; --c) {
            chips[i] = c;
            if (self(self, i + 1, left - c)) return true;
        }
        return false;
    };
    if (n > 0) rec(rec, 0, degree);
}

void require_connected_graph(const Multigraph& g, const Divisor& f) {
    if (f.size() != g.vertex_count()) throw InputError("divisor length does not match graph");
    if (g.vertex_count() == 0 || !g.is_connected()) {
        throw InputError("oracle needs a connected graph");
    }
}

}  // namespace

LaplacianLattice::LaplacianLattice(const Multigraph& g) : n_(g.vertex_count()) {
    if (n_ == 0 || !g.is_connected()) throw InputError("oracle needs a connected graph");
    const std::size_t m = n_ - 1;
    std::vector<Wide> lap(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            lap[i * m + j] = (i == j) ? g.degree(i + 1) : -g.multiplicity(i + 1, j + 1);
        }
    }
    det_ = bareiss_det(lap, m);
    adj_.assign(m * m, 0);
    if (m == 0) return;
    std::vector<Wide> minor((m - 1) * (m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            // adj[i][j] = (-1)^(i+j) det(lap without row j, column i)
            std::size_t idx = 0;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0; c < m; ++c) {
                    if (c == i) continue;
                    minor[idx++] = lap[r * m + c];
                }
            }
            std::int64_t d = bareiss_det(minor, m - 1);
            adj_[i * m + j] = ((i + j) % 2 == 0) ? d : -d;
        }
    }
}

std::vector<std::int64_t> LaplacianLattice::class_key(const Divisor& h) const {
    const std::size_t m = n_ - 1;
    std::vector<std::int64_t> key(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        Wide acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += Wide(adj_[i * m + j]) * h[j + 1];
        key[i] = floor_mod(acc, det_);
    }
    return key;
}

bool LaplacianLattice::equivalent(const Divisor& a, const Divisor& b) const {
    return a.degree() == b.degree() && class_key(a) == class_key(b);
}

const std::vector<std::int64_t>& LaplacianLattice::effective_keys_sorted(std::int64_t degree) const {
    const auto d = static_cast<std::size_t>(degree);
    if (cached_.size() <= d) {
        cached_.resize(d + 1, false);
        cache_.resize(d + 1);
    }
    if (!cached_[d]) {
        const std::size_t m = n_ - 1;
        std::vector<std::vector<std::int64_t>> keys;
        for_each_effective(n_, degree, [&](const std::vector<std::int64_t>& chips) {
            keys.push_back(class_key(Divisor(chips)));
            return false;
        });
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<std::int64_t> flat;
        flat.reserve(keys.size() * m);
        for (const auto& k : keys) flat.insert(flat.end(), k.begin(), k.end());
        cache_[d] = std::move(flat);
        cached_[d] = true;
    }
    return cache_[d];
}

bool LaplacianLattice::winnable(const Divisor& h) const {
    const std::int64_t degree = h.degree();
    if (degree < 0) return false;
    const std::size_t m = n_ - 1;
    if (m == 0) return true;
    const auto& flat = effective_keys_sorted(degree);
    const auto key = class_key(h);
    std::size_t lo = 0;
    std::size_t hi = flat.size() / m;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto first = flat.begin() + static_cast<std::ptrdiff_t>(mid * m);
        if (std::lexicographical_compare(first, first + static_cast<std::ptrdiff_t>(m), key.begin(),
                                         key.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo == flat.size() / m) return false;
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(lo * m);
    return std::equal(first, first + static_cast<std::ptrdiff_t>(m), key.begin());
}

bool winnable_bounded(const Multigraph& g, const Divisor& h, std::int64_t bound) {
    require_connected_graph(g, h);
    if (bound < 0) throw InputError("winnability bound must be nonnegative");
    const std::size_t n = g.vertex_count();
    std::vector<std::int64_t> z(n, 0);
    while (true) {
        if (*std::min_element(z.begin(), z.end()) == 0) {
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                std::int64_t flow = g.degree(v) * z[v];
                for (std::size_t u = 0; u < n; ++u) flow -= g.multiplicity(u, v) * z[u];
                ok = h[v] - flow >= 0;
            }
            if (ok) return true;
        }
        std::size_t i = 0;
        while (i < n && z[i] == bound) z[i++] = 0;
        if (i == n) return false;
        ++z[i];
    }
}

std::int64_t default_winnability_bound(const Multigraph& g, const Divisor& h) {
    std::int64_t to_rec = 0;
    std::int64_t positive = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        to_rec += std::max<std::int64_t>(0, g.degree(v) - h[v]);
        positive += std::max<std::int64_t>(0, h[v]);
    }
    return 2 * (to_rec + positive + 1);
}

std::int64_t rank_definitional(const Multigraph& g, const Divisor& f, WinnabilityMethod method,
                               std::optional<std::int64_t> winnability_bound) {
    require_connected_graph(g, f);
    const std::int64_t degree = f.degree();
    if (degree < 0) return -1;

    std::optional<LaplacianLattice> lattice;
    if (method == WinnabilityMethod::Lattice) lattice.emplace(g);
    auto winnable = [&](const Divisor& h) {
        if (lattice) return lattice->winnable(h);
        return winnable_bounded(g, h, winnability_bound.value_or(default_winnability_bound(g, h)));
    };

    const std::size_t n = g.vertex_count();
    for (std::int64_t k = 0; k <= degree + 1; ++k) {
        bool found = false;
        for_each_effective(n, k, [&](const std::vector<std::int64_t>& chips) {
            Divisor h = f - Divisor(chips);
            found = !winnable(h);
            return found;
        });
        if (found) return k - 1;
    }
    throw VerificationError("rank search exhausted; a negative-degree divisor was judged winnable");
}

bool recurrent_permutation(const Multigraph& g, const Divisor& f) {
    require_connected_graph(g, f);
    const std::size_t n = g.vertex_count();
    if (n > 9) throw InputError("permutation oracle is limited to 9 vertices");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        std::vector<std::int64_t> chips(f.begin(), f.end());
        bool legal = true;
        for (std::size_t v : order) {
            if (chips[v] < g.degree(v)) {
                legal = false;
                break;
            }
            for (std::size_t u = 0; u < n; ++u) {
                chips[u] += (u == v) ? -g.degree(v) : g.multiplicity(v, u);
            }
        }
        if (legal) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

std::size_t ts_subset_enumeration(const Multigraph& g, const Thresholds& tau) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw InputError("subset oracle is limited to 20 vertices");
    if (!g.is_simple()) throw InputError("subset oracle needs a simple graph");
    if (tau.size() != n) throw InputError("threshold length does not match graph");
    std::vector<std::uint32_t> nbrs(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (g.multiplicity(u, v) > 0) nbrs[u] |= (1u << v);
        }
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto spreads = [&](std::uint32_t active) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (active >> v & 1u) continue;
                if (std::popcount(nbrs[v] & active) >= tau[v]) {
                    active |= 1u << v;
                    grew = true;
                }
            }
        }
        return active == full;
    };
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            if (spreads(0)) return 0;
            continue;
        }
        // Gosper's hack over k-subsets.
        std::uint32_t s = (1u << k) - 1;
        while (s <= full) {
            if (spreads(s)) return k;
            std::uint32_t c = s & -s;
            std::uint32_t r = s + c;
            if (r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

std::string fingerprint(const Multigraph& g, const std::vector<std::int64_t>& payload) {
    std::string text = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) {
        text += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.mult) + "\n";
    }
    for (std::int64_t p : payload) text += std::to_string(p) + " ";
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<OracleReport> verify_reduction_chain(const Multigraph& g, const Thresholds& tau) {
    const std::string fp = fingerprint(g, tau.values());
    const auto ts_pipeline = static_cast<std::int64_t>(min_target_set(g, tau).size());
    const auto ts_oracle = static_cast<std::int64_t>(ts_subset_enumeration(g, tau));
    const auto chain = reduce_tss_to_nonhalt(g, tau);
    const std::int64_t rec = dist_rec(chain.first.gprime, chain.first.x).value;
    const std::int64_t nonhalt = dist_nonhalt(chain.second.gpp, chain.second.fpp).value;

    std::vector<OracleReport> out;
    auto equal = [&](std::string name, std::int64_t a, std::int64_t b) {
        out.push_back({std::move(name), a, b, Relation::Equal, a == b, fp});
    };
    auto greater = [&](std::string name, std::int64_t a, std::int64_t b) {
        out.push_back({std::move(name), a, b, Relation::Greater, a > b, fp});
    };
    equal("ts(min_target_set) = ts(subset_enumeration)", ts_pipeline, ts_oracle);
    equal("dist_rec(G',x) = ts", rec, ts_oracle);
    equal("dist_nonhalt(G'',x'') = ts", nonhalt, ts_oracle);
    equal("dist_nonhalt(G'',x'') = dist_rec(G',x)", nonhalt, rec);
    greater("N > dist_rec(G',x) + 1", chain.first.N, rec + 1);
    greater("M > dist_nonhalt(G'',x'')", chain.second.M, nonhalt);
    return out;
}

}  // namespace divrank::oracles
