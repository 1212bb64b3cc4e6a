#include "cdg/path_table.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cdg {

namespace {

constexpr Weight kUnset = std::numeric_limits<Weight>::min();

}  // namespace

PathGeometry::PathGeometry(std::vector<Weight> weights) : n_(static_cast<int>(weights.size())) {
    w_.assign(n_ + 2, 0);
    prefix_.assign(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) {
        w_[v] = weights[v - 1];
        prefix_[v] = prefix_[v - 1] + w_[v];
        positive_ += std::max<Weight>(w_[v], 0);
    }
    extra_.assign(static_cast<std::size_t>(n_ + 2) * 3 * (n_ + 2) * 3, kUnset);
}

Weight PathGeometry::lone(int v, int l, int lc, int r, int rc) const {
    if (v == l || v == r) return 0;
    Weight u = w_[v];
    if (l == 0 || lc >= 2) {
        u += segment(l + 1, v - 1);
    } else {
        const int half = (v - l - 1) / 2;
        u += segment(v - half, v - 1);
    }
    if (r == n_ + 1 || rc >= 2) {
        u += segment(v + 1, r - 1);
    } else {
        const int half = (r - v - 1) / 2;
        u += segment(v + 1, v + half);
    }
    return u;
}

Weight PathGeometry::extra(int l, int lc, int r, int rc) const {
    // Only "stacked or not" matters for a neighbour of the extra player.
    const int ls = l == 0 ? 0 : (lc >= 2 ? 2 : 1);
    const int rs = r == n_ + 1 ? 0 : (rc >= 2 ? 2 : 1);
    const std::size_t idx = ((static_cast<std::size_t>(l) * 3 + ls) * (n_ + 2) + r) * 3 + rs;
    Weight& slot = extra_[idx];
    if (slot != kUnset) return slot;
    Weight best = std::numeric_limits<Weight>::min();
    for (int v = std::max(l, 1); v <= std::min(r, n_); ++v) best = std::max(best, lone(v, l, ls, r, rs));
    slot = best;
    return best;
}

SubEquilibriumTable::SubEquilibriumTable(const PathGeometry& path, Weight nu_max, Weight mu_min, int max_players)
    : path_(path), nu_max_(nu_max), mu_min_(mu_min), max_players_(std::max(max_players, 0)) {
    const int n = path_.size();
    const int K = max_players_;
    admitted_.resize(K + 1);
    if (path_.extra(0, 0, n + 1, 0) <= nu_max_) admitted_.set(0);
    if (K == 0 || n == 0) return;
    layers_.resize(n + 1);

    for (int x = 1; x <= n; ++x)
        for (int a = 1; a <= K; ++a)
            if (init_ok(x, a)) {
                Bits bits(K + 1);
                bits.set(a);
                add(x, {a, 0, 0}, nu_max_, mu_min_, bits);
            }

    for (int y = 1; y <= n; ++y) {
        for (const auto& [key, entries] : layers_[y]) {
            const auto [b, z, c] = key;
            for (const Entry& e : entries) {
                const int lowest = static_cast<int>(e.kappas.find_first());
                for (int x = y + 1; x <= n; ++x) {
                    for (int cls = 1; cls <= 3; ++cls) {
                        const Step step = transition(z, c, y, b, x, cls, e.pu, e.pe);
                        if (!step.ok) continue;
                        const int a_hi = cls < 3 ? cls : K;
                        for (int a = cls; a <= a_hi && lowest + a <= K; ++a)
                            add(x, {a, y, b}, step.pu, step.pe, e.kappas << a);
                    }
                }
            }
        }
    }

    for (int x = 1; x <= n; ++x)
        for (const auto& [key, entries] : layers_[x]) {
            const auto [a, y, b] = key;
            for (const Entry& e : entries)
                if (final_ok(x, a, y, b, e.pu, e.pe)) admitted_ |= e.kappas;
        }
}

bool SubEquilibriumTable::init_ok(int x, int a) const {
    return path_.extra(0, 0, x, a) <= nu_max_;
}

SubEquilibriumTable::Step SubEquilibriumTable::transition(int z, int c, int y, int b, int x, int a, Weight pu,
                                                          Weight pe) const {
    // Residents of y are settled here: the a players on x are their right
    // neighbours, the c players on z their left ones.
    const Weight uy = path_.resident(y, count_class(b), z, c, x, a);
    if (uy < mu_min_ || uy < pe) return {};
    const Weight mover = b >= 2 ? std::max(path_.extra(z, c, y, b - 1), path_.extra(y, b - 1, x, a))
                                : path_.extra(z, c, x, a);
    if (mover > uy) return {};
    const Weight gap = path_.extra(y, b, x, a);
    if (gap > nu_max_ || gap > pu) return {};
    return {true, std::min(pu, uy), std::max(pe, path_.extra(z, c, y, b))};
}

bool SubEquilibriumTable::final_ok(int x, int a, int y, int b, Weight pu, Weight pe) const {
    const int n = path_.size();
    const Weight ux = path_.resident(x, count_class(a), y, b, n + 1, 0);
    if (ux < mu_min_ || ux < pe) return false;
    const Weight mover = a >= 2 ? std::max(path_.extra(y, b, x, a - 1), path_.extra(x, a - 1, n + 1, 0))
                                : path_.extra(y, b, n + 1, 0);
    if (mover > ux) return false;
    const Weight tail = path_.extra(x, a, n + 1, 0);
    return tail <= nu_max_ && tail <= pu;
}

void SubEquilibriumTable::add(int x, const Key& key, Weight pu, Weight pe, const Bits& kappas) {
    if (kappas.none()) return;
    auto& entries = layers_[x][key];
    for (Entry& e : entries)
        if (e.pu == pu && e.pe == pe) {
            e.kappas |= kappas;
            return;
        }
    entries.push_back({pu, pe, kappas});
}

const std::vector<SubEquilibriumTable::Entry>* SubEquilibriumTable::find(int x, int a, int y, int b) const {
    if (x < 1 || x >= static_cast<int>(layers_.size())) return nullptr;
    auto it = layers_[x].find({a, y, b});
    return it == layers_[x].end() ? nullptr : &it->second;
}

bool SubEquilibriumTable::cell(int kappa, int x, int a, int y, int b) const {
    if (kappa < 1 || kappa > max_players_) return false;
    const auto* entries = find(x, a, y, b);
    if (!entries) return false;
    return std::any_of(entries->begin(), entries->end(), [&](const Entry& e) { return e.kappas.test(kappa); });
}

bool SubEquilibriumTable::admits(int kappa) const {
    return kappa >= 0 && kappa <= max_players_ && admitted_.test(kappa);
}

std::vector<int> SubEquilibriumTable::admissible() const {
    std::vector<int> out;
    for (auto i = admitted_.find_first(); i != Bits::npos; i = admitted_.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SubEquilibriumTable::reconstruct(int kappa) const {
    if (!admits(kappa)) throw std::invalid_argument("path does not admit " + std::to_string(kappa) + " players");
    std::vector<int> out;
    if (kappa == 0) return out;
    for (int x = 1; x < static_cast<int>(layers_.size()); ++x)
        for (const auto& [key, entries] : layers_[x]) {
            const auto [a, y, b] = key;
            for (const Entry& e : entries)
                if (e.kappas.test(kappa) && final_ok(x, a, y, b, e.pu, e.pe)) {
                    trace(x, a, y, b, e, kappa, out);
                    std::sort(out.begin(), out.end());
                    return out;
                }
        }
    throw std::logic_error("sub-equilibrium table lost its final cell");
}

void SubEquilibriumTable::trace(int x, int a, int y, int b, const Entry& entry, int kappa,
                                std::vector<int>& out) const {
    out.insert(out.end(), a, x - 1);
    const int rest = kappa - a;
    if (y == 0) {
        if (rest != 0) throw std::logic_error("initial cell reached with players left over");
        return;
    }
    for (const auto& [key, entries] : layers_[y]) {
        const auto [b2, z, c] = key;
        if (b2 != b) continue;
        for (const Entry& e : entries) {
            if (rest < 0 || !e.kappas.test(rest)) continue;
            const Step step = transition(z, c, y, b, x, a, e.pu, e.pe);
            if (step.ok && step.pu == entry.pu && step.pe == entry.pe) {
                trace(y, b, z, c, e, rest, out);
                return;
            }
        }
    }
    throw std::logic_error("sub-equilibrium table has a cell without predecessor");
}

std::vector<int> admissible_counts_weighted(std::span<const Weight> weights, Weight t, int max_players) {
    PathGeometry path(std::vector<Weight>(weights.begin(), weights.end()));
    if (max_players < 0) max_players = 2 * path.size();
    return SubEquilibriumTable(path, t, t, max_players).admissible();
}

}  // namespace cdg
