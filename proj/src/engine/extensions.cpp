#include "cohomotopy/engine/extensions.hpp"

#include "cohomotopy/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cohomotopy::engine {

namespace {

int size_of(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate_free(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

void partitions_of(int n, int max_part, Partition& current, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        current.push_back(k);
        partitions_of(n - k, k, current, out);
        current.pop_back();
    }
}

// p-adic exponents of the torsion invariants, as a partition.
Partition type_at(const FinAbGroup& g, const Integer& p) {
    Partition out;
    for (const auto& d : g.torsion()) {
        int v = static_cast<int>(algebra::valuation(d, p));
        if (v > 0) out.push_back(v);
    }
    return conjugate_free(out);
}

} // namespace

Integer littlewood_richardson(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
    const Partition lambda = conjugate_free(lambda_in);
    const Partition mu = conjugate_free(mu_in);
    const Partition nu = conjugate_free(nu_in);
    if (size_of(lambda) != size_of(mu) + size_of(nu)) return 0;
    for (std::size_t i = 0; i < std::max(lambda.size(), mu.size()); ++i)
        if (part(mu, i) > part(lambda, i)) return 0;

    // Fill the skew shape lambda/mu row by row, each row right to left. A filling is an
    // LR tableau when rows weakly increase, columns strictly increase and the reading
    // word is a lattice word with content nu.
    const std::size_t rows = lambda.size();
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> used(nu.size() + 1, 0);
    Integer count = 0;

    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == rows) {
            for (std::size_t i = 0; i < nu.size(); ++i)
                if (used[i + 1] != nu[i]) return;
            ++count;
            return;
        }
        const int start = part(mu, r);
        if (c < start) {
            fill(r + 1, part(lambda, r + 1) - 1);
            return;
        }
        const int right = (c + 1 < lambda[r]) ? grid[r][static_cast<std::size_t>(c) + 1] : static_cast<int>(nu.size());
        const int above = (r > 0 && c < lambda[r - 1] && c >= part(mu, r - 1)) ? grid[r - 1][static_cast<std::size_t>(c)] : 0;
        for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
            if (v > right) break;
            if (v <= above) continue;
            if (used[static_cast<std::size_t>(v)] >= nu[static_cast<std::size_t>(v) - 1]) continue;
            if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v) - 1]) continue;
            ++used[static_cast<std::size_t>(v)];
            grid[r][static_cast<std::size_t>(c)] = v;
            fill(r, c - 1);
            --used[static_cast<std::size_t>(v)];
            grid[r][static_cast<std::size_t>(c)] = 0;
        }
    };
    if (rows == 0) return size_of(nu) == 0 ? 1 : 0;
    fill(0, lambda[0] - 1);
    return count;
}

std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& t, const FinAbGroup& h) {
    if (!t.is_finite()) raise(ErrorCode::InvalidArgument, "the subgroup term must be finite");
    const Integer bound = Integer(1) << 20;
    if (t.order() * h.torsion_order() > bound)
        raise(ErrorCode::TooLarge, "extension enumeration is limited to |T| * |H| <= 2^20");

    std::map<Integer, bool> primes;
    for (const auto* g : {&t, &h})
        for (const auto& d : g->torsion())
            for (const auto& [q, e] : algebra::factorize(d)) primes[q] = true;

    // Per prime: the admissible types of the p-part of E.
    std::vector<std::pair<Integer, std::vector<Partition>>> choices;
    for (const auto& [q, unused] : primes) {
        Partition mu = type_at(t, q);
        Partition nu = type_at(h, q);
        std::vector<Partition> all;
        Partition current;
        const int total = size_of(mu) + size_of(nu);
        partitions_of(total, total, current, all);
        std::vector<Partition> ok;
        for (const auto& lambda : all)
            if (littlewood_richardson(lambda, mu, nu) > 0) ok.push_back(lambda);
        choices.emplace_back(q, std::move(ok));
    }

    std::vector<FinAbGroup> out;
    algebra::IntVector orders(h.free_rank(), 0);
    std::function<void(std::size_t)> combine = [&](std::size_t i) {
        if (i == choices.size()) {
            out.push_back(FinAbGroup::from_cyclic_orders(orders));
            return;
        }
        for (const auto& lambda : choices[i].second) {
            const std::size_t mark = orders.size();
            for (int e : lambda) orders.push_back(algebra::pow(choices[i].first, static_cast<unsigned>(e)));
            combine(i + 1);
            orders.resize(mark);
        }
    };
    combine(0);
    std::sort(out.begin(), out.end(), [](const FinAbGroup& a, const FinAbGroup& b) {
        if (a.torsion().size() != b.torsion().size()) return a.torsion().size() < b.torsion().size();
        return a.torsion() < b.torsion();
    });
    return out;
}

} // namespace cohomotopy::engine
