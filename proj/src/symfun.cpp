#include "lcc/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        degree_ += parts_[i];
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(std::max(n, 0), 1)); }

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) throw std::invalid_argument("empty part in '" + text + "'");
        std::size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size()) throw std::invalid_argument("bad part '" + cur + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void partitions_rec(int rest, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::powersum: return "powersum";
        case Basis::elementary: return "elementary";
        case Basis::schur: return "schur";
    }
    return "?";
}

Rational SymExpr::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpr::add(const Partition& p, const Rational& c) {
    if (c == 0) return;
    if (degree_ < 0) degree_ = p.degree();
    else if (degree_ != p.degree()) homogeneous_ = false;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer z_coefficient(const Partition& beta) {
    Integer z = 1;
    auto m = beta.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), i, m[i]);
        z *= pw * factorial(m[i]);
    }
    return z;
}

namespace {

// Beads of the abacus: first-column hook lengths. Removing a rim hook of
// length r moves one bead down by r onto a free position.
Integer mn_beads(std::vector<int>& beads, const std::vector<int>& cycle, std::size_t at,
                 std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (at == cycle.size()) return 1;
    auto key = std::make_pair(beads, at);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int r = cycle[at];
    Integer total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        int b = beads[i];
        int target = b - r;
        if (target < 0) continue;
        if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
        int between = 0;
        for (int c : beads)
            if (c > target && c < b) ++between;
        beads[i] = target;
        Integer sub = mn_beads(beads, cycle, at + 1, memo);
        beads[i] = b;
        if (between % 2) total -= sub;
        else total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer mn_character(const Partition& alpha, const Partition& beta) {
    if (alpha.degree() != beta.degree())
        throw std::invalid_argument("mn_character: degree mismatch");
    int l = alpha.length();
    std::vector<int> beads(l);
    for (int i = 0; i < l; ++i) beads[i] = alpha[i] + (l - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    return mn_beads(beads, beta.parts(), 0, memo);
}

std::vector<AdamsTerm> adams_expansion(const Partition& alpha) {
    int n = alpha.degree();
    Integer nfac = factorial(n);
    std::vector<AdamsTerm> out;
    for (const auto& beta : partitions(n)) {
        Integer chi = mn_character(alpha, beta);
        if (chi == 0) continue;
        out.push_back({beta, chi * (nfac / z_coefficient(beta))});
    }
    return out;
}

SymExpr schur_to_powersum(const Partition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("schur_to_powersum: empty partition");
    SymExpr out(Basis::powersum);
    for (const auto& beta : partitions(alpha.degree())) {
        Integer chi = mn_character(alpha, beta);
        if (chi != 0) out.add(beta, fraction(chi, z_coefficient(beta)));
    }
    return out;
}

SymExpr elementary_to_powersum(int n) {
    if (n < 0) throw std::invalid_argument("elementary_to_powersum: n must be non-negative");
    // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
    std::vector<std::map<Partition, Rational>> e(n + 1);
    e[0][Partition()] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= k; ++i) {
            Rational sign = (i % 2) ? fraction(1, k) : fraction(-1, k);
            for (const auto& [p, c] : e[k - i]) {
                std::vector<int> parts = p.parts();
                parts.push_back(i);
                auto q = Partition::sorted(std::move(parts));
                e[k][q] += sign * c;
            }
        }
    }
    SymExpr out(Basis::powersum);
    for (const auto& [p, c] : e[n]) out.add(p, c);
    return out;
}

}  // namespace lcc
