#include "lcc/liere.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lcc {

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : w) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ull + (h >> 29);
    return h;
}

namespace {

struct Edge {
    int a, b, bonds;
};

std::vector<Edge> dynkin_edges(char type, int n) {
    std::vector<Edge> e;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1, 1});
    };
    switch (type) {
        case 'A': chain(n); break;
        case 'B':
        case 'C':
            chain(n);
            e.back().bonds = 2;
            break;
        case 'D':
            chain(n - 1);
            e.push_back({n - 3, n - 1, 1});
            break;
        case 'E':
            for (auto [a, b] : {std::pair{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}})
                if (a < n && b < n) e.push_back({a, b, 1});
            break;
        case 'F': e = {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}}; break;
        case 'G': e = {{0, 1, 3}}; break;
    }
    return e;
}

std::vector<int> squared_lengths(char type, int n) {
    std::vector<int> l(n, 1);
    switch (type) {
        case 'B': std::fill(l.begin(), l.end() - 1, 2); break;
        case 'C': l[n - 1] = 2; break;
        case 'F': l = {2, 2, 1, 1}; break;
        case 'G': l = {1, 3}; break;
        default: break;
    }
    return l;
}

// Order of the Weyl group of an irreducible system, identified by rank,
// number of positive roots and maximal bond.
Integer irreducible_weyl_order(int n, std::size_t npos, int bonds) {
    auto pow2 = [](int k) -> Integer { return Integer(1) << k; };
    std::size_t N = npos;
    if (bonds == 3) return 12;
    if (bonds == 2) {
        if (n == 4 && N == 24) return 1152;
        if (N == static_cast<std::size_t>(n) * n) return pow2(n) * factorial(n);
    } else {
        if (N == static_cast<std::size_t>(n) * (n + 1) / 2) return factorial(n + 1);
        if (n == 6 && N == 36) return 51840;
        if (n == 7 && N == 63) return 2903040;
        if (n == 8 && N == 120) return 696729600;
        if (N == static_cast<std::size_t>(n) * (n - 1)) return pow2(n - 1) * factorial(n);
    }
    throw std::logic_error("unrecognized irreducible root subsystem");
}

// Product of Weyl group orders over the connected components of the
// subdiagram on `nodes`.
Integer parabolic_order(const RootSystem& rs, const std::vector<int>& nodes) {
    const auto& C = rs.cartan();
    std::vector<int> comp(rs.rank(), -1);
    std::vector<char> in(rs.rank(), 0);
    for (int v : nodes) in[v] = 1;
    Integer order = 1;
    for (int s : nodes) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < rs.rank(); ++w) {
                if (w == v || C[v][w] == 0) continue;
                if (in[w] && comp[w] < 0) {
                    comp[w] = s;
                    stack.push_back(w);
                }
            }
        }
        std::vector<char> mem(rs.rank(), 0);
        for (int v : members) mem[v] = 1;
        int bonds = 1;
        for (int v : members)
            for (int w : members)
                if (v != w && C[v][w] != 0) bonds = std::max(bonds, -C[v][w]);
        std::size_t npos = 0;
        for (const auto& r : rs.positive_roots_simple()) {
            bool inside = true;
            for (int i = 0; i < rs.rank() && inside; ++i)
                if (r[i] != 0 && !mem[i]) inside = false;
            if (inside) ++npos;
        }
        order *= irreducible_weyl_order(static_cast<int>(members.size()), npos, bonds);
    }
    return order;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::make(char type, int rank) {
    bool ok = false;
    switch (type) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument(std::string("unsupported Dynkin type ") + type + std::to_string(rank));
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->build(type, rank);
    return rs;
}

std::shared_ptr<const RootSystem> RootSystem::parse(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad Dynkin type '" + name + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    std::size_t used = 0;
    int r = 0;
    try {
        r = std::stoi(name.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Dynkin type '" + name + "'");
    }
    if (used + 1 != name.size()) throw std::invalid_argument("bad Dynkin type '" + name + "'");
    return make(t, r);
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

void RootSystem::build(char type, int n) {
    type_ = type;
    rank_ = n;
    lengths_ = squared_lengths(type, n);
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    for (const auto& e : dynkin_edges(type, n)) {
        for (auto [i, j] : {std::pair{e.a, e.b}, {e.b, e.a}}) {
            int li = lengths_[i], lj = lengths_[j];
            cartan_[i][j] = -e.bonds * std::min(li, lj) / lj;
        }
    }

    // Positive roots by root strings, layer by layer in height.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> s(n, 0);
        s[i] = 1;
        known.insert(s);
        layer.push_back(s);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& b : layer) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;  // <beta, alpha_i^vee>
                for (int j = 0; j < n; ++j) pairing += b[j] * cartan_[j][i];
                int p = 0;
                std::vector<int> down = b;
                while (true) {
                    --down[i];
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<int> up = b;
                    ++up[i];
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) {
            known.insert(r);
            all.push_back(r);
        }
    }
    pos_simple_ = all;
    for (const auto& c : pos_simple_) {
        Weight w(n, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) w[k] += c[j] * cartan_[j][k];
        pos_roots_.push_back(w);
        // (alpha, alpha) = sum c_i c_j (alpha_i, alpha_j), with 2(alpha_i, alpha_j) = a_ij l_j.
        long twice = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) twice += static_cast<long>(c[i]) * c[j] * cartan_[i][j] * lengths_[j];
        long la = twice / 2;
        std::vector<int> k(n);
        for (int j = 0; j < n; ++j) {
            long num = static_cast<long>(c[j]) * lengths_[j];
            if (num % la != 0) throw std::logic_error("non-integral coroot");
            k[j] = static_cast<int>(num / la);
        }
        coroots_.push_back(k);
    }

    // det and adjugate by exact Gauss-Jordan.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
        m[i][n + i] = 1;
    }
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        Rational p = m[col][col];
        det *= p;
        for (auto& x : m[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    det_ = det.get_num();
    adj_.assign(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = m[i][n + j] * det;
            if (!is_integer(a)) throw std::logic_error("non-integral adjugate");
            adj_[i][j] = a.get_num();
        }
    form_.assign(n, std::vector<std::int64_t>(n));
    height_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            form_[i][j] = lengths_[i] * adj_[j][i].get_si();
            height_[j] += adj_[j][i].get_si();
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (form_[i][j] != form_[j][i]) throw std::logic_error("asymmetric weight form");

    dual_perm_.resize(n);
    for (int i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = -1;
        Weight d = dominant(w);
        auto it = std::find(d.begin(), d.end(), 1);
        if (it == d.end() || std::count(d.begin(), d.end(), 0) != n - 1)
            throw std::logic_error("-w0 does not permute fundamental weights");
        dual_perm_[i] = static_cast<int>(it - d.begin());
    }

    std::vector<int> every(n);
    for (int i = 0; i < n; ++i) every[i] = i;
    weyl_order_ = parabolic_order(*this, every);

    std::size_t best = 0, best_short = 0;
    int min_len = *std::min_element(lengths_.begin(), lengths_.end());
    bool have_short = false;
    for (std::size_t a = 0; a < pos_roots_.size(); ++a) {
        if (scaled_height(pos_roots_[a]) > scaled_height(pos_roots_[best])) best = a;
        // Short roots have coroot coefficients c_j l_j / min_len.
        long twice = 0;
        const auto& c = pos_simple_[a];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) twice += static_cast<long>(c[i]) * c[j] * cartan_[i][j] * lengths_[j];
        if (twice / 2 == min_len &&
            (!have_short || scaled_height(pos_roots_[a]) > scaled_height(pos_roots_[best_short]))) {
            best_short = a;
            have_short = true;
        }
    }
    highest_root_ = pos_roots_[best];
    highest_short_ = pos_roots_[best_short];
}

std::int64_t RootSystem::form(const Weight& x, const Weight& y) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        std::int64_t t = 0;
        for (int j = 0; j < rank_; ++j) t += form_[i][j] * y[j];
        s += x[i] * t;
    }
    return s;
}

std::int64_t RootSystem::scaled_height(const Weight& x) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += height_[i] * x[i];
    return s;
}

std::int64_t RootSystem::pairing(const Weight& mu, std::size_t root) const {
    std::int64_t s = 0;
    const auto& k = coroots_[root];
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(k[j]) * mu[j];
    return s;
}

Weight RootSystem::reflect(int i, Weight w) const {
    int c = w[i];
    if (c == 0) return w;
    const auto& row = cartan_[i];
    for (int k = 0; k < rank_; ++k) w[k] -= c * row[k];
    return w;
}

Weight RootSystem::dominant(Weight w, int* sign) const {
    int s = 1;
    while (true) {
        int i = 0;
        while (i < rank_ && w[i] >= 0) ++i;
        if (i == rank_) break;
        w = reflect(i, std::move(w));
        s = -s;
    }
    if (sign) *sign = s;
    return w;
}

bool RootSystem::is_dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

Weight RootSystem::dual(const Weight& w) const {
    Weight d(rank_);
    for (int i = 0; i < rank_; ++i) d[dual_perm_[i]] = w[i];
    return d;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    std::unordered_map<Weight, char, WeightHash> seen;
    std::vector<Weight> frontier{rs.dominant(w)};
    seen.emplace(frontier.front(), 1);
    std::vector<Weight> out = frontier;
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier)
            for (int i = 0; i < rs.rank(); ++i) {
                if (x[i] <= 0) continue;  // going down from the dominant chamber suffices
                Weight y = rs.reflect(i, x);
                if (seen.emplace(y, 1).second) {
                    next.push_back(y);
                    out.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer orbit_size(const RootSystem& rs, const Weight& w) {
    Weight d = rs.dominant(w);
    std::vector<int> zeros;
    for (int i = 0; i < rs.rank(); ++i)
        if (d[i] == 0) zeros.push_back(i);
    return rs.weyl_group_order() / parabolic_order(rs, zeros);
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight has wrong rank");
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_dim: weight is not dominant");
    Integer num = 1, den = 1;
    Weight rho = rs.rho();
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
        std::int64_t r = rs.pairing(rho, a);
        num *= r + rs.pairing(lambda, a);
        den *= r;
    }
    return num / den;
}

std::string weight_label(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (!s.empty()) s += w[i] > 0 ? "+" : "";
        if (w[i] == -1) s += "-";
        else if (w[i] != 1) s += std::to_string(w[i]);
        s += "varpi_" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string weight_coords(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

namespace {

int parse_coordinate(const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad weight coordinate '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad weight coordinate '" + tok + "'");
    return v;
}

// Sums like "2varpi_1+varpi_3"; the inverse of weight_label on dominant weights.
Weight parse_weight_label(const std::string& text, int rank) {
    Weight w(rank, 0);
    if (text == "0") return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(pos, end - pos);
        std::size_t at = tok.find("varpi_");
        if (at == std::string::npos) throw std::invalid_argument("bad weight term '" + tok + "'");
        int coeff = at == 0 ? 1 : parse_coordinate(tok.substr(0, at));
        int i = parse_coordinate(tok.substr(at + 6));
        if (i < 1 || i > rank) throw std::invalid_argument("fundamental weight index out of range in '" + tok + "'");
        w[i - 1] += coeff;
        pos = end + 1;
    }
    return w;
}

}  // namespace

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    if (text.find("varpi") != std::string::npos || text == "0") {
        w = parse_weight_label(text, rank);
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string::npos) end = text.size();
            w.push_back(parse_coordinate(text.substr(pos, end - pos)));
            pos = end + 1;
        }
    }
    if (static_cast<int>(w.size()) != rank)
        throw std::invalid_argument("weight needs " + std::to_string(rank) + " coordinates");
    for (int c : w)
        if (c < 0) throw std::invalid_argument("weight '" + text + "' is not dominant");
    return w;
}

std::vector<RootSystemPtr> simple_types(int max_rank) {
    std::vector<RootSystemPtr> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(RootSystem::make('A', n));
    for (int n = 2; n <= max_rank; ++n) out.push_back(RootSystem::make('B', n));
    for (int n = 3; n <= max_rank; ++n) out.push_back(RootSystem::make('C', n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(RootSystem::make('D', n));
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back(RootSystem::make('E', n));
    if (max_rank >= 4) out.push_back(RootSystem::make('F', 4));
    if (max_rank >= 2) out.push_back(RootSystem::make('G', 2));
    return out;
}

}  // namespace lcc
