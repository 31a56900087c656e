#include "superquiver/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "superquiver/errors.hpp"

namespace superquiver {

SuperRootSystem::SuperRootSystem(std::size_t n, std::size_t m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw PreconditionError("A(n,m) requires n >= 1 and m >= 1");
}

SuperRoot::SuperRoot(const SuperRootSystem& rs, std::size_t plus, std::size_t minus)
    : n_(rs.n()), plus_(plus), minus_(minus) {
    if (plus >= rs.dimension() || minus >= rs.dimension() || plus == minus) {
        throw PreconditionError("SuperRoot: need distinct coordinates below " + std::to_string(rs.dimension()));
    }
    coords_.assign(rs.dimension(), 0);
    coords_[plus] = 1;
    coords_[minus] = -1;
    parity_ = (rs.is_epsilon(plus) != rs.is_epsilon(minus)) ? Parity::odd : Parity::even;
}

SuperRoot SuperRoot::from_coords(const SuperRootSystem& rs, const LatticeVector& coords) {
    if (coords.size() != rs.dimension()) {
        throw DimensionError("SuperRoot::from_coords: expected " + std::to_string(rs.dimension()) + " coordinates");
    }
    std::size_t plus = coords.size();
    std::size_t minus = coords.size();
    for (std::size_t c = 0; c < coords.size(); ++c) {
        if (coords[c] == 0) continue;
        if (coords[c] == 1 && plus == coords.size()) {
            plus = c;
        } else if (coords[c] == -1 && minus == coords.size()) {
            minus = c;
        } else {
            throw PreconditionError("SuperRoot::from_coords: not of the form e_a - e_b");
        }
    }
    if (plus == coords.size() || minus == coords.size()) {
        throw PreconditionError("SuperRoot::from_coords: not of the form e_a - e_b");
    }
    return {rs, plus, minus};
}

namespace {

bool consume(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) == prefix) {
        s.remove_prefix(prefix.size());
        return true;
    }
    return false;
}

// One functional: returns its coordinate index.
std::size_t parse_functional(const SuperRootSystem& rs, std::string_view& s, std::string_view whole) {
    bool epsilon = false;
    if (consume(s, "eps") || consume(s, "ε") || consume(s, "e")) {
        epsilon = true;
    } else if (consume(s, "delta") || consume(s, "δ") || consume(s, "d")) {
        epsilon = false;
    } else {
        throw PreconditionError("cannot parse root '" + std::string(whole) + "'");
    }
    std::size_t digits = 0;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits == 0) throw PreconditionError("missing index in root '" + std::string(whole) + "'");
    const std::size_t index = std::stoul(std::string(s.substr(0, digits)));
    s.remove_prefix(digits);
    const std::size_t bound = epsilon ? rs.n() : rs.m();
    if (index < 1 || index > bound) {
        throw PreconditionError("index out of range in root '" + std::string(whole) + "'");
    }
    return epsilon ? index - 1 : rs.n() + index - 1;
}

}  // namespace

SuperRoot SuperRoot::parse(const SuperRootSystem& rs, std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') compact += c;
    }
    std::string_view s = compact;
    const std::size_t plus = parse_functional(rs, s, text);
    if (!consume(s, "-") && !consume(s, "−")) throw PreconditionError("expected '-' in root '" + std::string(text) + "'");
    const std::size_t minus = parse_functional(rs, s, text);
    if (!s.empty()) throw PreconditionError("trailing characters in root '" + std::string(text) + "'");
    return {rs, plus, minus};
}

SuperRoot SuperRoot::negated() const {
    SuperRoot r = *this;
    std::swap(r.plus_, r.minus_);
    for (auto& c : r.coords_) c = -c;
    return r;
}

std::string SuperRoot::name(bool ascii) const {
    auto functional = [&](std::size_t c) {
        const bool eps = c < n_;
        const std::size_t idx = eps ? c + 1 : c - n_ + 1;
        if (ascii) return std::string(eps ? "e" : "d") + std::to_string(idx);
        return std::string(eps ? "ε" : "δ") + std::to_string(idx);
    };
    return functional(plus_) + (ascii ? "-" : "−") + functional(minus_);
}

std::vector<SuperRoot> all_roots(const SuperRootSystem& rs) {
    std::vector<SuperRoot> even;
    std::vector<SuperRoot> odd;
    const std::size_t d = rs.dimension();
    // epsilon block, then delta block
    for (bool eps_block : {true, false}) {
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                if (a == b || rs.is_epsilon(a) != eps_block || rs.is_epsilon(b) != eps_block) continue;
                even.emplace_back(rs, a, b);
            }
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (rs.is_epsilon(a) != rs.is_epsilon(b)) odd.emplace_back(rs, a, b);
        }
    }
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

LatticeVector flatten(const SuperRoot& alpha) { return alpha.coords(); }

int dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

LatticeVector reflect_lattice(const LatticeVector& v, const LatticeVector& root) {
    const int k = dot(v, root);
    LatticeVector out = v;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] -= k * root[c];
    return out;
}

LatticeVector simple_reflection_action(std::size_t k, const LatticeVector& v) {
    if (k + 1 >= v.size()) throw PreconditionError("simple_reflection_action: index out of range");
    LatticeVector out = v;
    std::swap(out[k], out[k + 1]);
    return out;
}

SimpleSystem::SimpleSystem(SuperRootSystem rs, std::vector<SuperRoot> roots) : rs_(rs), roots_(std::move(roots)) {
    if (roots_.size() != rs_.rank()) {
        throw DimensionError("SimpleSystem: expected " + std::to_string(rs_.rank()) + " roots, got " +
                             std::to_string(roots_.size()));
    }
    for (const auto& r : roots_) {
        if (r.coords().size() != rs_.dimension()) throw DimensionError("SimpleSystem: root of wrong length");
    }
    // Gram matrix must be the A-type Cartan matrix.
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        for (std::size_t j = 0; j < roots_.size(); ++j) {
            const int expected = i == j ? 2 : ((i + 1 == j || j + 1 == i) ? -1 : 0);
            if (dot(roots_[i].coords(), roots_[j].coords()) != expected) {
                throw PreconditionError("SimpleSystem: roots do not form a simple system of type A");
            }
        }
    }
    // Recover the coordinate ordering and sign.
    auto attempt = [&](int sign) -> bool {
        std::vector<std::size_t> order;
        const auto head = [&](const SuperRoot& r) { return sign > 0 ? r.plus_index() : r.minus_index(); };
        const auto tail = [&](const SuperRoot& r) { return sign > 0 ? r.minus_index() : r.plus_index(); };
        order.push_back(head(roots_[0]));
        order.push_back(tail(roots_[0]));
        for (std::size_t j = 1; j < roots_.size(); ++j) {
            if (head(roots_[j]) != order.back()) return false;
            order.push_back(tail(roots_[j]));
        }
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t c = 0; c < sorted.size(); ++c)
            if (sorted[c] != c) return false;
        order_ = std::move(order);
        sign_ = sign;
        return true;
    };
    if (!attempt(1) && !attempt(-1)) {
        throw PreconditionError("SimpleSystem: roots do not chain into a path");
    }
}

SimpleSystem SimpleSystem::from_st(const SuperRootSystem& rs, const std::vector<std::size_t>& s,
                                   const std::vector<std::size_t>& t, bool negative) {
    auto check = [](const std::vector<std::size_t>& v, std::size_t last, const char* name) {
        if (v.empty() || v.back() != last) {
            throw PreconditionError(std::string("from_st: sequence ") + name + " must end at " + std::to_string(last));
        }
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (v[r] == 0 || (r > 0 && v[r] <= v[r - 1])) {
                throw PreconditionError(std::string("from_st: sequence ") + name + " must be strictly increasing and positive");
            }
        }
    };
    check(s, rs.n(), "S");
    check(t, rs.m(), "T");
    if (s.size() != t.size() && s.size() != t.size() + 1) {
        throw PreconditionError("from_st: blocks must alternate starting with epsilon (|S| = |T| or |T| + 1)");
    }
    std::vector<std::size_t> order;
    std::size_t eps_done = 0;
    std::size_t delta_done = 0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        for (; eps_done < s[r]; ++eps_done) order.push_back(eps_done);
        if (r < t.size()) {
            for (; delta_done < t[r]; ++delta_done) order.push_back(rs.n() + delta_done);
        }
    }
    std::vector<SuperRoot> roots;
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
        roots.emplace_back(rs, negative ? order[j + 1] : order[j], negative ? order[j] : order[j + 1]);
    }
    return {rs, std::move(roots)};
}

SimpleSystem SimpleSystem::distinguished(const SuperRootSystem& rs) { return from_st(rs, {rs.n()}, {rs.m()}); }

std::vector<Parity> SimpleSystem::colours() const {
    std::vector<Parity> out;
    for (const auto& r : roots_) out.push_back(r.parity());
    return out;
}

std::vector<int> SimpleSystem::coefficients(const LatticeVector& v) const {
    if (v.size() != rs_.dimension()) throw DimensionError("coefficients: wrong length");
    if (std::accumulate(v.begin(), v.end(), 0) != 0) {
        throw PreconditionError("coefficients: vector is not in the root lattice");
    }
    std::vector<int> c(roots_.size());
    int running = 0;
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        running += v[order_[j]];
        c[j] = sign_ * running;
    }
    return c;
}

LatticeVector SimpleSystem::combine(const std::vector<int>& coefficients) const {
    if (coefficients.size() != roots_.size()) throw DimensionError("combine: wrong number of coefficients");
    LatticeVector v(rs_.dimension(), 0);
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += coefficients[j] * roots_[j].coords()[c];
    }
    return v;
}

bool SimpleSystem::is_positive(const SuperRoot& alpha) const {
    const auto c = coefficients(alpha.coords());
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

std::vector<SuperRoot> SimpleSystem::positive_roots() const {
    std::vector<std::pair<std::vector<int>, SuperRoot>> keyed;
    for (const auto& r : all_roots(rs_)) {
        if (!is_positive(r)) continue;
        auto c = coefficients(r.coords());
        std::vector<int> key{std::accumulate(c.begin(), c.end(), 0)};
        for (int x : c) key.push_back(-x);
        keyed.emplace_back(std::move(key), r);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SuperRoot> out;
    for (auto& [k, r] : keyed) out.push_back(r);
    return out;
}

SimpleSystem SimpleSystem::reflect(std::size_t i) const {
    if (i >= roots_.size()) {
        throw PreconditionError("reflect: vertex " + std::to_string(i + 1) + " out of range 1.." +
                                std::to_string(roots_.size()));
    }
    const SuperRoot& ai = roots_[i];
    std::vector<SuperRoot> out;
    out.reserve(roots_.size());
    if (is_odd(ai.parity())) {
        for (std::size_t j = 0; j < roots_.size(); ++j) {
            if (j == i) {
                out.push_back(ai.negated());
            } else if (j + 1 == i || i + 1 == j) {
                LatticeVector sum = roots_[j].coords();
                for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += ai.coords()[c];
                out.push_back(SuperRoot::from_coords(rs_, sum));
            } else {
                out.push_back(roots_[j]);
            }
        }
    } else {
        for (const auto& r : roots_) out.push_back(SuperRoot::from_coords(rs_, reflect_lattice(r.coords(), ai.coords())));
    }
    return {rs_, std::move(out)};
}

std::string Word::to_string() const {
    std::string s;
    for (std::size_t l : letters) s += "s" + std::to_string(l + 1);
    return s;
}

RootCoefficients apply_simple_reflection(std::size_t i, RootCoefficients c) {
    if (i >= c.size()) throw PreconditionError("apply_simple_reflection: index out of range");
    int pairing = 2 * c[i];
    if (i > 0) pairing -= c[i - 1];
    if (i + 1 < c.size()) pairing -= c[i + 1];
    c[i] -= pairing;
    return c;
}

RootCoefficients apply_word(const Word& w, RootCoefficients c) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) c = apply_simple_reflection(*it, std::move(c));
    return c;
}

namespace {

RootCoefficients unit(std::size_t i, std::size_t rank) {
    RootCoefficients c(rank, 0);
    c.at(i) = 1;
    return c;
}

bool positive(const RootCoefficients& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }) &&
           std::any_of(c.begin(), c.end(), [](int x) { return x > 0; });
}

}  // namespace

std::vector<RootCoefficients> enumerate_positive_roots(const Word& word, std::size_t rank) {
    std::vector<RootCoefficients> out;
    std::set<RootCoefficients> seen;
    Word prefix;
    for (std::size_t letter : word.letters) {
        if (letter >= rank) throw PreconditionError("enumerate_positive_roots: letter out of range");
        RootCoefficients g = apply_word(prefix, unit(letter, rank));
        if (!positive(g)) throw PreconditionError("enumerate_positive_roots: word is not reduced (negative root)");
        if (!seen.insert(g).second) throw PreconditionError("enumerate_positive_roots: word is not reduced (repeated root)");
        out.push_back(std::move(g));
        prefix.letters.push_back(letter);
    }
    return out;
}

Word coxeter_element(const Orientation& orientation) {
    const std::size_t k = orientation.vertex_count();
    std::vector<bool> used(k, false);
    Orientation current = orientation;
    Word w;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (!used[i] && current.is_sink(i)) {
                pick = i;
                break;
            }
        }
        if (pick == k) throw ConstructionError("coxeter_element: no unused sink");
        used[pick] = true;
        w.letters.push_back(pick);
        current = current.reflected(pick);
    }
    return w;
}

Word adapted_longest_word(const Orientation& orientation) {
    const std::size_t k = orientation.vertex_count();
    const std::size_t total = k * (k + 1) / 2;
    const Word cox = coxeter_element(orientation);
    Orientation current = orientation;
    Word w;
    std::set<RootCoefficients> seen;
    while (w.size() < total) {
        bool progress = false;
        for (std::size_t letter : cox.letters) {
            if (w.size() == total) break;
            if (!current.is_sink(letter)) continue;
            RootCoefficients g = apply_word(w, unit(letter, k));
            if (!positive(g) || seen.count(g)) continue;
            seen.insert(g);
            w.letters.push_back(letter);
            current = current.reflected(letter);
            progress = true;
        }
        if (!progress) throw ConstructionError("adapted_longest_word: no admissible letter in a full Coxeter round");
    }
    return w;
}

bool is_adapted(const Word& word, const Orientation& orientation) {
    Orientation current = orientation;
    for (std::size_t letter : word.letters) {
        if (letter >= current.vertex_count() || !current.is_sink(letter)) return false;
        current = current.reflected(letter);
    }
    return true;
}

std::string SimpleSystem::to_string(bool ascii) const {
    std::string s;
    for (std::size_t j = 0; j < roots_.size(); ++j) s += (j ? ", " : "") + roots_[j].name(ascii);
    return s;
}

SimpleSystem reflect_sequence(const SimpleSystem& pi, const std::vector<std::size_t>& vertices) {
    SimpleSystem out = pi;
    for (std::size_t v : vertices) out = out.reflect(v);
    return out;
}

namespace {

// Compositions of `total` into `parts` positive pieces, as cumulative sums.
void breakpoints(std::size_t total, std::size_t parts, std::vector<std::size_t>& prefix,
                 std::vector<std::vector<std::size_t>>& out) {
    const std::size_t done = prefix.empty() ? 0 : prefix.back();
    if (prefix.size() + 1 == parts) {
        if (done < total) {
            prefix.push_back(total);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (std::size_t next = done + 1; next < total; ++next) {
        prefix.push_back(next);
        breakpoints(total, parts, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    if (parts >= 1 && parts <= total) breakpoints(total, parts, prefix, out);
    return out;
}

}  // namespace

std::vector<SimpleSystem> sample_simple_systems(const SuperRootSystem& rs, std::size_t limit) {
    std::vector<SimpleSystem> out;
    auto push = [&](const SimpleSystem& pi) {
        if (out.size() >= limit) return;
        if (std::find(out.begin(), out.end(), pi) == out.end()) out.push_back(pi);
    };
    push(SimpleSystem::distinguished(rs));
    for (bool negative : {false, true}) {
        for (std::size_t blocks = 1; blocks <= rs.n(); ++blocks) {
            for (std::size_t tblocks : {blocks - 1, blocks}) {
                if (tblocks == 0 || tblocks > rs.m()) continue;
                for (const auto& s : compositions(rs.n(), blocks))
                    for (const auto& t : compositions(rs.m(), tblocks)) push(SimpleSystem::from_st(rs, s, t, negative));
            }
        }
    }
    for (std::size_t head = 0; head < out.size() && out.size() < limit; ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) push(out[head].reflect(i));
    }
    return out;
}

}  // namespace superquiver
